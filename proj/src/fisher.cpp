#include "entgeo/fisher.hpp"
#include "entgeo/entropy.hpp"
#include "entgeo/errors.hpp"
#include "entgeo/models.hpp"

#include <cmath>
#include <sstream>

namespace entgeo {

namespace {

// Parameter score vector d ln p / d theta at fixed x: the family's closed
// form when present, central differences otherwise.
void parameter_score(const ParametricFamily& family, const Eigen::VectorXd& x,
                     const Eigen::VectorXd& theta, double base_step,
                     Eigen::VectorXd& score, Eigen::VectorXd& work) {
    const int m = family.param_dim;
    if (family.param_score) {
        for (int j = 0; j < m; ++j) score(j) = family.param_score(x, theta, j);
        return;
    }
    for (int j = 0; j < m; ++j) {
        double h = base_step * (1.0 + std::abs(theta(j)));
        work = theta;
        work(j) += h;
        double lp = family.log_density(x, work);
        work(j) -= 2.0 * h;
        double lm = family.log_density(x, work);
        score(j) = (lp - lm) / (2.0 * h);
    }
}

} // namespace

MetricTensor fisher_metric_expectation(const ParametricFamily& family,
                                       const Eigen::VectorXd& theta,
                                       const QuadratureSpec& quad) {
    check_theta(family, theta);
    const int m = family.param_dim;
    const double step = FdSpec{}.base_step;

    Eigen::VectorXd center, scales;
    family.envelope(theta, center, scales);

    Eigen::MatrixXd g(m, m);
    Eigen::VectorXd score(m), work(m);
    auto entry = [&](int j, int k, const QuadratureSpec& spec) {
        return integrate(
                   [&](const Eigen::VectorXd& x) {
                       double lp = family.log_density(x, theta);
                       parameter_score(family, x, theta, step, score, work);
                       return std::exp(lp) * score(j) * score(k);
                   },
                   center, scales, spec)
            .value;
    };
    for (int j = 0; j < m; ++j) g(j, j) = entry(j, j, quad);
    for (int j = 0; j < m; ++j) {
        for (int k = j + 1; k < m; ++k) {
            // Off-diagonal entries may vanish; judge their convergence
            // against the metric's own scale instead of the raw value.
            QuadratureSpec scaled = quad;
            scaled.abs_tol = std::max(quad.abs_tol,
                                      quad.rel_tol * std::sqrt(g(j, j) * g(k, k)));
            g(j, k) = g(k, j) = entry(j, k, scaled);
        }
    }
    return MetricTensor::checked(theta, g);
}

HessianMetricResult fisher_metric_group_hessian(const GroupClass& cls,
                                                const ParametricFamily& family,
                                                const Eigen::VectorXd& theta,
                                                const FdSpec& fd,
                                                const QuadratureSpec& quad) {
    check_theta(family, theta);
    if (cls.phi_is_zero()) {
        std::ostringstream os;
        os << "group Hessian metric is degenerate for " << cls.describe()
           << ": G'(0)+G''(0) = 0";
        throw domain_error(os.str());
    }

    // Quadrature nodes follow the p-side envelope, which stays smooth in
    // theta' across the stencil. Probe the normalization integral (same
    // difficulty class as the divergence integrand) for the refinement
    // level, then pin it so every stencil evaluation uses one fixed rule.
    Eigen::VectorXd center, scales;
    family.envelope(theta, center, scales);
    QuadResult probe = integrate(
        [&](const Eigen::VectorXd& x) { return std::exp(family.log_density(x, theta)); },
        center, scales, quad);
    QuadratureSpec pinned = QuadratureSpec::pinned(probe.order_used);

    ScalarField divergence_about_theta = [&](const Eigen::VectorXd& moved) {
        return divergence_dg(cls, family, moved, family, theta, pinned).value;
    };
    Eigen::MatrixXd hess = hessian_fd(divergence_about_theta, theta, fd);

    const double phi = cls.phi_factor();
    const bool riemannian = phi > 0.0;
    MetricTensor metric = riemannian ? MetricTensor::checked(theta, hess)
                                     : MetricTensor::flagged(theta, hess);
    return HessianMetricResult{std::move(metric), phi, riemannian};
}

MetricTensor group_metric(const GroupClass& cls, const ParametricFamily& family,
                          const Eigen::VectorXd& theta, const QuadratureSpec& quad) {
    if (cls.phi_is_zero() || cls.phi_is_negative()) {
        std::ostringstream os;
        os << "group metric undefined for " << cls.describe() << ": factor G'(0)+G''(0) = "
           << cls.phi_factor()
           << " is not positive; use the divergence-Hessian estimator for diagnostics";
        throw domain_error(os.str());
    }
    MetricTensor base = fisher_metric_expectation(family, theta, quad);
    return MetricTensor::checked(theta, cls.phi_factor() * base.matrix());
}

} // namespace entgeo
