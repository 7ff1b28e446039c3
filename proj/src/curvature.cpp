#include "entgeo/curvature.hpp"
#include "entgeo/errors.hpp"
#include "entgeo/fisher.hpp"
#include "entgeo/models.hpp"

#include <cmath>
#include <sstream>

namespace entgeo {

double ChristoffelSymbols::max_abs_diff(const ChristoffelSymbols& other) const {
    double worst = 0.0;
    for (size_t i = 0; i < gamma.size(); ++i)
        worst = std::max(worst, (gamma[i] - other.gamma[i]).cwiseAbs().maxCoeff());
    return worst;
}

ChristoffelSymbols christoffel(const MetricField& field, const Eigen::VectorXd& theta,
                               const FdSpec& fd) {
    const int m = int(theta.size());
    MetricTensor g0 = field(theta);
    Eigen::MatrixXd ginv = g0.inverse();
    std::vector<Eigen::MatrixXd> dg = metric_field_derivatives(field, theta, fd);

    ChristoffelSymbols out;
    out.gamma.assign(m, Eigen::MatrixXd::Zero(m, m));
    for (int i = 0; i < m; ++i) {
        for (int k = 0; k < m; ++k) {
            for (int l = k; l < m; ++l) {
                double s = 0.0;
                for (int mm = 0; mm < m; ++mm)
                    s += ginv(i, mm) * (dg[l](mm, k) + dg[k](mm, l) - dg[mm](k, l));
                out.gamma[i](k, l) = out.gamma[i](l, k) = 0.5 * s;
            }
        }
    }
    return out;
}

namespace {

// Outer step for differentiating the Christoffel field: the Gammas already
// carry inner-difference noise of order eps/h, so the optimal outer step is
// substantially larger than the inner one.
double outer_step(double base_step) { return std::pow(base_step, 2.0 / 3.0); }

Eigen::MatrixXd ricci_from(const MetricField& field, const Eigen::VectorXd& theta,
                           const FdSpec& fd, const ChristoffelSymbols& gamma0,
                           double* asymmetry) {
    const int m = int(theta.size());

    auto dgamma_pass = [&](double scale) {
        // dGamma[c][i](a,b) = d Gamma^i_ab / d theta^c
        std::vector<std::vector<Eigen::MatrixXd>> d(m);
        for (int c = 0; c < m; ++c) {
            double h = scale * (1.0 + std::abs(theta(c)));
            Eigen::VectorXd p = theta;
            p(c) += h;
            ChristoffelSymbols plus = christoffel(field, p, fd);
            p = theta;
            p(c) -= h;
            ChristoffelSymbols minus = christoffel(field, p, fd);
            d[c].resize(m);
            for (int i = 0; i < m; ++i)
                d[c][i] = (plus.gamma[i] - minus.gamma[i]) / (2.0 * h);
        }
        return d;
    };

    double h0 = outer_step(fd.base_step);
    auto dgamma = dgamma_pass(h0);
    if (fd.richardson) {
        auto fine = dgamma_pass(0.5 * h0);
        for (int c = 0; c < m; ++c)
            for (int i = 0; i < m; ++i)
                dgamma[c][i] = (4.0 * fine[c][i] - dgamma[c][i]) / 3.0;
    }

    Eigen::MatrixXd r(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            double term = 0.0;
            for (int l = 0; l < m; ++l) term += dgamma[l][l](i, j);
            for (int l = 0; l < m; ++l) term -= dgamma[j][l](i, l);
            for (int mm = 0; mm < m; ++mm)
                for (int l = 0; l < m; ++l)
                    term += gamma0.gamma[mm](i, j) * gamma0.gamma[l](l, mm) -
                            gamma0.gamma[mm](i, l) * gamma0.gamma[l](j, mm);
            r(i, j) = term;
        }
    }
    if (asymmetry) *asymmetry = (r - r.transpose().eval()).cwiseAbs().maxCoeff();
    return 0.5 * (r + r.transpose().eval());
}

} // namespace

Eigen::MatrixXd ricci(const MetricField& field, const Eigen::VectorXd& theta,
                      const FdSpec& fd, GeometryDiagnostics* diag) {
    ChristoffelSymbols gamma0 = christoffel(field, theta, fd);
    double asym = 0.0;
    Eigen::MatrixXd r = ricci_from(field, theta, fd, gamma0, &asym);
    if (diag) {
        diag->metric_step = fd.base_step;
        diag->gamma_step = outer_step(fd.base_step);
        diag->ricci_asymmetry = asym;
    }
    return r;
}

double scalar_curvature(const MetricField& field, const Eigen::VectorXd& theta,
                        const FdSpec& fd, GeometryDiagnostics* diag) {
    Eigen::MatrixXd r = ricci(field, theta, fd, diag);
    Eigen::MatrixXd ginv = field(theta).inverse();
    return (ginv * r).trace();
}

MetricField make_metric_field(const GroupClass& cls, const ParametricFamily& family,
                              const Eigen::VectorXd& theta_ref, const QuadratureSpec& quad,
                              bool force_quadrature, GeometryDiagnostics* diag) {
    if (!(cls.phi_factor() > 0.0)) {
        std::ostringstream os;
        os << "metric field undefined for " << cls.describe()
           << ": factor G'(0)+G''(0) = " << cls.phi_factor() << " is not positive";
        throw domain_error(os.str());
    }
    check_theta(family, theta_ref);
    const double phi = cls.phi_factor();

    if (family.closed_form_metric && !force_quadrature) {
        if (diag) diag->quad_order = 0;
        auto closed = family.closed_form_metric;
        return [closed, phi](const Eigen::VectorXd& theta) {
            return MetricTensor::checked(theta, phi * closed(theta));
        };
    }

    // Pin the quadrature order found at the reference point so the field is
    // smooth across FD stencils.
    MetricTensor probe = fisher_metric_expectation(family, theta_ref, quad);
    Eigen::VectorXd center, scales;
    family.envelope(theta_ref, center, scales);
    QuadResult norm = integrate(
        [&](const Eigen::VectorXd& x) { return std::exp(family.log_density(x, theta_ref)); },
        center, scales, quad);
    QuadratureSpec pinned = QuadratureSpec::pinned(norm.order_used);
    if (diag) {
        diag->quad_order = norm.order_used;
        diag->quad_err = norm.err_est;
    }
    ParametricFamily fam = family;
    return [fam, phi, pinned](const Eigen::VectorXd& theta) {
        MetricTensor base = fisher_metric_expectation(fam, theta, pinned);
        return MetricTensor::checked(theta, phi * base.matrix());
    };
}

GeometryReport geometry_report(const GroupClass& cls, const ParametricFamily& family,
                               const Eigen::VectorXd& theta, const FdSpec& fd,
                               const QuadratureSpec& quad) {
    // Two nested differentiations amplify noise; raise the defaults.
    FdSpec fd_curv = fd;
    fd_curv.richardson = true;
    QuadratureSpec quad_curv = quad;
    quad_curv.order = std::max(quad.order, 32);

    GeometryDiagnostics diag;
    MetricField field = make_metric_field(cls, family, theta, quad_curv, false, &diag);

    GeometryReport report{
        .theta = theta,
        .metric = field(theta),
        .christoffel = christoffel(field, theta, fd_curv),
        .ricci = Eigen::MatrixXd(),
        .scalar_curvature = 0.0,
        .class_used = cls,
        .diagnostics = diag,
    };
    report.ricci = ricci(field, theta, fd_curv, &report.diagnostics);
    report.diagnostics.quad_order = diag.quad_order;
    report.diagnostics.quad_err = diag.quad_err;
    Eigen::MatrixXd ginv = report.metric.inverse();
    report.scalar_curvature = (ginv * report.ricci).trace();
    return report;
}

} // namespace entgeo
