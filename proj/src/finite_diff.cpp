#include "entgeo/finite_diff.hpp"
#include "entgeo/errors.hpp"

#include <cmath>
#include <sstream>

namespace entgeo {

namespace {

[[noreturn]] void bad_sample(const Eigen::VectorXd& point) {
    std::ostringstream os;
    os << "non-finite sample in finite-difference stencil at (";
    for (int i = 0; i < point.size(); ++i) os << (i ? ", " : "") << point(i);
    os << ")";
    throw domain_error(os.str());
}

double eval_checked(const ScalarField& f, const Eigen::VectorXd& p) {
    double v = f(p);
    if (!std::isfinite(v)) bad_sample(p);
    return v;
}

Eigen::VectorXd steps_for(const Eigen::VectorXd& theta, double base) {
    Eigen::VectorXd h(theta.size());
    for (int k = 0; k < theta.size(); ++k) h(k) = base * (1.0 + std::abs(theta(k)));
    return h;
}

Eigen::MatrixXd hessian_pass(const ScalarField& f, const Eigen::VectorXd& theta,
                             const Eigen::VectorXd& h, FdScheme scheme) {
    const int m = int(theta.size());
    Eigen::MatrixXd hess(m, m);
    Eigen::VectorXd p = theta;
    const double f0 = eval_checked(f, theta);

    auto at = [&](int i, double si, int j, double sj) {
        p = theta;
        p(i) += si * h(i);
        if (j >= 0) p(j) += sj * h(j);
        return eval_checked(f, p);
    };

    if (scheme == FdScheme::central_2nd_order) {
        for (int i = 0; i < m; ++i) {
            double fp = at(i, 1.0, -1, 0.0);
            double fm = at(i, -1.0, -1, 0.0);
            hess(i, i) = (fp - 2.0 * f0 + fm) / (h(i) * h(i));
        }
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                double fpp = at(i, 1.0, j, 1.0);
                double fpm = at(i, 1.0, j, -1.0);
                double fmp = at(i, -1.0, j, 1.0);
                double fmm = at(i, -1.0, j, -1.0);
                hess(i, j) = hess(j, i) = (fpp - fpm - fmp + fmm) / (4.0 * h(i) * h(j));
            }
        }
    } else {
        for (int i = 0; i < m; ++i) {
            double f2p = at(i, 2.0, -1, 0.0);
            double fp = at(i, 1.0, -1, 0.0);
            double fm = at(i, -1.0, -1, 0.0);
            double f2m = at(i, -2.0, -1, 0.0);
            hess(i, i) = (-f2p + 16.0 * fp - 30.0 * f0 + 16.0 * fm - f2m) / (12.0 * h(i) * h(i));
        }
        // Cross terms from the tensor product of two 4th-order first
        // derivative stencils.
        const double shift[4] = {-2.0, -1.0, 1.0, 2.0};
        const double coef[4] = {1.0 / 12.0, -8.0 / 12.0, 8.0 / 12.0, -1.0 / 12.0};
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                double s = 0.0;
                for (int a = 0; a < 4; ++a)
                    for (int b = 0; b < 4; ++b)
                        s += coef[a] * coef[b] * at(i, shift[a], j, shift[b]);
                hess(i, j) = hess(j, i) = s / (h(i) * h(j));
            }
        }
    }
    return 0.5 * (hess + hess.transpose().eval());
}

} // namespace

void FdSpec::validate() const {
    if (!(base_step > 0.0)) throw domain_error("fd base_step must be positive");
}

Eigen::MatrixXd hessian_fd(const ScalarField& f, const Eigen::VectorXd& theta0,
                           const FdSpec& spec) {
    spec.validate();
    Eigen::VectorXd h = steps_for(theta0, spec.base_step);
    Eigen::MatrixXd coarse = hessian_pass(f, theta0, h, spec.scheme);
    if (!spec.richardson) return coarse;
    Eigen::MatrixXd fine = hessian_pass(f, theta0, 0.5 * h, spec.scheme);
    double w = (spec.scheme == FdScheme::central_2nd_order) ? 4.0 : 16.0;
    return (w * fine - coarse) / (w - 1.0);
}

Eigen::MatrixXd jacobian_fd(const VectorField& f, const Eigen::VectorXd& theta0,
                            const FdSpec& spec) {
    spec.validate();
    const int m = int(theta0.size());
    Eigen::VectorXd h = steps_for(theta0, spec.base_step);

    auto check = [&](const Eigen::VectorXd& v, const Eigen::VectorXd& p) {
        if (!v.allFinite()) bad_sample(p);
        return v;
    };
    auto pass = [&](const Eigen::VectorXd& hh) {
        Eigen::MatrixXd jac;
        Eigen::VectorXd p = theta0;
        for (int k = 0; k < m; ++k) {
            Eigen::VectorXd col;
            if (spec.scheme == FdScheme::central_2nd_order) {
                p = theta0; p(k) += hh(k);
                Eigen::VectorXd fp = check(f(p), p);
                p = theta0; p(k) -= hh(k);
                Eigen::VectorXd fm = check(f(p), p);
                col = (fp - fm) / (2.0 * hh(k));
            } else {
                p = theta0; p(k) += 2.0 * hh(k);
                Eigen::VectorXd f2p = check(f(p), p);
                p = theta0; p(k) += hh(k);
                Eigen::VectorXd fp = check(f(p), p);
                p = theta0; p(k) -= hh(k);
                Eigen::VectorXd fm = check(f(p), p);
                p = theta0; p(k) -= 2.0 * hh(k);
                Eigen::VectorXd f2m = check(f(p), p);
                col = (-f2p + 8.0 * fp - 8.0 * fm + f2m) / (12.0 * hh(k));
            }
            if (jac.size() == 0) jac.resize(col.size(), m);
            jac.col(k) = col;
        }
        return jac;
    };

    Eigen::MatrixXd coarse = pass(h);
    if (!spec.richardson) return coarse;
    Eigen::MatrixXd fine = pass(0.5 * h);
    double w = (spec.scheme == FdScheme::central_2nd_order) ? 4.0 : 16.0;
    return (w * fine - coarse) / (w - 1.0);
}

Eigen::VectorXd gradient_fd(const ScalarField& f, const Eigen::VectorXd& theta0,
                            const FdSpec& spec) {
    VectorField wrapped = [&](const Eigen::VectorXd& t) {
        Eigen::VectorXd v(1);
        v(0) = f(t);
        return v;
    };
    return jacobian_fd(wrapped, theta0, spec).row(0);
}

std::vector<Eigen::MatrixXd> metric_field_derivatives(const MetricField& field,
                                                      const Eigen::VectorXd& theta0,
                                                      const FdSpec& spec) {
    spec.validate();
    const int m = int(theta0.size());
    Eigen::VectorXd h = steps_for(theta0, spec.base_step);

    auto pass = [&](const Eigen::VectorXd& hh) {
        std::vector<Eigen::MatrixXd> dg(m);
        Eigen::VectorXd p;
        for (int k = 0; k < m; ++k) {
            p = theta0; p(k) += hh(k);
            Eigen::MatrixXd gp = field(p).matrix();
            p = theta0; p(k) -= hh(k);
            Eigen::MatrixXd gm = field(p).matrix();
            dg[k] = (gp - gm) / (2.0 * hh(k));
            if (!dg[k].allFinite()) bad_sample(p);
        }
        return dg;
    };

    std::vector<Eigen::MatrixXd> coarse = pass(h);
    if (!spec.richardson) return coarse;
    std::vector<Eigen::MatrixXd> fine = pass(0.5 * h);
    for (int k = 0; k < m; ++k) fine[k] = (4.0 * fine[k] - coarse[k]) / 3.0;
    return fine;
}

} // namespace entgeo
