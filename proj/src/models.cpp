#include "entgeo/models.hpp"
#include "entgeo/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace entgeo {

namespace {

constexpr double kBoundaryMargin = 1e-9;
constexpr double kLog2Pi = 1.8378770664093453; // ln(2 pi)

} // namespace

void check_theta(const ParametricFamily& family, const Eigen::VectorXd& theta) {
    if (theta.size() != family.param_dim) {
        std::ostringstream os;
        os << family.name << ": expected " << family.param_dim << " parameters, got "
           << theta.size();
        throw domain_error(os.str());
    }
    for (int k = 0; k < family.param_dim; ++k) {
        auto [lo, hi] = family.param_domain[k];
        double v = theta(k);
        if (!std::isfinite(v) || v <= lo + kBoundaryMargin || v >= hi - kBoundaryMargin) {
            std::ostringstream os;
            os << family.name << ": parameter " << family.param_names[k] << " = " << v
               << " outside open domain (" << lo << ", " << hi << ")";
            throw domain_error(os.str());
        }
    }
}

ParametricFamily gaussian1d() {
    ParametricFamily f;
    f.name = "gauss1d";
    f.sample_dim = 1;
    f.param_dim = 2;
    f.param_names = {"mu", "sigma"};
    const double inf = std::numeric_limits<double>::infinity();
    f.param_domain = {{-inf, inf}, {0.0, inf}};
    f.log_density = [](const Eigen::VectorXd& x, const Eigen::VectorXd& theta) {
        double z = (x(0) - theta(0)) / theta(1);
        return -0.5 * kLog2Pi - std::log(theta(1)) - 0.5 * z * z;
    };
    f.envelope = [](const Eigen::VectorXd& theta, Eigen::VectorXd& center,
                    Eigen::VectorXd& scales) {
        center.resize(1);
        scales.resize(1);
        center(0) = theta(0);
        scales(0) = theta(1);
    };
    f.closed_form_metric = [](const Eigen::VectorXd& theta) {
        Eigen::Matrix2d g;
        double s2 = theta(1) * theta(1);
        g << 1.0 / s2, 0.0, 0.0, 2.0 / s2;
        return Eigen::MatrixXd(g);
    };
    f.sample_score = [](const Eigen::VectorXd& x, const Eigen::VectorXd& theta, int) {
        return -(x(0) - theta(0)) / (theta(1) * theta(1));
    };
    f.param_score = [](const Eigen::VectorXd& x, const Eigen::VectorXd& theta, int j) {
        double z = (x(0) - theta(0)) / theta(1);
        if (j == 0) return z / theta(1);
        return (z * z - 1.0) / theta(1);
    };
    f.default_theta = Eigen::Vector2d(0.0, 1.0);
    return f;
}

ParametricFamily gaussian1d(double mu, double sigma) {
    if (!(sigma > 0.0)) {
        std::ostringstream os;
        os << "gauss1d: sigma = " << sigma << " must be positive";
        throw domain_error(os.str());
    }
    ParametricFamily f = gaussian1d();
    f.default_theta = Eigen::Vector2d(mu, sigma);
    check_theta(f, f.default_theta);
    return f;
}

void Correlated2DParams::validate() const {
    if (!(std::abs(r) < 1.0 - kBoundaryMargin)) {
        std::ostringstream os;
        os << "corr2d: |r| = " << std::abs(r) << " must be < 1";
        throw domain_error(os.str());
    }
    if (!(sigma > kBoundaryMargin))
        throw domain_error("corr2d: sigma must be positive");
    if (!(Sigma > kBoundaryMargin))
        throw domain_error("corr2d: Sigma must be positive");
}

ParametricFamily correlated2d(const Correlated2DParams& params) {
    params.validate();
    ParametricFamily f;
    f.name = "corr2d";
    f.sample_dim = 2;
    f.param_dim = 2;
    f.param_names = {"mu", "sigma"};
    const double inf = std::numeric_limits<double>::infinity();
    f.param_domain = {{-inf, inf}, {0.0, inf}};
    f.fixed_constants = {{"r", params.r}, {"Sigma", params.Sigma}};

    const double r = params.r;
    const double S2 = params.Sigma * params.Sigma;
    const double one_m_r2 = 1.0 - r * r;
    const double log_norm = -kLog2Pi - std::log(S2) - 0.5 * std::log(one_m_r2);

    f.log_density = [r, S2, one_m_r2, log_norm](const Eigen::VectorXd& x,
                                                const Eigen::VectorXd& theta) {
        double u = x(0) - theta(0);
        double y = x(1);
        double s = theta(1);
        double quad = u * u / (s * s) + y * y * s * s / (S2 * S2) + 2.0 * r * u * y / S2;
        return log_norm - 0.5 * quad / one_m_r2;
    };
    f.envelope = [S2](const Eigen::VectorXd& theta, Eigen::VectorXd& center,
                      Eigen::VectorXd& scales) {
        center.resize(2);
        scales.resize(2);
        center << theta(0), 0.0;
        // Marginal standard deviations: sd_x = sigma, sd_y = Sigma^2/sigma.
        scales << theta(1), S2 / theta(1);
    };
    f.closed_form_metric = [one_m_r2](const Eigen::VectorXd& theta) {
        Eigen::Matrix2d g;
        double s2 = theta(1) * theta(1);
        g << 1.0 / (one_m_r2 * s2), 0.0, 0.0, 4.0 / (one_m_r2 * s2);
        return Eigen::MatrixXd(g);
    };
    f.sample_score = [r, S2, one_m_r2](const Eigen::VectorXd& x, const Eigen::VectorXd& theta,
                                       int axis) {
        double u = x(0) - theta(0);
        double y = x(1);
        double s = theta(1);
        if (axis == 0) return -(u / (s * s) + r * y / S2) / one_m_r2;
        return -(y * s * s / (S2 * S2) + r * u / S2) / one_m_r2;
    };
    f.param_score = [r, S2, one_m_r2](const Eigen::VectorXd& x, const Eigen::VectorXd& theta,
                                      int j) {
        double u = x(0) - theta(0);
        double y = x(1);
        double s = theta(1);
        if (j == 0) return (u / (s * s) + r * y / S2) / one_m_r2;
        return (u * u / (s * s * s) - s * y * y / (S2 * S2)) / one_m_r2;
    };
    f.default_theta = Eigen::Vector2d(params.mu_x, params.sigma);
    check_theta(f, f.default_theta);
    return f;
}

MetricTensor closed_form_metric_2dc(const Correlated2DParams& params) {
    params.validate();
    Eigen::Matrix2d g;
    double s2 = params.sigma * params.sigma;
    double one_m_r2 = 1.0 - params.r * params.r;
    g << 1.0 / (one_m_r2 * s2), 0.0, 0.0, 4.0 / (one_m_r2 * s2);
    return MetricTensor::checked(Eigen::Vector2d(params.mu_x, params.sigma), g);
}

void OscillatorEnsemble::validate() const {
    if (!(m1 > 0.0) || !(m2 > 0.0))
        throw domain_error("oscillator: masses must be positive");
    if (!(omega1 > 0.0) || !(omega2 > 0.0))
        throw domain_error("oscillator: frequencies must be positive");
    if (!(T0 > 0.0))
        throw domain_error("oscillator: reference temperature must be positive");
    if (!(T > 0.0))
        throw domain_error("oscillator: bath temperature must be positive");
    if (T > T0) {
        std::ostringstream os;
        os << "oscillator: T = " << T << " exceeds T0 = " << T0
           << " (correlation coefficient would be imaginary)";
        throw domain_error(os.str());
    }
}

Correlated2DParams oscillator_to_2dc(const OscillatorEnsemble& ens) {
    ens.validate();
    Correlated2DParams p;
    p.mu_x = ens.x10;
    p.sigma = std::sqrt(ens.T0 / (ens.m1 * ens.omega1 * ens.omega1));
    p.Sigma = std::sqrt(ens.T0 / (std::sqrt(ens.m1 * ens.m2) * ens.omega1 * ens.omega2));
    p.r = std::sqrt(1.0 - ens.T / ens.T0);
    return p;
}

double oscillator_marginal_log_density(const OscillatorEnsemble& ens, double x1, double x2) {
    ens.validate();
    const double beta = 1.0 / ens.T;
    const double coupling = -std::sqrt(1.0 - ens.T / ens.T0);
    const double u = x1 - ens.x10;
    const double v = x2 - ens.x20;
    const double k1 = ens.m1 * ens.omega1 * ens.omega1;
    const double k2 = ens.m2 * ens.omega2 * ens.omega2;
    const double kc = std::sqrt(ens.m1 * ens.m2) * ens.omega1 * ens.omega2;

    double potential = 0.5 * k1 * u * u + 0.5 * k2 * v * v - coupling * kc * u * v;
    // Z = 2 pi / sqrt(det(beta P)), P the precision matrix of the quadratic.
    double det_precision = beta * beta * (k1 * k2 - coupling * coupling * kc * kc);
    double log_z = kLog2Pi - 0.5 * std::log(det_precision);
    return -beta * potential - log_z;
}

double temperature_ratio_from_2dc(const Correlated2DParams& params) {
    params.validate();
    return 1.0 - params.r * params.r;
}

} // namespace entgeo
