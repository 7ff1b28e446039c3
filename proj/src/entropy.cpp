#include "entgeo/entropy.hpp"
#include "entgeo/errors.hpp"
#include "entgeo/models.hpp"

#include <cmath>
#include <sstream>

namespace entgeo {

namespace {

constexpr double kLogTiny = -690.77552789821368; // ln(1e-300)

void normalization_check(const ParametricFamily& family, const Eigen::VectorXd& theta,
                         const QuadratureSpec& quad) {
    Eigen::VectorXd center, scales;
    family.envelope(theta, center, scales);
    QuadResult norm = integrate(
        [&](const Eigen::VectorXd& x) { return std::exp(family.log_density(x, theta)); },
        center, scales, quad);
    if (std::abs(norm.value - 1.0) > 1e-6) {
        std::ostringstream os;
        os << family.name << ": density integrates to " << norm.value
           << ", not normalized";
        throw domain_error(os.str());
    }
}

} // namespace

QuadResult entropy_sg(const GroupClass& cls, const ParametricFamily& family,
                      const Eigen::VectorXd& theta, const QuadratureSpec& quad) {
    check_theta(family, theta);
    normalization_check(family, theta, quad);

    Eigen::VectorXd center, scales;
    family.envelope(theta, center, scales);
    return integrate(
        [&](const Eigen::VectorXd& x) {
            double lp = family.log_density(x, theta);
            if (lp < kLogTiny) return 0.0;
            return std::exp(lp) * cls.group_exp(-lp);
        },
        center, scales, quad);
}

QuadResult divergence_dg(const GroupClass& cls,
                         const ParametricFamily& p_family, const Eigen::VectorXd& p_theta,
                         const ParametricFamily& q_family, const Eigen::VectorXd& q_theta,
                         const QuadratureSpec& quad) {
    check_theta(p_family, p_theta);
    check_theta(q_family, q_theta);
    if (p_family.sample_dim != q_family.sample_dim) {
        std::ostringstream os;
        os << "divergence: sample spaces differ (" << p_family.name << " is "
           << p_family.sample_dim << "-dimensional, " << q_family.name << " is "
           << q_family.sample_dim << "-dimensional)";
        throw domain_error(os.str());
    }

    Eigen::VectorXd center, scales;
    p_family.envelope(p_theta, center, scales);
    try {
        return integrate(
            [&](const Eigen::VectorXd& x) {
                double lp = p_family.log_density(x, p_theta);
                if (lp < kLogTiny) return 0.0; // 0 * ln(0/q) convention
                double lq = q_family.log_density(x, q_theta);
                return std::exp(lp) * cls.group_exp(lp - lq);
            },
            center, scales, quad);
    } catch (const range_overflow_error& e) {
        std::ostringstream os;
        os << "divergence: integrand diverges inside the support overlap of "
           << p_family.name << " and " << q_family.name << " (" << e.what() << ")";
        throw domain_error(os.str());
    }
}

} // namespace entgeo
