#pragma once

#include "entgeo/family.hpp"
#include "entgeo/group.hpp"
#include "entgeo/quadrature.hpp"

namespace entgeo {

/// Entropy-group functional S_G(p) = integral p(x) G(-ln p(x)) dx.
/// The density is checked to integrate to one (within 1e-6) before the
/// entropy integral runs. Composition law for independent subsystems:
/// S_G(p_A p_B) = Phi(S_G(p_A), S_G(p_B)).
QuadResult entropy_sg(const GroupClass& cls, const ParametricFamily& family,
                      const Eigen::VectorXd& theta, const QuadratureSpec& quad);

/// Relative entropy group D_G(p||q) = integral p(x) G(ln(p(x)/q(x))) dx.
/// Reduces to Kullback-Leibler for the Boltzmann class; zero for identical
/// arguments. The integrand is defined as 0 wherever p < 1e-300 (the
/// 0 ln(0/q) = 0 convention); a q that vanishes where p does not surfaces
/// as a range/domain error naming the offending region.
QuadResult divergence_dg(const GroupClass& cls,
                         const ParametricFamily& p_family, const Eigen::VectorXd& p_theta,
                         const ParametricFamily& q_family, const Eigen::VectorXd& q_theta,
                         const QuadratureSpec& quad);

} // namespace entgeo
