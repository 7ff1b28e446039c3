#pragma once

#include "entgeo/family.hpp"
#include "entgeo/finite_diff.hpp"
#include "entgeo/group.hpp"
#include "entgeo/metric.hpp"
#include "entgeo/quadrature.hpp"

namespace entgeo {

/// Score-expectation estimator: g_jk = E[ d_j ln p * d_k ln p ] under
/// p(.;theta), with the parameter scores taken by central differences of
/// the log density at every quadrature node. Throws not_positive_definite
/// (with the spectrum) if quadrature under-resolution produces a
/// non-Riemannian result.
MetricTensor fisher_metric_expectation(const ParametricFamily& family,
                                       const Eigen::VectorXd& theta,
                                       const QuadratureSpec& quad);

/// Result of the divergence-Hessian estimator. For phi <= 0 the Hessian is
/// still computed but cannot be a Riemannian metric; it is returned flagged
/// instead of silently failing.
struct HessianMetricResult {
    MetricTensor metric;  // flagged non-PD when phi <= 0
    double phi = 1.0;
    bool riemannian = true;
};

/// Hessian of theta' -> D_G(p(theta') || p(theta)) at theta' = theta. Equals
/// phi times the score-expectation metric. Throws domain_error when phi = 0
/// (degenerate metric).
HessianMetricResult fisher_metric_group_hessian(const GroupClass& cls,
                                                const ParametricFamily& family,
                                                const Eigen::VectorXd& theta,
                                                const FdSpec& fd,
                                                const QuadratureSpec& quad);

/// Fast path: phi * fisher_metric_expectation. Requires phi > 0; otherwise
/// throws domain_error directing callers to the Hessian estimator for
/// diagnostics.
MetricTensor group_metric(const GroupClass& cls, const ParametricFamily& family,
                          const Eigen::VectorXd& theta, const QuadratureSpec& quad);

} // namespace entgeo
