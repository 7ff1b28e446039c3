#pragma once

#include <Eigen/Dense>

namespace entgeo {

/// Symmetric matrix attached to a parameter point. The checked factory
/// enforces positive definiteness (smallest eigenvalue above 1e-10 * trace);
/// a violation throws not_positive_definite carrying the spectrum. The
/// flagged factory keeps indefinite matrices around for diagnostics (group
/// Hessians with a nonpositive proportionality factor) but marks them
/// non-Riemannian; inverse() refuses to act on those.
class MetricTensor {
public:
    static MetricTensor checked(Eigen::VectorXd theta, Eigen::MatrixXd g);
    static MetricTensor flagged(Eigen::VectorXd theta, Eigen::MatrixXd g);

    const Eigen::VectorXd& theta() const { return theta_; }
    const Eigen::MatrixXd& matrix() const { return g_; }
    const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
    double condition_estimate() const { return condition_; }
    bool positive_definite() const { return positive_definite_; }
    int dim() const { return int(g_.rows()); }

    /// Cholesky-based inverse; throws not_positive_definite when flagged.
    Eigen::MatrixXd inverse() const;

private:
    MetricTensor() = default;

    Eigen::VectorXd theta_;
    Eigen::MatrixXd g_;
    Eigen::VectorXd eigenvalues_;
    double condition_ = 0.0;
    bool positive_definite_ = false;
};

} // namespace entgeo
