#pragma once

#include "entgeo/metric.hpp"

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace entgeo {

enum class FdScheme { central_2nd_order, central_4th_order };

/// Finite-difference configuration. Steps are scaled per coordinate by
/// (1 + |theta_k|); the default base step cbrt(eps) balances truncation
/// against roundoff for 2nd-order central differences.
struct FdSpec {
    double base_step = 6.0554544523933395e-06; // cbrt(2^-52)
    FdScheme scheme = FdScheme::central_2nd_order;
    bool richardson = false;

    void validate() const;
};

using ScalarField = std::function<double(const Eigen::VectorXd&)>;
using VectorField = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
using MetricField = std::function<MetricTensor(const Eigen::VectorXd&)>;

/// Central-difference Hessian, symmetrized. With richardson=true the h and
/// h/2 stencils are extrapolated. Non-finite samples raise domain_error
/// naming the offending stencil point.
Eigen::MatrixXd hessian_fd(const ScalarField& f, const Eigen::VectorXd& theta0,
                           const FdSpec& spec);

/// Central-difference Jacobian of a vector-valued function; rows index
/// output components, columns the differentiated coordinate.
Eigen::MatrixXd jacobian_fd(const VectorField& f, const Eigen::VectorXd& theta0,
                            const FdSpec& spec);

/// Gradient of a scalar field (one row of jacobian_fd, kept separate for
/// convenience).
Eigen::VectorXd gradient_fd(const ScalarField& f, const Eigen::VectorXd& theta0,
                            const FdSpec& spec);

/// dg[k](i,j) = d g_ij / d theta^k evaluated by central differences on the
/// metric field.
std::vector<Eigen::MatrixXd> metric_field_derivatives(const MetricField& field,
                                                      const Eigen::VectorXd& theta0,
                                                      const FdSpec& spec);

} // namespace entgeo
