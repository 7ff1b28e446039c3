#pragma once

#include <Eigen/Dense>
#include <functional>

namespace entgeo {

enum class QuadScheme {
    gauss_hermite_tensor, ///< tensor-product Gauss-Hermite, natural for Gaussian-type integrands
    adaptive_box          ///< composite Gauss-Legendre on a truncated box, refined by panel doubling
};

/// Configuration for integrals over R^n. `order` is the node count per axis
/// for the tensor scheme; `box_halfwidth` is the truncation radius of the
/// adaptive scheme, in units of the per-axis scale.
struct QuadratureSpec {
    QuadScheme scheme = QuadScheme::gauss_hermite_tensor;
    int order = 64;
    double box_halfwidth = 12.0;
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    /// Refinement steps allowed beyond the starting order/panel count.
    /// 0 pins evaluation at exactly `order` (err_est still reported, never
    /// acted upon) -- used to keep metric fields smooth under nested
    /// differentiation.
    int max_refinements = 3;

    void validate() const;

    /// Spec evaluating at a fixed order with refinement and tolerance
    /// enforcement disabled.
    static QuadratureSpec pinned(int order);
};

struct QuadResult {
    double value = 0.0;
    double err_est = 0.0;
    int order_used = 0;
};

using Integrand = std::function<double(const Eigen::VectorXd&)>;

/// Integrate f over R^n against nothing (plain Lebesgue integral of f).
/// `weight_center` / `weight_scales` describe a Gaussian envelope that f is
/// expected to decay like; nodes are placed accordingly. n <= 4.
///
/// err_est comes from the difference between successive refinement levels.
/// Throws convergence_error if tolerance is not met within the refinement
/// budget, range_overflow_error / domain_error propagate from f.
QuadResult integrate(const Integrand& f,
                     const Eigen::VectorXd& weight_center,
                     const Eigen::VectorXd& weight_scales,
                     const QuadratureSpec& spec);

namespace detail {
/// Gauss-Hermite rule prepared for integrating plain functions:
/// integral f(x) dx ~= sum_i w[i] * f(t[i]) after x = c + sqrt(2)*s*t
/// substitution (the e^{t^2} factor is already folded into w).
struct HermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights; // modified weights w_i * exp(t_i^2)
};
const HermiteRule& hermite_rule(int order);
} // namespace detail

} // namespace entgeo
