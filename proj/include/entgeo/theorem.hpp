#pragma once

#include "entgeo/curvature.hpp"

#include <string>

namespace entgeo {

/// Numerical check that the group Riemannian structure is the Boltzmann one
/// rescaled: g_G = phi g_B, Gamma_G = Gamma_B, Ric_G = Ric_B, R_G = R_B/phi
/// with phi = G'(0)+G''(0) != 0. The metric check compares the
/// divergence-Hessian estimator against phi times the score-expectation
/// metric; the geometric checks run the full FD pipeline on both fields
/// independently.
struct TheoremReport {
    std::string class_name;
    double phi = 1.0;

    double metric_ratio_error = 0.0;     // |hessian - phi*expectation| / scale
    double christoffel_max_diff = 0.0;   // max |Gamma_G - Gamma_B|
    double ricci_max_diff = 0.0;         // max |Ric_G - Ric_B|
    double curvature_scaling_error = 0.0; // |R_G - R_B/phi| / |R_B/phi|

    double curvature_boltzmann = 0.0;
    double curvature_group = 0.0;

    // Pass thresholds, fixed here so reports are self-describing.
    double tol_metric = 1e-4;
    double tol_christoffel = 1e-6;
    double tol_ricci = 1e-4;
    double tol_curvature = 1e-3;

    bool metric_pass = false;
    bool christoffel_pass = false;
    bool ricci_pass = false;
    bool curvature_pass = false;
    bool all_pass() const {
        return metric_pass && christoffel_pass && ricci_pass && curvature_pass;
    }
};

/// Throws domain_error when phi = 0 (the theorem does not apply).
TheoremReport verify_theorem(const GroupClass& cls, const ParametricFamily& family,
                             const Eigen::VectorXd& theta, const FdSpec& fd,
                             const QuadratureSpec& quad);

} // namespace entgeo
