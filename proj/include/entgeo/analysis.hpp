#pragma once

#include "entgeo/family.hpp"
#include "entgeo/finite_diff.hpp"
#include "entgeo/group.hpp"
#include "entgeo/quadrature.hpp"

#include <string>
#include <vector>

namespace entgeo {

/// Sample-space Fisher information I_F = E[(d ln p / dx)^2] for a family
/// with one-dimensional sample space. Uses the family's analytic score when
/// available, otherwise a 4th-order central difference in x.
double fisher_information_x(const ParametricFamily& family, const Eigen::VectorXd& theta,
                            const QuadratureSpec& quad);

/// Cramer-Rao / Fisher-Rao complexity report. `bound` is the group lower
/// bound phi = G'(0)+G''(0) (1 for the Boltzmann class); `satisfied` holds
/// when group_complexity >= bound - 1e-9 and complexity >= 1 - 1e-9.
/// Gaussians attain both equalities.
struct CriReport {
    std::string class_name;
    double variance = 0.0;
    double fisher_info = 0.0;        // I_F
    double group_fisher_info = 0.0;  // phi * I_F, exact by construction
    double complexity = 0.0;         // variance * I_F
    double group_complexity = 0.0;   // variance * phi * I_F
    double bound = 1.0;              // phi
    bool satisfied = false;
};

/// Requires phi >= 0 (Tsallis q <= 2, ABR a+b >= -1); classes with phi < 0
/// are refused with an error quoting the violated bound.
CriReport cri_report(const GroupClass& cls, const ParametricFamily& family,
                     const Eigen::VectorXd& theta, const QuadratureSpec& quad);

/// Softening / strengthening index pair, linked by (2-q_soft)(2-q_str) = 1.
struct IndexPair {
    double q_soft = 1.0; // 1 + r^2
    double q_str = 1.0;  // (1 - 2 r^2)/(1 - r^2)
    std::string source;  // "correlation" or "temperature"
};

/// q_soft = 1 + r^2, q_str = (1 - 2r^2)/(1 - r^2); |r| < 1.
IndexPair q_indices_from_r(double r);

/// Delegates to q_indices_from_r(sqrt(1 - t_ratio)) so both routes agree
/// bit for bit; t_ratio in (0, 1].
IndexPair q_indices_from_T(double t_ratio);

/// Numerical confirmation that the Tsallis class at q_soft(r) maps the
/// correlated model's geometry onto the uncorrelated one and q_str(r) maps
/// back, for both the metric and the scalar curvature.
struct SofteningReport {
    double r = 0.0;
    double q_soft = 1.0;
    double q_str = 1.0;
    double metric_soften_error = 0.0;    // Tsallis(q_soft) metric of corr vs Boltzmann uncorr
    double metric_strengthen_error = 0.0; // Tsallis(q_str) metric of uncorr vs Boltzmann corr
    double curvature_soften_value = 0.0;      // R of the corr model at q_soft
    double curvature_strengthen_value = 0.0;  // R of the uncorr model at q_str
    double curvature_soften_error = 0.0;  // |curvature_soften_value - (-1/2)|
    double curvature_strengthen_error = 0.0; // |curvature_strengthen_value - (-(1-r^2)/2)|
    double tol_metric = 1e-6;
    double tol_curvature = 1e-3;
    bool pass = false;
};

SofteningReport softening_limit_check(double r, const QuadratureSpec& quad, const FdSpec& fd);

/// One row of the temperature-index table. Ratio 0 is rendered as the
/// limiting row (q_soft = 2, q_str = -inf) and flagged.
struct Table1Row {
    double t_ratio = 0.0;
    double q_soft = 0.0;
    double q_str = 0.0;
    bool is_limit = false;
};

/// Rows for the given temperature ratios, each in (0, 1] or exactly 0 for
/// the limit row.
std::vector<Table1Row> table1(const std::vector<double>& t_ratios);

/// Number formatting used by the paper-style table rendering: integers
/// print bare, short decimal expansions print in full, non-terminating
/// ones are truncated toward zero at 4 decimals.
std::string paper_format_number(double v);

} // namespace entgeo
