#pragma once

#include "entgeo/family.hpp"
#include "entgeo/finite_diff.hpp"
#include "entgeo/group.hpp"
#include "entgeo/metric.hpp"
#include "entgeo/quadrature.hpp"

#include <vector>

namespace entgeo {

/// Christoffel symbols of the second kind, gamma[i](k,l) = Gamma^i_{kl},
/// symmetric in (k,l) by construction.
struct ChristoffelSymbols {
    std::vector<Eigen::MatrixXd> gamma;

    int dim() const { return int(gamma.size()); }
    double max_abs_diff(const ChristoffelSymbols& other) const;
};

/// Numerical settings actually used by a geometry computation, for
/// reporting.
struct GeometryDiagnostics {
    double metric_step = 0.0;   // inner step for metric derivatives
    double gamma_step = 0.0;    // outer step for Christoffel derivatives
    int quad_order = 0;         // 0 when a closed-form metric field was used
    double quad_err = 0.0;
    double ricci_asymmetry = 0.0;
};

/// Gamma^i_{kl} = (1/2) g^{im} (g_mk,l + g_ml,k - g_kl,m) with the metric
/// derivatives from central differences on the field.
ChristoffelSymbols christoffel(const MetricField& field, const Eigen::VectorXd& theta,
                               const FdSpec& fd);

/// Ricci tensor R_ij = Gamma^l_ij,l - Gamma^l_il,j
///                   + Gamma^m_ij Gamma^l_lm - Gamma^m_il Gamma^l_jm.
/// The Gamma derivatives use an outer step base_step^(2/3), which keeps the
/// nested-difference noise amplification in check.
Eigen::MatrixXd ricci(const MetricField& field, const Eigen::VectorXd& theta,
                      const FdSpec& fd, GeometryDiagnostics* diag = nullptr);

/// Scalar curvature R = g^ij R_ij.
double scalar_curvature(const MetricField& field, const Eigen::VectorXd& theta,
                        const FdSpec& fd, GeometryDiagnostics* diag = nullptr);

/// Metric field for a (class, family) pair: phi * closed-form metric when
/// the family carries one, otherwise phi times the score-expectation
/// estimator with the quadrature order pinned at theta_ref (adaptive
/// refinement inside an FD stencil would make the field non-smooth).
/// Requires phi > 0.
MetricField make_metric_field(const GroupClass& cls, const ParametricFamily& family,
                              const Eigen::VectorXd& theta_ref, const QuadratureSpec& quad,
                              bool force_quadrature = false,
                              GeometryDiagnostics* diag = nullptr);

/// Everything geometric at one parameter point.
struct GeometryReport {
    Eigen::VectorXd theta;
    MetricTensor metric;
    ChristoffelSymbols christoffel;
    Eigen::MatrixXd ricci;
    double scalar_curvature = 0.0;
    GroupClass class_used;
    GeometryDiagnostics diagnostics;
};

/// Curvature paths raise the defaults automatically: Richardson
/// extrapolation on, quadrature order at least 32.
GeometryReport geometry_report(const GroupClass& cls, const ParametricFamily& family,
                               const Eigen::VectorXd& theta, const FdSpec& fd,
                               const QuadratureSpec& quad);

} // namespace entgeo
