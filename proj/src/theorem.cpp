#include "entgeo/theorem.hpp"
#include "entgeo/errors.hpp"
#include "entgeo/fisher.hpp"
#include "entgeo/models.hpp"

#include <cmath>
#include <sstream>

namespace entgeo {

TheoremReport verify_theorem(const GroupClass& cls, const ParametricFamily& family,
                             const Eigen::VectorXd& theta, const FdSpec& fd,
                             const QuadratureSpec& quad) {
    check_theta(family, theta);
    if (cls.phi_is_zero()) {
        std::ostringstream os;
        os << "theorem inapplicable for " << cls.describe() << ": G'(0)+G''(0) = 0";
        throw domain_error(os.str());
    }

    TheoremReport report;
    report.class_name = cls.describe();
    report.phi = cls.phi_factor();

    // Metric proportionality: independent estimators on both sides.
    MetricTensor expectation = fisher_metric_expectation(family, theta, quad);
    HessianMetricResult hessian = fisher_metric_group_hessian(cls, family, theta, fd, quad);
    Eigen::MatrixXd scaled = report.phi * expectation.matrix();
    double scale = scaled.cwiseAbs().maxCoeff();
    report.metric_ratio_error =
        (hessian.metric.matrix() - scaled).cwiseAbs().maxCoeff() / scale;

    // Geometry of the two fields through the full FD pipeline.
    FdSpec fd_curv = fd;
    fd_curv.richardson = true;
    QuadratureSpec quad_curv = quad;
    quad_curv.order = std::max(quad.order, 32);

    GroupClass boltzmann = GroupClass::boltzmann();
    MetricField field_b = make_metric_field(boltzmann, family, theta, quad_curv);
    MetricField field_g = make_metric_field(cls, family, theta, quad_curv);

    ChristoffelSymbols gamma_b = christoffel(field_b, theta, fd_curv);
    ChristoffelSymbols gamma_g = christoffel(field_g, theta, fd_curv);
    report.christoffel_max_diff = gamma_b.max_abs_diff(gamma_g);

    Eigen::MatrixXd ric_b = ricci(field_b, theta, fd_curv);
    Eigen::MatrixXd ric_g = ricci(field_g, theta, fd_curv);
    report.ricci_max_diff = (ric_b - ric_g).cwiseAbs().maxCoeff();

    report.curvature_boltzmann = (field_b(theta).inverse() * ric_b).trace();
    report.curvature_group = (field_g(theta).inverse() * ric_g).trace();
    double expected = report.curvature_boltzmann / report.phi;
    report.curvature_scaling_error =
        std::abs(report.curvature_group - expected) / std::abs(expected);

    double ricci_scale = std::max(1.0, ric_b.cwiseAbs().maxCoeff());
    report.metric_pass = report.metric_ratio_error <= report.tol_metric;
    report.christoffel_pass = report.christoffel_max_diff <= report.tol_christoffel;
    report.ricci_pass = report.ricci_max_diff <= report.tol_ricci * ricci_scale;
    report.curvature_pass = report.curvature_scaling_error <= report.tol_curvature;
    return report;
}

} // namespace entgeo
