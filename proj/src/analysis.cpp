#include "entgeo/analysis.hpp"
#include "entgeo/curvature.hpp"
#include "entgeo/errors.hpp"
#include "entgeo/fisher.hpp"
#include "entgeo/models.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace entgeo {

namespace {

double sample_score_or_fd(const ParametricFamily& family, const Eigen::VectorXd& x,
                          const Eigen::VectorXd& theta) {
    if (family.sample_score) return family.sample_score(x, theta, 0);
    double h = 6.0554544523933395e-06 * (1.0 + std::abs(x(0)));
    Eigen::VectorXd p = x;
    auto lp = [&](double v) {
        p(0) = v;
        return family.log_density(p, theta);
    };
    return (-lp(x(0) + 2.0 * h) + 8.0 * lp(x(0) + h) - 8.0 * lp(x(0) - h) + lp(x(0) - 2.0 * h)) /
           (12.0 * h);
}

} // namespace

double fisher_information_x(const ParametricFamily& family, const Eigen::VectorXd& theta,
                            const QuadratureSpec& quad) {
    check_theta(family, theta);
    if (family.sample_dim != 1)
        throw domain_error("fisher_information_x requires a 1D sample space");

    Eigen::VectorXd center, scales;
    family.envelope(theta, center, scales);
    return integrate(
               [&](const Eigen::VectorXd& x) {
                   double s = sample_score_or_fd(family, x, theta);
                   return std::exp(family.log_density(x, theta)) * s * s;
               },
               center, scales, quad)
        .value;
}

CriReport cri_report(const GroupClass& cls, const ParametricFamily& family,
                     const Eigen::VectorXd& theta, const QuadratureSpec& quad) {
    if (cls.phi_is_negative()) {
        std::ostringstream os;
        os << "Cramer-Rao operations require G'(0)+G''(0) >= 0; " << cls.describe()
           << " has factor " << cls.phi_factor();
        switch (cls.kind()) {
            case GroupKind::tsallis: os << " (violates q <= 2)"; break;
            case GroupKind::abe_borges_roditi: os << " (violates a+b >= -1)"; break;
            default: break;
        }
        throw domain_error(os.str());
    }
    check_theta(family, theta);
    if (family.sample_dim != 1)
        throw domain_error("cri_report requires a 1D sample space");

    Eigen::VectorXd center, scales;
    family.envelope(theta, center, scales);
    auto density = [&](const Eigen::VectorXd& x) {
        return std::exp(family.log_density(x, theta));
    };
    double mean = integrate([&](const Eigen::VectorXd& x) { return x(0) * density(x); },
                            center, scales, quad)
                      .value;
    double variance =
        integrate([&](const Eigen::VectorXd& x) {
                      double d = x(0) - mean;
                      return d * d * density(x);
                  },
                  center, scales, quad)
            .value;

    CriReport report;
    report.class_name = cls.describe();
    report.variance = variance;
    report.fisher_info = fisher_information_x(family, theta, quad);
    report.group_fisher_info = cls.phi_factor() * report.fisher_info;
    report.complexity = variance * report.fisher_info;
    report.group_complexity = variance * report.group_fisher_info;
    report.bound = cls.phi_factor();
    report.satisfied = report.group_complexity >= report.bound - 1e-9 &&
                       report.complexity >= 1.0 - 1e-9;
    return report;
}

IndexPair q_indices_from_r(double r) {
    if (!(std::abs(r) < 1.0)) {
        std::ostringstream os;
        os << "q indices undefined at |r| = " << std::abs(r) << " >= 1 (q_str pole)";
        throw domain_error(os.str());
    }
    double r2 = r * r;
    IndexPair out;
    out.q_soft = 1.0 + r2;
    out.q_str = (1.0 - 2.0 * r2) / (1.0 - r2);
    out.source = "correlation";
    return out;
}

IndexPair q_indices_from_T(double t_ratio) {
    if (!(t_ratio > 0.0) || t_ratio > 1.0) {
        std::ostringstream os;
        os << "temperature ratio " << t_ratio
           << " outside (0, 1]; q_str is undefined at T = 0 (the table renders that row "
              "as a limit)";
        throw domain_error(os.str());
    }
    IndexPair out = q_indices_from_r(std::sqrt(1.0 - t_ratio));
    out.source = "temperature";
    return out;
}

SofteningReport softening_limit_check(double r, const QuadratureSpec& quad, const FdSpec& fd) {
    IndexPair idx = q_indices_from_r(r);

    SofteningReport report;
    report.r = r;
    report.q_soft = idx.q_soft;
    report.q_str = idx.q_str;

    Correlated2DParams corr{0.0, 1.0, r, 1.0};
    Correlated2DParams uncorr{0.0, 1.0, 0.0, 1.0};
    ParametricFamily corr_family = correlated2d(corr);
    ParametricFamily uncorr_family = correlated2d(uncorr);
    Eigen::VectorXd theta = corr_family.default_theta;

    auto cls_of = [](double q) {
        return std::abs(q - 1.0) < 1e-12 ? GroupClass::boltzmann() : GroupClass::tsallis(q);
    };
    GroupClass soft = cls_of(idx.q_soft);
    GroupClass strong = cls_of(idx.q_str);

    // Metric direction 1: Tsallis(q_soft) group metric of the correlated
    // model equals the Boltzmann metric of the uncorrelated one.
    Eigen::MatrixXd soften = group_metric(soft, corr_family, theta, quad).matrix();
    Eigen::MatrixXd target1 = closed_form_metric_2dc(uncorr).matrix();
    report.metric_soften_error =
        (soften - target1).cwiseAbs().maxCoeff() / target1.cwiseAbs().maxCoeff();

    // Metric direction 2: Tsallis(q_str) group metric of the uncorrelated
    // model equals the Boltzmann metric of the correlated one.
    Eigen::MatrixXd strengthen = group_metric(strong, uncorr_family, theta, quad).matrix();
    Eigen::MatrixXd target2 = closed_form_metric_2dc(corr).matrix();
    report.metric_strengthen_error =
        (strengthen - target2).cwiseAbs().maxCoeff() / target2.cwiseAbs().maxCoeff();

    // Curvature counterparts.
    FdSpec fd_curv = fd;
    fd_curv.richardson = true;
    MetricField field_soft = make_metric_field(soft, corr_family, theta, quad);
    MetricField field_strong = make_metric_field(strong, uncorr_family, theta, quad);
    double uncorr_curv = -0.5;
    double corr_curv = -0.5 * (1.0 - r * r);
    report.curvature_soften_value = scalar_curvature(field_soft, theta, fd_curv);
    report.curvature_strengthen_value = scalar_curvature(field_strong, theta, fd_curv);
    report.curvature_soften_error = std::abs(report.curvature_soften_value - uncorr_curv);
    report.curvature_strengthen_error =
        std::abs(report.curvature_strengthen_value - corr_curv);

    report.pass = report.metric_soften_error <= report.tol_metric &&
                  report.metric_strengthen_error <= report.tol_metric &&
                  report.curvature_soften_error <= report.tol_curvature &&
                  report.curvature_strengthen_error <= report.tol_curvature;
    return report;
}

std::vector<Table1Row> table1(const std::vector<double>& t_ratios) {
    std::vector<Table1Row> rows;
    rows.reserve(t_ratios.size());
    for (double t : t_ratios) {
        Table1Row row;
        row.t_ratio = t;
        if (t == 0.0) {
            row.q_soft = 2.0;
            row.q_str = -std::numeric_limits<double>::infinity();
            row.is_limit = true;
        } else {
            IndexPair idx = q_indices_from_T(t);
            row.q_soft = idx.q_soft;
            row.q_str = idx.q_str;
        }
        rows.push_back(row);
    }
    return rows;
}

std::string paper_format_number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    double nearest = std::round(v);
    if (std::abs(v - nearest) <= 1e-9 + 1e-12 * std::abs(v)) {
        if (nearest == 0.0) return "0";
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.0f", nearest);
        return buf;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    std::string s = buf;
    auto dot = s.find('.');
    if (dot != std::string::npos && s.find('e') == std::string::npos &&
        s.size() - dot - 1 > 5) {
        // Non-terminating expansion: truncate toward zero at 4 decimals.
        double truncated = std::trunc(v * 1e4) / 1e4;
        std::snprintf(buf, sizeof(buf), "%.4f", truncated);
        s = buf;
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    return s;
}

} // namespace entgeo
