#include "entgeo/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace entgeo {

namespace {

Json matrix_json(const Eigen::MatrixXd& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

Json vector_json(const Eigen::VectorXd& v) {
    Json out = Json::array();
    for (int i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

} // namespace

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    // Prefer the shortest representation that round-trips.
    for (int prec = 1; prec < 17; ++prec) {
        char shorter[32];
        std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
        if (std::strtod(shorter, nullptr) == v) return shorter;
    }
    return buf;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

Json to_json(const MetricTensor& metric) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "metric";
    j["theta"] = vector_json(metric.theta());
    j["g"] = matrix_json(metric.matrix());
    j["eigenvalues"] = vector_json(metric.eigenvalues());
    j["condition_estimate"] = metric.condition_estimate();
    j["positive_definite"] = metric.positive_definite();
    return j;
}

Json to_json(const ChristoffelSymbols& gamma) {
    Json out = Json::array();
    for (const auto& g : gamma.gamma) out.push_back(matrix_json(g));
    return out;
}

Json to_json(const GeometryReport& report) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "geometry_report";
    j["class"] = report.class_used.describe();
    j["theta"] = vector_json(report.theta);
    j["metric"] = matrix_json(report.metric.matrix());
    j["christoffel"] = to_json(report.christoffel);
    j["ricci"] = matrix_json(report.ricci);
    j["scalar_curvature"] = report.scalar_curvature;
    j["diagnostics"] = {
        {"metric_step", report.diagnostics.metric_step},
        {"gamma_step", report.diagnostics.gamma_step},
        {"quad_order", report.diagnostics.quad_order},
        {"quad_err", report.diagnostics.quad_err},
        {"ricci_asymmetry", report.diagnostics.ricci_asymmetry},
    };
    return j;
}

Json to_json(const TheoremReport& report) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "theorem_report";
    j["class"] = report.class_name;
    j["phi"] = report.phi;
    j["metric_ratio_error"] = report.metric_ratio_error;
    j["christoffel_max_diff"] = report.christoffel_max_diff;
    j["ricci_max_diff"] = report.ricci_max_diff;
    j["curvature_scaling_error"] = report.curvature_scaling_error;
    j["curvature_boltzmann"] = report.curvature_boltzmann;
    j["curvature_group"] = report.curvature_group;
    j["tolerances"] = {
        {"metric", report.tol_metric},
        {"christoffel", report.tol_christoffel},
        {"ricci", report.tol_ricci},
        {"curvature", report.tol_curvature},
    };
    j["pass"] = {
        {"metric", report.metric_pass},
        {"christoffel", report.christoffel_pass},
        {"ricci", report.ricci_pass},
        {"curvature", report.curvature_pass},
        {"all", report.all_pass()},
    };
    return j;
}

Json to_json(const CriReport& report) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "cri_report";
    j["class"] = report.class_name;
    j["variance"] = report.variance;
    j["fisher_info"] = report.fisher_info;
    j["group_fisher_info"] = report.group_fisher_info;
    j["complexity"] = report.complexity;
    j["group_complexity"] = report.group_complexity;
    j["bound"] = report.bound;
    j["satisfied"] = report.satisfied;
    return j;
}

Json to_json(const SofteningReport& report) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "softening_report";
    j["r"] = report.r;
    j["q_soft"] = report.q_soft;
    j["q_str"] = report.q_str;
    j["metric_soften_error"] = report.metric_soften_error;
    j["metric_strengthen_error"] = report.metric_strengthen_error;
    j["curvature_soften_value"] = report.curvature_soften_value;
    j["curvature_strengthen_value"] = report.curvature_strengthen_value;
    j["curvature_soften_error"] = report.curvature_soften_error;
    j["curvature_strengthen_error"] = report.curvature_strengthen_error;
    j["tolerances"] = {{"metric", report.tol_metric}, {"curvature", report.tol_curvature}};
    j["pass"] = report.pass;
    return j;
}

namespace {

std::string row_value(double v, bool paper_format) {
    return paper_format ? paper_format_number(v) : format_double(v);
}

} // namespace

Json table1_json(const std::vector<Table1Row>& rows, bool paper_format) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "table1";
    j["paper_format"] = paper_format;
    Json arr = Json::array();
    for (const auto& row : rows) {
        Json r;
        r["t_ratio"] = row.t_ratio;
        if (paper_format) {
            r["q_soft"] = paper_format_number(row.q_soft);
            r["q_str"] = paper_format_number(row.q_str);
        } else {
            r["q_soft"] = row.q_soft;
            r["q_str"] = row.is_limit ? Json("-inf") : Json(row.q_str);
        }
        r["limit"] = row.is_limit;
        arr.push_back(r);
    }
    j["rows"] = arr;
    return j;
}

std::string table1_csv(const std::vector<Table1Row>& rows, bool paper_format) {
    std::ostringstream os;
    os << "t_ratio,q_soft,q_str\n";
    for (const auto& row : rows) {
        os << csv_escape(format_double(row.t_ratio)) << ","
           << csv_escape(row_value(row.q_soft, paper_format)) << ","
           << csv_escape(row.is_limit ? "-inf" : row_value(row.q_str, paper_format)) << "\n";
    }
    return os.str();
}

std::string table1_text(const std::vector<Table1Row>& rows, bool paper_format) {
    std::ostringstream os;
    os << "t_ratio        q_soft        q_str\n";
    bool any_limit = false;
    for (const auto& row : rows) {
        std::string t = format_double(row.t_ratio);
        std::string qs = row_value(row.q_soft, paper_format);
        std::string qt = row.is_limit ? "-inf" : row_value(row.q_str, paper_format);
        if (row.is_limit) {
            qt += " *";
            any_limit = true;
        }
        os << t << std::string(t.size() < 15 ? 15 - t.size() : 1, ' ')
           << qs << std::string(qs.size() < 14 ? 14 - qs.size() : 1, ' ')
           << qt << "\n";
    }
    if (any_limit) os << "* rendered limit, not a computed value\n";
    return os.str();
}

} // namespace entgeo
