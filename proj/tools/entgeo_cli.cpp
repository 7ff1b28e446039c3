// Command-line front end: metrics, curvature, divergences, the
// proportionality-theorem check, index tables and parameter sweeps, with
// JSON/CSV/table output.

#include "entgeo/analysis.hpp"
#include "entgeo/curvature.hpp"
#include "entgeo/entropy.hpp"
#include "entgeo/errors.hpp"
#include "entgeo/fisher.hpp"
#include "entgeo/models.hpp"
#include "entgeo/serialize.hpp"
#include "entgeo/theorem.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using entgeo::Json;

// ---------------------------------------------------------------------------
// argument parsing helpers

std::vector<std::pair<std::string, double>> parse_kv_list(const std::string& text,
                                                          const std::string& what) {
    std::vector<std::pair<std::string, double>> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw entgeo::domain_error(what + ": expected key=value, got '" + item + "'");
        std::string key = item.substr(0, eq);
        std::string val = item.substr(eq + 1);
        try {
            size_t used = 0;
            double v = std::stod(val, &used);
            if (used != val.size()) throw std::invalid_argument(val);
            out.emplace_back(key, v);
        } catch (const std::exception&) {
            throw entgeo::domain_error(what + ": cannot parse number '" + val + "' for key '" +
                                       key + "'");
        }
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& text, const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            double v = std::stod(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw entgeo::domain_error(what + ": cannot parse number '" + item + "'");
        }
    }
    if (out.empty()) throw entgeo::domain_error(what + ": empty list");
    return out;
}

entgeo::GroupClass parse_class(const std::string& spec) {
    std::string name = spec;
    std::string params;
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        name = spec.substr(0, colon);
        params = spec.substr(colon + 1);
    }
    auto kv = parse_kv_list(params, "--class");
    auto get = [&](const std::string& key) -> std::optional<double> {
        for (const auto& [k, v] : kv)
            if (k == key) return v;
        return std::nullopt;
    };
    auto reject_unknown = [&](std::initializer_list<std::string> allowed) {
        for (const auto& [k, v] : kv) {
            (void)v;
            bool ok = false;
            for (const auto& a : allowed) ok = ok || a == k;
            if (!ok)
                throw entgeo::domain_error("--class " + name + ": unknown parameter '" + k + "'");
        }
    };

    if (name == "boltzmann") {
        reject_unknown({});
        return entgeo::GroupClass::boltzmann();
    }
    if (name == "tsallis") {
        reject_unknown({"q"});
        auto q = get("q");
        if (!q) throw entgeo::domain_error("--class tsallis requires q=<value>");
        return entgeo::GroupClass::tsallis(*q);
    }
    if (name == "kaniadakis") {
        reject_unknown({"q"});
        auto q = get("q");
        if (!q) throw entgeo::domain_error("--class kaniadakis requires q=<value>");
        return entgeo::GroupClass::kaniadakis(*q);
    }
    if (name == "abr") {
        reject_unknown({"a", "b"});
        auto a = get("a");
        auto b = get("b");
        if (!a || !b) throw entgeo::domain_error("--class abr requires a=<value>,b=<value>");
        return entgeo::GroupClass::abe_borges_roditi(*a, *b);
    }
    throw entgeo::domain_error("unknown class '" + name +
                               "' (expected boltzmann|tsallis|kaniadakis|abr)");
}

entgeo::ParametricFamily make_model(const std::string& name, const std::string& const_text) {
    auto consts = parse_kv_list(const_text, "--const");
    auto get = [&](const std::string& key, double fallback) {
        for (const auto& [k, v] : consts)
            if (k == key) return v;
        return fallback;
    };
    if (name == "gauss1d") {
        if (!consts.empty())
            throw entgeo::domain_error("gauss1d takes no --const values");
        return entgeo::gaussian1d();
    }
    if (name == "corr2d") {
        for (const auto& [k, v] : consts) {
            (void)v;
            if (k != "r" && k != "Sigma")
                throw entgeo::domain_error("corr2d: unknown constant '" + k + "'");
        }
        entgeo::Correlated2DParams p;
        p.r = get("r", 0.0);
        p.Sigma = get("Sigma", 1.0);
        return entgeo::correlated2d(p);
    }
    throw entgeo::domain_error("unknown model '" + name + "' (expected gauss1d|corr2d)");
}

Eigen::VectorXd theta_from_params(const entgeo::ParametricFamily& family,
                                  const std::string& text) {
    Eigen::VectorXd theta = family.default_theta;
    for (const auto& [k, v] : parse_kv_list(text, "--params")) {
        bool found = false;
        for (int j = 0; j < family.param_dim; ++j) {
            if (family.param_names[j] == k) {
                theta(j) = v;
                found = true;
                break;
            }
        }
        if (!found)
            throw entgeo::domain_error(family.name + ": unknown parameter '" + k + "'");
    }
    return theta;
}

// ---------------------------------------------------------------------------
// shared option bundle

struct CommonOptions {
    std::string class_spec = "boltzmann";
    std::string model = "gauss1d";
    std::string params;
    std::string consts;
    std::string format = "json";
    std::string output;
    std::string config_path;

    int quad_order = 64;
    std::string quad_scheme = "gauss_hermite_tensor";
    double quad_halfwidth = 12.0;
    double quad_rel_tol = 1e-10;
    double quad_abs_tol = 1e-12;

    double fd_base_step = entgeo::FdSpec{}.base_step;
    std::string fd_scheme = "central_2nd_order";
    bool fd_richardson = false;

    entgeo::QuadratureSpec quad() const {
        entgeo::QuadratureSpec q;
        if (quad_scheme == "gauss_hermite_tensor")
            q.scheme = entgeo::QuadScheme::gauss_hermite_tensor;
        else if (quad_scheme == "adaptive_box")
            q.scheme = entgeo::QuadScheme::adaptive_box;
        else
            throw entgeo::domain_error("unknown quadrature scheme '" + quad_scheme + "'");
        q.order = quad_order;
        q.box_halfwidth = quad_halfwidth;
        q.rel_tol = quad_rel_tol;
        q.abs_tol = quad_abs_tol;
        q.validate();
        return q;
    }

    entgeo::FdSpec fd() const {
        entgeo::FdSpec f;
        f.base_step = fd_base_step;
        if (fd_scheme == "central_2nd_order")
            f.scheme = entgeo::FdScheme::central_2nd_order;
        else if (fd_scheme == "central_4th_order")
            f.scheme = entgeo::FdScheme::central_4th_order;
        else
            throw entgeo::domain_error("unknown fd scheme '" + fd_scheme + "'");
        f.richardson = fd_richardson;
        f.validate();
        return f;
    }

    entgeo::ParametricFamily family() const { return make_model(model, consts); }
    Eigen::VectorXd theta(const entgeo::ParametricFamily& fam) const {
        return theta_from_params(fam, params);
    }
    entgeo::GroupClass group() const { return parse_class(class_spec); }
};

// TOML-style key/value configuration: bare `key = value` lines, with
// `[section]` headers prefixing the keys that follow. Values provided on the
// command line always win; unknown keys are rejected.
void apply_config_file(CLI::App* cmd, CommonOptions& opt) {
    if (opt.config_path.empty()) return;
    std::ifstream in(opt.config_path);
    if (!in)
        throw entgeo::domain_error("cannot read config file '" + opt.config_path + "'");

    auto trim = [](std::string s) {
        auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
        while (!s.empty() && issp(s.front())) s.erase(s.begin());
        while (!s.empty() && issp(s.back())) s.pop_back();
        return s;
    };
    auto overridden = [&](const std::string& flag) { return cmd->count(flag) > 0; };

    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto comment = line.find_first_of("#;");
        if (comment != std::string::npos) line.erase(comment);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') {
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw entgeo::domain_error("config line " + std::to_string(lineno) +
                                       ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
            value = value.substr(1, value.size() - 2);
        if (!section.empty()) key = section + "." + key;

        auto as_double = [&] {
            try {
                size_t used = 0;
                double v = std::stod(value, &used);
                if (used != value.size()) throw std::invalid_argument(value);
                return v;
            } catch (const std::exception&) {
                throw entgeo::domain_error("config key '" + key + "': cannot parse number '" +
                                           value + "'");
            }
        };
        auto as_bool = [&] {
            if (value == "true" || value == "1") return true;
            if (value == "false" || value == "0") return false;
            throw entgeo::domain_error("config key '" + key + "': expected true or false");
        };

        if (key == "quad.order") {
            if (!overridden("--quad.order")) opt.quad_order = int(as_double());
        } else if (key == "quad.scheme") {
            if (!overridden("--quad.scheme")) opt.quad_scheme = value;
        } else if (key == "quad.box_halfwidth") {
            if (!overridden("--quad.box-halfwidth")) opt.quad_halfwidth = as_double();
        } else if (key == "quad.rel_tol") {
            if (!overridden("--quad.rel-tol")) opt.quad_rel_tol = as_double();
        } else if (key == "quad.abs_tol") {
            if (!overridden("--quad.abs-tol")) opt.quad_abs_tol = as_double();
        } else if (key == "fd.base_step") {
            if (!overridden("--fd.base_step")) opt.fd_base_step = as_double();
        } else if (key == "fd.scheme") {
            if (!overridden("--fd.scheme")) opt.fd_scheme = value;
        } else if (key == "fd.richardson") {
            if (!overridden("--fd.richardson")) opt.fd_richardson = as_bool();
        } else {
            throw entgeo::domain_error("config: unknown key '" + key + "'");
        }
    }
}

void add_common_options(CLI::App* cmd, CommonOptions& opt, bool with_model = true) {
    cmd->add_option("--config", opt.config_path,
                    "TOML-style key/value configuration file");
    if (with_model) {
        cmd->add_option("--class", opt.class_spec,
                        "entropy class: boltzmann | tsallis:q=V | kaniadakis:q=V | abr:a=V,b=V");
        cmd->add_option("--model", opt.model, "model family: gauss1d | corr2d");
        cmd->add_option("--params", opt.params, "macrospace point, e.g. mu=0,sigma=1");
        cmd->add_option("--const", opt.consts, "fixed model constants, e.g. r=0.6,Sigma=1");
    }
    cmd->add_option("--format", opt.format, "output format: json | csv | table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    cmd->add_option("--output,-o", opt.output, "write output to file instead of stdout");

    cmd->add_option("--quad.order", opt.quad_order, "Gauss-Hermite nodes per axis");
    cmd->add_option("--quad.scheme", opt.quad_scheme,
                    "gauss_hermite_tensor | adaptive_box");
    cmd->add_option("--quad.box-halfwidth", opt.quad_halfwidth,
                    "box truncation radius, in per-axis scales");
    cmd->add_option("--quad.rel-tol", opt.quad_rel_tol, "relative quadrature tolerance");
    cmd->add_option("--quad.abs-tol", opt.quad_abs_tol, "absolute quadrature tolerance");
    cmd->add_option("--fd.base_step", opt.fd_base_step, "finite-difference base step");
    cmd->add_option("--fd.scheme", opt.fd_scheme, "central_2nd_order | central_4th_order");
    cmd->add_option("--fd.richardson", opt.fd_richardson,
                    "Richardson-extrapolate difference stencils");
}

void emit(const CommonOptions& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw entgeo::domain_error("cannot open output file '" + opt.output + "'");
    out << text;
}

void emit_json(const CommonOptions& opt, const Json& j) { emit(opt, j.dump(2) + "\n"); }

// ---------------------------------------------------------------------------
// subcommands

int cmd_metric(const CommonOptions& opt, const std::string& estimator) {
    auto cls = opt.group();
    auto fam = opt.family();
    auto theta = opt.theta(fam);
    auto quad = opt.quad();

    if (estimator == "expectation") {
        Json j = entgeo::to_json(entgeo::group_metric(cls, fam, theta, quad));
        j["class"] = cls.describe();
        j["estimator"] = "expectation";
        emit_json(opt, j);
        return 0;
    }
    if (estimator == "hessian") {
        auto result = entgeo::fisher_metric_group_hessian(cls, fam, theta, opt.fd(), quad);
        Json j = entgeo::to_json(result.metric);
        j["class"] = cls.describe();
        j["estimator"] = "hessian";
        j["phi"] = result.phi;
        j["riemannian"] = result.riemannian;
        emit_json(opt, j);
        return 0;
    }
    if (estimator == "both") {
        auto expectation = entgeo::group_metric(cls, fam, theta, quad);
        auto hessian = entgeo::fisher_metric_group_hessian(cls, fam, theta, opt.fd(), quad);
        double scale = expectation.matrix().cwiseAbs().maxCoeff();
        double diff =
            (hessian.metric.matrix() - expectation.matrix()).cwiseAbs().maxCoeff() / scale;
        Json j;
        j["schema"] = entgeo::kSchemaVersion;
        j["kind"] = "metric_pair";
        j["class"] = cls.describe();
        j["expectation"] = entgeo::to_json(expectation);
        j["hessian"] = entgeo::to_json(hessian.metric);
        j["max_relative_difference"] = diff;
        emit_json(opt, j);
        return 0;
    }
    throw entgeo::domain_error("unknown estimator '" + estimator +
                               "' (expected expectation|hessian|both)");
}

int cmd_curvature(const CommonOptions& opt) {
    auto fam = opt.family();
    auto report = entgeo::geometry_report(opt.group(), fam, opt.theta(fam), opt.fd(),
                                          opt.quad());
    emit_json(opt, entgeo::to_json(report));
    return 0;
}

int cmd_divergence(const CommonOptions& opt, const std::string& model2,
                   const std::string& params2, const std::string& consts2) {
    auto cls = opt.group();
    auto p_family = opt.family();
    auto p_theta = opt.theta(p_family);
    auto q_family = make_model(model2.empty() ? opt.model : model2,
                               consts2.empty() ? opt.consts : consts2);
    auto q_theta = theta_from_params(q_family, params2.empty() ? opt.params : params2);

    auto result = entgeo::divergence_dg(cls, p_family, p_theta, q_family, q_theta, opt.quad());
    Json j;
    j["schema"] = entgeo::kSchemaVersion;
    j["kind"] = "divergence";
    j["class"] = cls.describe();
    j["p_model"] = p_family.name;
    j["q_model"] = q_family.name;
    j["value"] = result.value;
    j["err_est"] = result.err_est;
    emit_json(opt, j);
    return 0;
}

int cmd_verify_theorem(const CommonOptions& opt) {
    auto fam = opt.family();
    auto report = entgeo::verify_theorem(opt.group(), fam, opt.theta(fam), opt.fd(),
                                         opt.quad());
    emit_json(opt, entgeo::to_json(report));
    return report.all_pass() ? 0 : 1;
}

int cmd_cri(const CommonOptions& opt) {
    auto fam = opt.family();
    auto report = entgeo::cri_report(opt.group(), fam, opt.theta(fam), opt.quad());
    emit_json(opt, entgeo::to_json(report));
    return 0;
}

int cmd_table1(const CommonOptions& opt, const std::string& ratio_text, bool paper_format) {
    auto ratios = parse_double_list(ratio_text, "--ratios");
    for (double t : ratios)
        if (t != 0.0 && (!(t > 0.0) || t > 1.0))
            throw entgeo::domain_error("table1: ratio " + std::to_string(t) +
                                       " outside [0, 1]");
    auto rows = entgeo::table1(ratios);
    if (opt.format == "json")
        emit_json(opt, entgeo::table1_json(rows, paper_format));
    else if (opt.format == "csv")
        emit(opt, entgeo::table1_csv(rows, paper_format));
    else
        emit(opt, entgeo::table1_text(rows, paper_format));
    return 0;
}

int cmd_sweep(const CommonOptions& opt, const std::string& quantity,
              const std::string& r_text, const std::string& t_text) {
    if (!r_text.empty() && !t_text.empty())
        throw entgeo::domain_error("sweep: give either --r or --t-ratios, not both");

    std::ostringstream os;
    if (quantity == "indices") {
        if (!t_text.empty()) {
            os << "t_ratio,q_soft,q_str\n";
            for (double t : parse_double_list(t_text, "--t-ratios")) {
                auto idx = entgeo::q_indices_from_T(t);
                os << entgeo::format_double(t) << "," << entgeo::format_double(idx.q_soft)
                   << "," << entgeo::format_double(idx.q_str) << "\n";
            }
        } else {
            std::string text = r_text.empty() ? "0,0.3,0.6,0.9" : r_text;
            os << "r,q_soft,q_str\n";
            for (double r : parse_double_list(text, "--r")) {
                auto idx = entgeo::q_indices_from_r(r);
                os << entgeo::format_double(r) << "," << entgeo::format_double(idx.q_soft)
                   << "," << entgeo::format_double(idx.q_str) << "\n";
            }
        }
        emit(opt, os.str());
        return 0;
    }
    if (quantity == "curvature") {
        std::string text = r_text.empty() ? "0,0.3,0.6,0.9" : r_text;
        os << "r,q_soft,q_str,R_corr_boltzmann,R_corr_tsallis_qsoft,R_uncorr_tsallis_qstr\n";
        for (double r : parse_double_list(text, "--r")) {
            auto report = entgeo::softening_limit_check(r, opt.quad(), opt.fd());
            os << entgeo::format_double(r) << "," << entgeo::format_double(report.q_soft)
               << "," << entgeo::format_double(report.q_str) << ","
               << entgeo::format_double(-0.5 * (1.0 - r * r)) << ","
               << entgeo::format_double(report.curvature_soften_value) << ","
               << entgeo::format_double(report.curvature_strengthen_value) << "\n";
        }
        emit(opt, os.str());
        return 0;
    }
    throw entgeo::domain_error("unknown sweep quantity '" + quantity +
                               "' (expected indices|curvature)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropy-group information geometry toolkit"};
    app.require_subcommand(1);

    CommonOptions metric_opt, curvature_opt, divergence_opt, theorem_opt, cri_opt, table_opt,
        sweep_opt;

    auto* metric = app.add_subcommand("metric", "group Fisher metric at a parameter point");
    add_common_options(metric, metric_opt);
    std::string estimator = "expectation";
    metric->add_option("--estimator", estimator, "expectation | hessian | both")
        ->check(CLI::IsMember({"expectation", "hessian", "both"}));

    auto* curvature = app.add_subcommand(
        "curvature", "Christoffel symbols, Ricci tensor and scalar curvature");
    add_common_options(curvature, curvature_opt);

    auto* divergence = app.add_subcommand("divergence", "relative entropy between two models");
    add_common_options(divergence, divergence_opt);
    std::string model2, params2, consts2;
    divergence->add_option("--model2", model2, "second model (defaults to --model)");
    divergence->add_option("--params2", params2, "second parameter point");
    divergence->add_option("--const2", consts2, "second model constants");

    auto* verify = app.add_subcommand(
        "verify-theorem", "check the metric/curvature proportionality relations");
    add_common_options(verify, theorem_opt);

    auto* cri = app.add_subcommand("cri", "generalized Cramer-Rao / Fisher-Rao complexity");
    add_common_options(cri, cri_opt);

    auto* table = app.add_subcommand("table1", "temperature-index table");
    add_common_options(table, table_opt, false);
    std::string ratios = "0,1e-5,1e-4,1e-3,1e-2,1e-1,0.5,0.75,0.9,1";
    bool paper_format = false;
    table->add_option("--ratios", ratios, "comma-separated T/T0 values (0 renders the limit)");
    table->add_flag("--paper-format", paper_format,
                    "truncated rendering matching the published table");

    auto* sweep = app.add_subcommand("sweep", "CSV sweeps over correlation or temperature");
    add_common_options(sweep, sweep_opt, false);
    std::string quantity = "indices", sweep_r, sweep_t;
    sweep->add_option("--quantity", quantity, "indices | curvature");
    sweep->add_option("--r", sweep_r, "comma-separated correlation values");
    sweep->add_option("--t-ratios", sweep_t, "comma-separated temperature ratios");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return 2;
    }

    try {
        if (metric->parsed()) {
            apply_config_file(metric, metric_opt);
            return cmd_metric(metric_opt, estimator);
        }
        if (curvature->parsed()) {
            apply_config_file(curvature, curvature_opt);
            return cmd_curvature(curvature_opt);
        }
        if (divergence->parsed()) {
            apply_config_file(divergence, divergence_opt);
            return cmd_divergence(divergence_opt, model2, params2, consts2);
        }
        if (verify->parsed()) {
            apply_config_file(verify, theorem_opt);
            return cmd_verify_theorem(theorem_opt);
        }
        if (cri->parsed()) {
            apply_config_file(cri, cri_opt);
            return cmd_cri(cri_opt);
        }
        if (table->parsed()) {
            apply_config_file(table, table_opt);
            return cmd_table1(table_opt, ratios, paper_format);
        }
        if (sweep->parsed()) {
            apply_config_file(sweep, sweep_opt);
            return cmd_sweep(sweep_opt, quantity, sweep_r, sweep_t);
        }
    } catch (const entgeo::convergence_error& e) {
        std::cerr << "error: numeric: " << e.what() << "\n";
        return 3;
    } catch (const entgeo::not_positive_definite& e) {
        std::cerr << "error: numeric: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: domain: " << e.what() << "\n";
        return 2;
    } catch (const std::range_error& e) {
        std::cerr << "error: domain: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: domain: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
