#pragma once

#include <Eigen/Dense>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace entgeo {

/// A parameterized probability density over R^n with macrospace parameters
/// theta in R^m. Everything numerical works through log_density; families
/// additionally describe a Gaussian envelope (center + per-axis scales of
/// the sample-space mass at a given theta) that quadrature uses to place
/// nodes. Optional closed forms (metric, sample-space score) are used as
/// fast paths and oracles when present.
struct ParametricFamily {
    std::string name;
    int sample_dim = 1;
    int param_dim = 1;
    std::vector<std::string> param_names;
    /// Open interval per parameter coordinate.
    std::vector<std::pair<double, double>> param_domain;
    std::map<std::string, double> fixed_constants;

    std::function<double(const Eigen::VectorXd& x, const Eigen::VectorXd& theta)> log_density;
    std::function<void(const Eigen::VectorXd& theta, Eigen::VectorXd& center,
                       Eigen::VectorXd& scales)> envelope;
    std::function<Eigen::MatrixXd(const Eigen::VectorXd& theta)> closed_form_metric; // optional
    std::function<double(const Eigen::VectorXd& x, const Eigen::VectorXd& theta,
                         int axis)> sample_score; // optional: d ln p / d x_axis
    std::function<double(const Eigen::VectorXd& x, const Eigen::VectorXd& theta,
                         int j)> param_score; // optional: d ln p / d theta_j

    Eigen::VectorXd default_theta;
};

/// Validate that theta lies inside the family's open parameter domain,
/// rejecting points within 1e-9 of a boundary (keeps quadrature and
/// finite-difference stencils conditioned). Throws domain_error.
void check_theta(const ParametricFamily& family, const Eigen::VectorXd& theta);

} // namespace entgeo
