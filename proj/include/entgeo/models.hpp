#pragma once

#include "entgeo/family.hpp"
#include "entgeo/metric.hpp"

namespace entgeo {

/// Normal family over R with theta = (mu, sigma). Fisher metric
/// diag(1/sigma^2, 2/sigma^2).
ParametricFamily gaussian1d();
ParametricFamily gaussian1d(double mu, double sigma);

/// Parameters of the bivariate correlated family: macrospace (mu_x, sigma),
/// fixed correlation r in (-1, 1) and positive scale constant Sigma.
struct Correlated2DParams {
    double mu_x = 0.0;
    double sigma = 1.0;
    double r = 0.0;
    double Sigma = 1.0;

    void validate() const;
};

/// Bivariate Gaussian family over R^2 with density
///   p(x,y) = exp(-[ (x-mu_x)^2/sigma^2 + y^2 sigma^2/Sigma^4
///                  + 2 r (x-mu_x) y / Sigma^2 ] / (2(1-r^2)))
///            / (2 pi Sigma^2 sqrt(1-r^2)),
/// with macrospace (mu_x, sigma); r and Sigma enter as fixed constants.
ParametricFamily correlated2d(const Correlated2DParams& params);

/// Exact Fisher metric of the correlated family:
/// (1/(1-r^2)) diag(1/sigma^2, 4/sigma^2).
MetricTensor closed_form_metric_2dc(const Correlated2DParams& params);

/// Two coupled harmonic oscillators in contact with a bath at temperature T,
/// with reference temperature T0 (coupling vanishes at T = T0). k_B = 1 in
/// code units; all derived quantities depend on temperature only through
/// T/T0.
struct OscillatorEnsemble {
    double m1 = 1.0, m2 = 1.0;
    double omega1 = 1.0, omega2 = 1.0;
    double x10 = 0.0, x20 = 0.0;
    double T = 1.0, T0 = 1.0;

    void validate() const;
};

/// Map the position marginal of the canonical ensemble onto the correlated
/// family: mu_x = x10, sigma^2 = T0/(m1 w1^2), Sigma^2 = T0/(sqrt(m1 m2) w1 w2),
/// r = +sqrt(1 - T/T0).
Correlated2DParams oscillator_to_2dc(const OscillatorEnsemble& ens);

/// Log of the normalized position marginal exp(-V/T)/Z of the ensemble.
/// The coupling in V is the nonpositive root -sqrt(1 - T/T0), which makes
/// the marginal coincide pointwise with correlated2d(oscillator_to_2dc(ens))
/// at theta = (x10, sigma).
double oscillator_marginal_log_density(const OscillatorEnsemble& ens, double x1, double x2);

/// Recover T/T0 from mapped parameters (1 - r^2).
double temperature_ratio_from_2dc(const Correlated2DParams& params);

} // namespace entgeo
