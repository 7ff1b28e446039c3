#pragma once

#include "entgeo/group.hpp"

#include <vector>

namespace entgeo {

/// Coefficients of the group exponential G(t) = sum_i c[i] t^{i+1}/(i+1)
/// and of its inverse F(s) = sum_i gamma[i] s^{i+1}/(i+1), both normalized
/// with c[0] = gamma[0] = 1. The inverse coefficients satisfy
/// gamma[1] = -c[1] and gamma[2] = (3/2) c[1]^2 - c[2].
struct SeriesCoeffs {
    std::vector<double> c;
    std::vector<double> gamma;
    int order = 0;

    /// Evaluate the truncated G series at t.
    double eval_exp(double t) const;
    /// Evaluate the truncated F series at s.
    double eval_log(double s) const;
};

/// Taylor coefficients of the class's G from the closed forms, and of F by
/// triangular power-series inversion (no symbolic engine). order <= 12.
SeriesCoeffs group_series(const GroupClass& cls, int order);

namespace detail {
/// Coefficients of the composition (sum_k f[k] x^k) applied inside
/// (sum_k g[k] x^k), truncated to the given length; f[0] must be 0.
/// Exposed for tests.
std::vector<double> compose_series(const std::vector<double>& outer,
                                   const std::vector<double>& inner,
                                   int length);
} // namespace detail

} // namespace entgeo
