#include "entgeo/series.hpp"
#include "entgeo/errors.hpp"

#include <cmath>

namespace entgeo {

namespace detail {

std::vector<double> compose_series(const std::vector<double>& outer,
                                   const std::vector<double>& inner,
                                   int length) {
    if (!inner.empty() && inner[0] != 0.0)
        throw domain_error("compose_series: inner series must have zero constant term");
    std::vector<double> result(length, 0.0);
    if (!outer.empty()) result[0] = outer[0];

    // power = inner^k, built incrementally.
    std::vector<double> power(length, 0.0);
    power[0] = 1.0;
    for (size_t k = 1; k < outer.size() && int(k) < length; ++k) {
        std::vector<double> next(length, 0.0);
        for (int i = 0; i < length; ++i) {
            if (power[i] == 0.0) continue;
            for (int j = 0; i + j < length && j < int(inner.size()); ++j)
                next[i + j] += power[i] * inner[j];
        }
        power = std::move(next);
        for (int i = 0; i < length; ++i) result[i] += outer[k] * power[i];
    }
    return result;
}

} // namespace detail

namespace {

// Taylor coefficients a_k of G(t) = sum_k a_k t^k, k = 0..n.
std::vector<double> taylor_of_exp(const GroupClass& cls, int n) {
    std::vector<double> a(n + 1, 0.0);
    switch (cls.kind()) {
        case GroupKind::boltzmann:
            if (n >= 1) a[1] = 1.0;
            break;
        case GroupKind::tsallis: {
            // (e^{kt}-1)/k: a_j = k^{j-1}/j!
            double k = 1.0 - cls.q();
            double pow_k = 1.0, fact = 1.0;
            for (int j = 1; j <= n; ++j) {
                fact *= j;
                a[j] = pow_k / fact;
                pow_k *= k;
            }
            break;
        }
        case GroupKind::kaniadakis: {
            // sinh(kt)/k: odd terms only, a_j = k^{j-1}/j!
            double k = 1.0 - cls.q();
            double pow_k = 1.0, fact = 1.0;
            for (int j = 1; j <= n; ++j) {
                fact *= j;
                if (j % 2 == 1) a[j] = pow_k / fact;
                pow_k *= k;
            }
            break;
        }
        case GroupKind::abe_borges_roditi: {
            // (e^{at}-e^{bt})/(a-b): a_j = (a^j - b^j)/(j! (a-b)).
            double pa = 1.0, pb = 1.0, fact = 1.0;
            for (int j = 1; j <= n; ++j) {
                pa *= cls.a();
                pb *= cls.b();
                fact *= j;
                a[j] = (pa - pb) / (fact * (cls.a() - cls.b()));
            }
            break;
        }
    }
    return a;
}

// Invert a power series g with g_0 = 0, g_1 = 1: find f with g(f(s)) = s.
// Triangular recurrence: the coefficient of s^n in g(f) involves f_n only
// through the linear term, so each f_n is solved from lower ones via
// composition with the partial inverse.
std::vector<double> invert_series(const std::vector<double>& g) {
    const int n = int(g.size()) - 1;
    std::vector<double> f(n + 1, 0.0);
    f[1] = 1.0;
    for (int m = 2; m <= n; ++m) {
        std::vector<double> partial(f.begin(), f.begin() + m);
        partial.resize(n + 1, 0.0);
        std::vector<double> comp = detail::compose_series(g, partial, m + 1);
        // comp[m] currently misses the g_1 * f_m contribution (g_1 = 1).
        f[m] = -comp[m];
    }
    return f;
}

} // namespace

double SeriesCoeffs::eval_exp(double t) const {
    double acc = 0.0;
    for (int i = order; i >= 0; --i)
        acc = acc * t + c[i] / (i + 1);
    return acc * t;
}

double SeriesCoeffs::eval_log(double s) const {
    double acc = 0.0;
    for (int i = order; i >= 0; --i)
        acc = acc * s + gamma[i] / (i + 1);
    return acc * s;
}

SeriesCoeffs group_series(const GroupClass& cls, int order) {
    if (order < 0 || order > 12)
        throw domain_error("group_series: order must be in [0, 12]");

    const int n = order + 1; // highest power of t carried
    std::vector<double> a = taylor_of_exp(cls, n);
    std::vector<double> f = invert_series(a);

    SeriesCoeffs out;
    out.order = order;
    out.c.resize(order + 1);
    out.gamma.resize(order + 1);
    for (int i = 0; i <= order; ++i) {
        out.c[i] = (i + 1) * a[i + 1];
        out.gamma[i] = (i + 1) * f[i + 1];
    }
    return out;
}

} // namespace entgeo
