#include "entgeo/group.hpp"
#include "entgeo/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace entgeo {

namespace {

constexpr double kExpLimit = 709.0;          // exp overflows just above this
constexpr double kDegenerateQ = 1e-12;       // reject |q-1| below this
constexpr double kTaylorQ = 1e-6;            // switch to series below this

[[noreturn]] void overflow(const std::string& who, double t) {
    std::ostringstream os;
    os << who << ": argument " << t << " exceeds the representable exponent range";
    throw range_overflow_error(os.str());
}

// (e^{kt} - 1)/k with the expansion fallback for tiny k. expm1 already
// avoids the cancellation at kt -> 0; the series branch keeps the behavior
// explicit for |k| in [1e-12, 1e-6) where the closed form loses digits in
// downstream subtractions.
double expm1_over_k(double k, double t) {
    double kt = k * t;
    if (std::abs(k) < kTaylorQ && std::abs(kt) < 1e-3)
        return t * (1.0 + kt * (0.5 + kt * (1.0 / 6.0 + kt / 24.0)));
    return std::expm1(kt) / k;
}

double sinh_over_k(double k, double t) {
    double kt = k * t;
    if (std::abs(k) < kTaylorQ && std::abs(kt) < 1e-3) {
        double kt2 = kt * kt;
        return t * (1.0 + kt2 * (1.0 / 6.0 + kt2 * (1.0 / 120.0 + kt2 / 5040.0)));
    }
    return std::sinh(kt) / k;
}

double log1p_over_k(double k, double s) {
    double ks = k * s;
    if (std::abs(k) < kTaylorQ && std::abs(ks) < 1e-3)
        return s * (1.0 - ks * (0.5 - ks * (1.0 / 3.0 - ks / 4.0)));
    return std::log1p(ks) / k;
}

double asinh_over_k(double k, double s) {
    double ks = k * s;
    if (std::abs(k) < kTaylorQ && std::abs(ks) < 1e-3) {
        double ks2 = ks * ks;
        return s * (1.0 - ks2 * (1.0 / 6.0 - ks2 * (3.0 / 40.0 - ks2 * 5.0 / 112.0)));
    }
    return std::asinh(ks) / k;
}

} // namespace

GroupClass::GroupClass(GroupKind kind, double q, double a, double b)
    : kind_(kind), q_(q), a_(a), b_(b) {
    switch (kind_) {
        case GroupKind::boltzmann: phi_ = 1.0; break;
        case GroupKind::tsallis: phi_ = 2.0 - q_; break;
        case GroupKind::kaniadakis: phi_ = 1.0; break;
        case GroupKind::abe_borges_roditi: phi_ = 1.0 + a_ + b_; break;
    }
    phi_zero_ = std::abs(phi_) < 1e-14;
}

GroupClass GroupClass::boltzmann() {
    return GroupClass(GroupKind::boltzmann, 0.0, 0.0, 0.0);
}

GroupClass GroupClass::tsallis(double q) {
    if (!std::isfinite(q)) throw domain_error("tsallis: q must be finite");
    if (std::abs(q - 1.0) < kDegenerateQ)
        throw domain_error("tsallis: q = 1 is the Boltzmann class; construct it explicitly");
    return GroupClass(GroupKind::tsallis, q, 0.0, 0.0);
}

GroupClass GroupClass::kaniadakis(double q) {
    if (!std::isfinite(q)) throw domain_error("kaniadakis: q must be finite");
    if (std::abs(q - 1.0) < kDegenerateQ)
        throw domain_error("kaniadakis: q = 1 is the Boltzmann class; construct it explicitly");
    return GroupClass(GroupKind::kaniadakis, q, 0.0, 0.0);
}

GroupClass GroupClass::abe_borges_roditi(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b))
        throw domain_error("abe_borges_roditi: parameters must be finite");
    if (a == b)
        throw domain_error("abe_borges_roditi: requires a != b");
    return GroupClass(GroupKind::abe_borges_roditi, 0.0, a, b);
}

double GroupClass::group_exp(double t) const {
    if (!std::isfinite(t)) throw domain_error("group_exp: argument must be finite");
    switch (kind_) {
        case GroupKind::boltzmann:
            return t;
        case GroupKind::tsallis: {
            double k = 1.0 - q_;
            if (k * t > kExpLimit) overflow("group_exp(tsallis)", t);
            return expm1_over_k(k, t);
        }
        case GroupKind::kaniadakis: {
            double k = 1.0 - q_;
            if (std::abs(k * t) > kExpLimit) overflow("group_exp(kaniadakis)", t);
            return sinh_over_k(k, t);
        }
        case GroupKind::abe_borges_roditi: {
            if (std::max(a_ * t, b_ * t) > kExpLimit) overflow("group_exp(abr)", t);
            // Factor out the dominant exponential so the expm1 argument is
            // nonpositive; stable for close parameters too.
            if (a_ * t >= b_ * t)
                return -std::exp(a_ * t) * std::expm1((b_ - a_) * t) / (a_ - b_);
            return std::exp(b_ * t) * std::expm1((a_ - b_) * t) / (a_ - b_);
        }
    }
    return 0.0; // unreachable
}

namespace {

// ABR group exponential that saturates to +/-inf on exponent overflow
// instead of throwing. Only valid on the monotone increasing branch through
// the origin, where unbounded growth happens at t -> +inf and unbounded
// decrease at t -> -inf; used for bracketing during inversion.
double abr_exp_raw(double a, double b, double t) {
    if (std::max(a * t, b * t) > kExpLimit)
        return (t > 0.0) ? std::numeric_limits<double>::infinity()
                         : -std::numeric_limits<double>::infinity();
    if (a * t >= b * t)
        return -std::exp(a * t) * std::expm1((b - a) * t) / (a - b);
    return std::exp(b * t) * std::expm1((a - b) * t) / (a - b);
}

double abr_exp_derivative(double a, double b, double t) {
    if (std::max(a * t, b * t) > kExpLimit)
        return std::numeric_limits<double>::infinity();
    return (a * std::exp(a * t) - b * std::exp(b * t)) / (a - b);
}

} // namespace

double GroupClass::group_log(double s) const {
    if (!std::isfinite(s)) throw domain_error("group_log: argument must be finite");
    switch (kind_) {
        case GroupKind::boltzmann:
            return s;
        case GroupKind::tsallis: {
            double k = 1.0 - q_;
            if (1.0 + k * s <= 0.0) {
                std::ostringstream os;
                if (k > 0.0)
                    os << "group_log(tsallis q=" << q_ << "): s = " << s
                       << " violates s > " << -1.0 / k;
                else
                    os << "group_log(tsallis q=" << q_ << "): s = " << s
                       << " violates s < " << -1.0 / k;
                throw domain_error(os.str());
            }
            return log1p_over_k(k, s);
        }
        case GroupKind::kaniadakis:
            return asinh_over_k(1.0 - q_, s);
        case GroupKind::abe_borges_roditi: {
            if (s == 0.0) return 0.0;

            // Monotone branch through the origin: when a and b share a sign
            // the derivative vanishes at t* = ln(b/a)/(a-b) and the branch is
            // bounded on one side by the extremum value G(t*).
            double t_lo = -std::numeric_limits<double>::infinity();
            double t_hi = std::numeric_limits<double>::infinity();
            if (a_ * b_ > 0.0) {
                double t_star = std::log(b_ / a_) / (a_ - b_);
                if (t_star < 0.0) t_lo = t_star; else t_hi = t_star;
                double extremum = abr_exp_raw(a_, b_, t_star);
                bool below = (t_star < 0.0) ? (s <= extremum) : (s >= extremum);
                if (below) {
                    std::ostringstream os;
                    os << "group_log(abr a=" << a_ << ", b=" << b_ << "): s = " << s
                       << " outside the range of the monotone branch; bound G(" << t_star
                       << ") = " << extremum;
                    throw domain_error(os.str());
                }
            }

            // Geometric bracket growth from [-1, 1], clamped to the branch.
            double lo = -1.0, hi = 1.0;
            if (std::isfinite(t_lo))
                lo = std::max(lo, t_lo + 1e-9 * (1.0 + std::abs(t_lo)));
            if (std::isfinite(t_hi))
                hi = std::min(hi, t_hi - 1e-9 * (1.0 + std::abs(t_hi)));
            auto g = [&](double t) { return abr_exp_raw(a_, b_, t); };
            int guard = 0;
            while (g(hi) < s && guard++ < 200) {
                lo = hi;
                hi = std::isfinite(t_hi) ? 0.5 * (hi + t_hi) : hi * 2.0 + 1.0;
            }
            guard = 0;
            while (g(lo) > s && guard++ < 200) {
                hi = lo;
                lo = std::isfinite(t_lo) ? 0.5 * (lo + t_lo) : lo * 2.0 - 1.0;
            }
            if (g(lo) > s || g(hi) < s)
                throw domain_error("group_log(abr): failed to bracket the root");

            // Bisection to tolerance, then guarded Newton polish.
            for (int i = 0; i < 200; ++i) {
                double mid = 0.5 * (lo + hi);
                if (hi - lo < 1e-13 * (1.0 + std::abs(mid))) break;
                if (g(mid) < s) lo = mid; else hi = mid;
            }
            double t = 0.5 * (lo + hi);
            for (int i = 0; i < 8; ++i) {
                double d = abr_exp_derivative(a_, b_, t);
                if (d <= 0.0) break;
                double step = (g(t) - s) / d;
                double next = t - step;
                if (next <= lo || next >= hi) break;
                t = next;
                if (std::abs(step) < 1e-15 * (1.0 + std::abs(t))) break;
            }
            return t;
        }
    }
    return 0.0; // unreachable
}

double GroupClass::group_law(double x, double y) const {
    return group_exp(group_log(x) + group_log(y));
}

double GroupClass::deformed_log(double x) const {
    if (!(x > 0.0)) throw domain_error("deformed_log: argument must be positive");
    return group_exp(std::log(x));
}

double GroupClass::group_product(double x, double y) const {
    if (!(x > 0.0) || !(y > 0.0))
        throw domain_error("group_product: arguments must be positive");
    double s = deformed_log(x) + deformed_log(y);
    return std::exp(group_log(s));
}

std::string GroupClass::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case GroupKind::boltzmann: os << "boltzmann"; break;
        case GroupKind::tsallis: os << "tsallis(q=" << q_ << ")"; break;
        case GroupKind::kaniadakis: os << "kaniadakis(q=" << q_ << ")"; break;
        case GroupKind::abe_borges_roditi: os << "abr(a=" << a_ << ", b=" << b_ << ")"; break;
    }
    return os.str();
}

} // namespace entgeo
