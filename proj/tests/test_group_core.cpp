#include "entgeo/errors.hpp"
#include "entgeo/group.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using entgeo::GroupClass;

namespace {

// Independent series oracle for the ABR group exponential:
// G(t) = sum_k (a^k - b^k) t^k / (k! (a-b)).
double abr_series(double a, double b, double t, int terms) {
    double sum = 0.0, pa = 1.0, pb = 1.0, fact = 1.0, pt = 1.0;
    for (int k = 1; k <= terms; ++k) {
        pa *= a;
        pb *= b;
        fact *= k;
        pt *= t;
        sum += (pa - pb) * pt / (fact * (a - b));
    }
    return sum;
}

// 4th-order central difference estimates of G'(0) and G''(0).
double fd_first(const GroupClass& cls, double h) {
    return (-cls.group_exp(2 * h) + 8 * cls.group_exp(h) - 8 * cls.group_exp(-h) +
            cls.group_exp(-2 * h)) /
           (12 * h);
}
double fd_second(const GroupClass& cls, double h) {
    return (-cls.group_exp(2 * h) + 16 * cls.group_exp(h) - 30 * cls.group_exp(0.0) +
            16 * cls.group_exp(-h) - cls.group_exp(-2 * h)) /
           (12 * h * h);
}

} // namespace

TEST_CASE("group exponential closed forms") {
    CHECK(GroupClass::boltzmann().group_exp(0.7) == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(GroupClass::tsallis(0.0).group_exp(std::log(2.0)) ==
          doctest::Approx(1.0).epsilon(1e-14));

    for (const auto& cls :
         {GroupClass::boltzmann(), GroupClass::tsallis(0.5), GroupClass::tsallis(1.5),
          GroupClass::kaniadakis(0.3), GroupClass::abe_borges_roditi(0.2, 0.3)}) {
        CHECK(cls.group_exp(0.0) == 0.0);
        // Monotone on a sample of the principal branch.
        double prev = cls.group_exp(-1.0);
        for (double t = -0.9; t <= 1.0; t += 0.1) {
            double cur = cls.group_exp(t);
            CHECK(cur > prev);
            prev = cur;
        }
    }

    double direct = GroupClass::abe_borges_roditi(0.2, 0.3).group_exp(1.0);
    CHECK(direct == doctest::Approx((std::exp(0.2) - std::exp(0.3)) / (0.2 - 0.3))
                        .epsilon(1e-14));
    CHECK(direct == doctest::Approx(abr_series(0.2, 0.3, 1.0, 13)).epsilon(1e-12));
}

TEST_CASE("group inverse closed forms and root finding") {
    CHECK(GroupClass::boltzmann().group_log(2.5) == 2.5);
    CHECK(GroupClass::tsallis(0.0).group_log(1.0) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-14));

    auto abr = GroupClass::abe_borges_roditi(0.2, 0.3);
    CHECK(abr.group_log(abr.group_exp(1.0)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(abr.group_log(abr.group_exp(-2.5)) == doctest::Approx(-2.5).epsilon(1e-12));
    CHECK(abr.group_log(0.0) == 0.0);

    // Same-sign parameters bound the branch; out-of-range arguments name it.
    CHECK_THROWS_AS((void)abr.group_log(-5.0), entgeo::domain_error);
    auto neg = GroupClass::abe_borges_roditi(-0.3, -0.1);
    CHECK(neg.group_log(neg.group_exp(2.0)) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_THROWS_AS((void)neg.group_log(1e6), entgeo::domain_error);

    CHECK_THROWS_AS((void)GroupClass::tsallis(0.5).group_log(-2.1), entgeo::domain_error);
    CHECK_THROWS_WITH_AS((void)GroupClass::tsallis(0.5).group_log(-3.0),
                         doctest::Contains("violates s > -2"), entgeo::domain_error);
}

TEST_CASE("round trip on admissible ranges") {
    std::mt19937 rng(1234);
    auto sample = [&](double lo, double hi) {
        std::uniform_real_distribution<double> d(lo, hi);
        return d(rng);
    };

    struct Case {
        GroupClass cls;
        double lo, hi;
    };
    const Case cases[] = {
        {GroupClass::boltzmann(), -50.0, 50.0},
        {GroupClass::tsallis(0.5), -1.9, 50.0},      // s > -1/(1-q) = -2
        {GroupClass::tsallis(1.5), -50.0, 1.9},      // s < 1/(q-1) = 2
        {GroupClass::kaniadakis(0.3), -50.0, 50.0},
        {GroupClass::kaniadakis(1.7), -50.0, 50.0},
        {GroupClass::abe_borges_roditi(0.2, 0.3), -1.4, 50.0},
        {GroupClass::abe_borges_roditi(-0.3, 0.1), -50.0, 50.0},
    };
    for (const auto& c : cases) {
        for (int i = 0; i < 100; ++i) {
            double s = sample(c.lo, c.hi);
            double back = c.cls.group_exp(c.cls.group_log(s));
            CHECK(std::abs(back - s) <= 1e-10 * (1.0 + std::abs(s)));
        }
    }
}

TEST_CASE("proportionality factor phi") {
    CHECK(GroupClass::boltzmann().phi_factor() == 1.0);
    CHECK(GroupClass::tsallis(0.5).phi_factor() == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(GroupClass::kaniadakis(0.3).phi_factor() == 1.0);
    CHECK(GroupClass::kaniadakis(1.7).phi_factor() == 1.0);
    CHECK(GroupClass::abe_borges_roditi(0.2, 0.3).phi_factor() ==
          doctest::Approx(1.5).epsilon(1e-15));

    // phi = G'(0) + G''(0), cross-checked by finite differences.
    for (const auto& cls :
         {GroupClass::boltzmann(), GroupClass::tsallis(0.5), GroupClass::tsallis(1.5),
          GroupClass::tsallis(-0.5), GroupClass::kaniadakis(0.3),
          GroupClass::kaniadakis(1.7), GroupClass::abe_borges_roditi(0.2, 0.3),
          GroupClass::abe_borges_roditi(-0.3, 0.1)}) {
        double h = 1e-3;
        double fd_phi = fd_first(cls, h) + fd_second(cls, h);
        CHECK(std::abs(fd_phi - cls.phi_factor()) <=
              1e-8 * std::max(1.0, std::abs(cls.phi_factor())));
    }

    CHECK(GroupClass::tsallis(2.0).phi_is_zero());
    CHECK(GroupClass::tsallis(2.5).phi_is_negative());
    CHECK(GroupClass::abe_borges_roditi(-0.9, -0.1).phi_is_zero());
    CHECK_FALSE(GroupClass::tsallis(0.5).phi_is_negative());
}

TEST_CASE("group law") {
    auto b = GroupClass::boltzmann();
    CHECK(b.group_law(1.3, -0.4) == doctest::Approx(0.9).epsilon(1e-15));

    auto ts = GroupClass::tsallis(0.5);
    for (double x = -1.5; x <= 2.0; x += 0.25) {
        for (double y = -1.5; y <= 2.0; y += 0.25) {
            double law = ts.group_law(x, y);
            double expected = x + y + 0.5 * x * y;
            CHECK(std::abs(law - expected) <= 1e-12 * (1.0 + std::abs(expected)));
            CHECK(law == doctest::Approx(ts.group_law(y, x)).epsilon(1e-14));
        }
    }

    for (const auto& cls : {GroupClass::tsallis(1.5), GroupClass::kaniadakis(0.3),
                            GroupClass::abe_borges_roditi(0.2, 0.3)}) {
        for (double x : {-0.5, 0.2, 1.0})
            CHECK(cls.group_law(x, 0.0) == doctest::Approx(x).epsilon(1e-13));
    }
}

TEST_CASE("generalized product") {
    CHECK(GroupClass::boltzmann().group_product(2.0, 3.0) ==
          doctest::Approx(6.0).epsilon(1e-14));
    auto ts = GroupClass::tsallis(0.5);
    for (double x : {0.5, 1.3, 2.0})
        CHECK(ts.group_product(x, 1.0) == doctest::Approx(x).epsilon(1e-13));

    // q-product closed form: [x^{1-q} + y^{1-q} - 1]^{1/(1-q)}.
    auto q_product = [](double q, double x, double y) {
        double k = 1.0 - q;
        return std::pow(std::pow(x, k) + std::pow(y, k) - 1.0, 1.0 / k);
    };
    CHECK(ts.group_product(2.0, 3.0) ==
          doctest::Approx(q_product(0.5, 2.0, 3.0)).epsilon(1e-12));
    CHECK(ts.group_product(0.8, 1.7) ==
          doctest::Approx(q_product(0.5, 0.8, 1.7)).epsilon(1e-12));

    // deformed log splits products into sums.
    auto kan = GroupClass::kaniadakis(0.4);
    double x = 1.9, y = 0.6;
    double lhs = kan.deformed_log(kan.group_product(x, y));
    CHECK(std::abs(lhs - (kan.deformed_log(x) + kan.deformed_log(y))) <= 1e-10);
}

TEST_CASE("constructor rejections") {
    CHECK_THROWS_AS(GroupClass::tsallis(1.0), entgeo::domain_error);
    CHECK_THROWS_AS(GroupClass::tsallis(1.0 + 1e-13), entgeo::domain_error);
    CHECK_THROWS_AS(GroupClass::kaniadakis(1.0), entgeo::domain_error);
    CHECK_THROWS_AS(GroupClass::abe_borges_roditi(0.3, 0.3), entgeo::domain_error);
    CHECK_NOTHROW(GroupClass::tsallis(1.0 + 1e-11));
}

TEST_CASE("overflow is signaled, not propagated") {
    CHECK_THROWS_AS((void)GroupClass::tsallis(-2.0).group_exp(300.0),
                    entgeo::range_overflow_error);
    CHECK_THROWS_AS((void)GroupClass::kaniadakis(3.0).group_exp(-400.0),
                    entgeo::range_overflow_error);
    CHECK_THROWS_AS((void)GroupClass::abe_borges_roditi(2.0, 0.5).group_exp(400.0),
                    entgeo::range_overflow_error);
    // Decaying direction stays finite.
    CHECK(std::isfinite(GroupClass::abe_borges_roditi(0.2, 0.3).group_exp(-2000.0)));
}

TEST_CASE("behavior near the Boltzmann boundary") {
    // Continuity: G approaches the identity as q -> 1.
    for (double q : {1.0 - 1e-6, 1.0 + 1e-6}) {
        auto ts = GroupClass::tsallis(q);
        auto kan = GroupClass::kaniadakis(q);
        for (double t = -10.0; t <= 10.0; t += 0.5) {
            if (t == 0.0) continue;
            CHECK(std::abs(ts.group_exp(t) - t) <= 1e-5 * std::abs(t));
            CHECK(std::abs(kan.group_exp(t) - t) <= 1e-5 * std::abs(t));
        }
    }

    // The series branch agrees with the stabilized closed forms.
    for (double q : {1.0 - 1e-8, 1.0 + 1e-9}) {
        double k = 1.0 - q;
        auto ts = GroupClass::tsallis(q);
        auto kan = GroupClass::kaniadakis(q);
        for (double t : {-7.3, -0.9, 0.4, 3.1}) {
            CHECK(ts.group_exp(t) ==
                  doctest::Approx(std::expm1(k * t) / k).epsilon(1e-12));
            CHECK(kan.group_exp(t) ==
                  doctest::Approx(std::sinh(k * t) / k).epsilon(1e-12));
            CHECK(ts.group_log(t) == doctest::Approx(std::log1p(k * t) / k).epsilon(1e-12));
            CHECK(kan.group_log(t) == doctest::Approx(std::asinh(k * t) / k).epsilon(1e-12));
        }
    }
}

TEST_CASE("abr class contains the others") {
    // a = 1-q, b = 0 gives the Tsallis class; b = -(1-q) the Kaniadakis one.
    double q = 0.6, k = 1.0 - q;
    auto ts = GroupClass::tsallis(q);
    auto kan = GroupClass::kaniadakis(q);
    auto abr_t = GroupClass::abe_borges_roditi(k, 0.0);
    auto abr_k = GroupClass::abe_borges_roditi(k, -k);
    for (double t : {-2.0, -0.3, 0.7, 2.4}) {
        CHECK(abr_t.group_exp(t) == doctest::Approx(ts.group_exp(t)).epsilon(1e-13));
        CHECK(abr_k.group_exp(t) == doctest::Approx(kan.group_exp(t)).epsilon(1e-13));
    }
}
