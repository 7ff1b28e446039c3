#include "entgeo/entropy.hpp"
#include "entgeo/errors.hpp"
#include "entgeo/models.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace entgeo;

namespace {

const double kPi = 3.14159265358979323846;

// Gaussian power moment: integral N(mu,sigma)^s dx = (2 pi sigma^2)^{(1-s)/2} / sqrt(s).
double gaussian_power_moment(double sigma, double s) {
    return std::pow(2.0 * kPi * sigma * sigma, 0.5 * (1.0 - s)) / std::sqrt(s);
}

double shannon_entropy(double sigma) {
    return 0.5 * (std::log(2.0 * kPi) + 1.0) + std::log(sigma);
}

// Product of two independent 1D families as a 2D family.
ParametricFamily product_family(const ParametricFamily& a, const Eigen::VectorXd& theta_a,
                                const ParametricFamily& b, const Eigen::VectorXd& theta_b) {
    ParametricFamily f;
    f.name = "product";
    f.sample_dim = 2;
    f.param_dim = 1; // dummy scale parameter, unused
    f.param_names = {"s"};
    f.param_domain = {{0.0, 2.0}};
    f.log_density = [=](const Eigen::VectorXd& x, const Eigen::VectorXd&) {
        return a.log_density(x.head(1), theta_a) + b.log_density(x.tail(1), theta_b);
    };
    f.envelope = [=](const Eigen::VectorXd&, Eigen::VectorXd& center,
                     Eigen::VectorXd& scales) {
        Eigen::VectorXd ca, sa, cb, sb;
        a.envelope(theta_a, ca, sa);
        b.envelope(theta_b, cb, sb);
        center.resize(2);
        scales.resize(2);
        center << ca(0), cb(0);
        scales << sa(0), sb(0);
    };
    f.default_theta = Eigen::VectorXd::Constant(1, 1.0);
    return f;
}

Eigen::VectorXd theta2(double mu, double sigma) { return Eigen::Vector2d(mu, sigma); }

// Gaussian Kullback-Leibler closed form.
double gaussian_kl(double mu1, double s1, double mu2, double s2) {
    return std::log(s2 / s1) + (s1 * s1 + (mu1 - mu2) * (mu1 - mu2)) / (2.0 * s2 * s2) - 0.5;
}

} // namespace

TEST_CASE("entropy functional reproduces closed forms") {
    auto fam = gaussian1d();
    QuadratureSpec quad;

    SUBCASE("boltzmann gives the Shannon entropy") {
        CHECK(entropy_sg(GroupClass::boltzmann(), fam, theta2(0, 1), quad).value ==
              doctest::Approx(shannon_entropy(1.0)).epsilon(1e-10));
        CHECK(entropy_sg(GroupClass::boltzmann(), fam, theta2(0, 2), quad).value ==
              doctest::Approx(shannon_entropy(2.0)).epsilon(1e-10));
        CHECK(entropy_sg(GroupClass::boltzmann(), fam, theta2(3, 2), quad).value ==
              doctest::Approx(shannon_entropy(2.0)).epsilon(1e-10));
    }

    SUBCASE("tsallis entropy from the power moment") {
        for (double q : {0.5, 1.5}) {
            double expected = (gaussian_power_moment(1.3, q) - 1.0) / (1.0 - q);
            CHECK(entropy_sg(GroupClass::tsallis(q), fam, theta2(0.4, 1.3), quad).value ==
                  doctest::Approx(expected).epsilon(1e-10));
        }
    }

    SUBCASE("kaniadakis entropy from two power moments") {
        double q = 0.7, k = 1.0 - q, sigma = 1.1;
        double expected =
            (gaussian_power_moment(sigma, 1.0 - k) - gaussian_power_moment(sigma, 1.0 + k)) /
            (2.0 * k);
        CHECK(entropy_sg(GroupClass::kaniadakis(q), fam, theta2(0, sigma), quad).value ==
              doctest::Approx(expected).epsilon(1e-10));
    }

    SUBCASE("abe-borges-roditi entropy from two power moments") {
        double a = 0.2, b = 0.3, sigma = 0.9;
        double expected =
            (gaussian_power_moment(sigma, 1.0 - a) - gaussian_power_moment(sigma, 1.0 - b)) /
            (a - b);
        CHECK(entropy_sg(GroupClass::abe_borges_roditi(a, b), fam, theta2(0, sigma), quad)
                  .value == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("entropy of independent product composes through the group law") {
    auto fam = gaussian1d();
    QuadratureSpec quad;
    auto prod = product_family(fam, theta2(0.0, 1.0), fam, theta2(0.5, 1.7));
    Eigen::VectorXd dummy = prod.default_theta;

    for (const auto& cls : {GroupClass::boltzmann(), GroupClass::tsallis(0.5)}) {
        double sa = entropy_sg(cls, fam, theta2(0.0, 1.0), quad).value;
        double sb = entropy_sg(cls, fam, theta2(0.5, 1.7), quad).value;
        double joint = entropy_sg(cls, prod, dummy, quad).value;
        double tol = 5.0 * std::max(quad.abs_tol, quad.rel_tol * std::abs(joint));
        CHECK(std::abs(joint - cls.group_law(sa, sb)) <= tol);
    }
}

TEST_CASE("divergence basics") {
    auto fam = gaussian1d();
    QuadratureSpec quad;

    SUBCASE("identical arguments vanish") {
        for (const auto& cls : {GroupClass::boltzmann(), GroupClass::tsallis(1.5),
                                GroupClass::kaniadakis(0.3)}) {
            double d = divergence_dg(cls, fam, theta2(0.3, 1.2), fam, theta2(0.3, 1.2), quad)
                           .value;
            CHECK(std::abs(d) <= 1e-12);
        }
    }

    SUBCASE("boltzmann class gives Kullback-Leibler") {
        double d = divergence_dg(GroupClass::boltzmann(), fam, theta2(1.0, 1.0), fam,
                                 theta2(0.0, 1.0), quad)
                       .value;
        CHECK(d == doctest::Approx(0.5).epsilon(1e-11)); // (mu1-mu2)^2 / (2 sigma^2)

        double d2 = divergence_dg(GroupClass::boltzmann(), fam, theta2(0.7, 0.8), fam,
                                  theta2(-0.4, 1.9), quad)
                        .value;
        CHECK(d2 == doctest::Approx(gaussian_kl(0.7, 0.8, -0.4, 1.9)).epsilon(1e-11));
    }

    SUBCASE("tsallis divergence against a dense trapezoid grid") {
        double q = 0.5;
        auto lp = [](double x, double mu, double s) {
            return -0.5 * std::log(2.0 * kPi) - std::log(s) -
                   0.5 * (x - mu) * (x - mu) / (s * s);
        };
        // Brute-force oracle: 10^6-point trapezoid over a wide interval.
        const int n = 1000000;
        const double lo = -20.0, hi = 20.0, h = (hi - lo) / n;
        double acc = 0.0;
        for (int i = 0; i <= n; ++i) {
            double x = lo + i * h;
            double a = lp(x, 0.6, 1.0), b = lp(x, 0.0, 1.3);
            double v = std::exp(a) * (std::expm1((1.0 - q) * (a - b)) / (1.0 - q));
            acc += (i == 0 || i == n) ? 0.5 * v : v;
        }
        acc *= h;

        double d = divergence_dg(GroupClass::tsallis(q), gaussian1d(), theta2(0.6, 1.0),
                                 gaussian1d(), theta2(0.0, 1.3), quad)
                       .value;
        CHECK(d == doctest::Approx(acc).epsilon(1e-9));
    }
}

TEST_CASE("divergence properties") {
    auto fam = gaussian1d();
    QuadratureSpec quad;

    SUBCASE("nonnegative on random gaussian pairs") {
        std::mt19937 rng(2024);
        std::uniform_real_distribution<double> mu(-2.0, 2.0), sigma(0.4, 2.2);
        for (int i = 0; i < 40; ++i) {
            double d = divergence_dg(GroupClass::boltzmann(), fam,
                                     theta2(mu(rng), sigma(rng)), fam,
                                     theta2(mu(rng), sigma(rng)), quad)
                           .value;
            CHECK(d >= -quad.abs_tol);
        }
    }

    SUBCASE("additive over independent products") {
        auto p = product_family(fam, theta2(0.2, 1.0), fam, theta2(-0.5, 1.4));
        auto q = product_family(fam, theta2(0.0, 1.2), fam, theta2(0.3, 1.1));
        double joint = divergence_dg(GroupClass::boltzmann(), p, p.default_theta, q,
                                     q.default_theta, quad)
                           .value;
        double d1 = gaussian_kl(0.2, 1.0, 0.0, 1.2);
        double d2 = gaussian_kl(-0.5, 1.4, 0.3, 1.1);
        double tol = 5.0 * std::max(quad.abs_tol, quad.rel_tol * std::abs(joint));
        CHECK(std::abs(joint - (d1 + d2)) <= tol);
    }

    SUBCASE("invariant under x -> 2x + 1 applied to both densities") {
        // Transformed family: density of y = 2x+1 when x ~ N(mu, sigma).
        auto transformed = gaussian1d();
        transformed.log_density = [](const Eigen::VectorXd& y, const Eigen::VectorXd& t) {
            double x = (y(0) - 1.0) / 2.0;
            double z = (x - t(0)) / t(1);
            return -0.5 * std::log(2.0 * kPi) - std::log(t(1)) - 0.5 * z * z -
                   std::log(2.0);
        };
        transformed.envelope = [](const Eigen::VectorXd& t, Eigen::VectorXd& c,
                                  Eigen::VectorXd& s) {
            c.resize(1);
            s.resize(1);
            c(0) = 2.0 * t(0) + 1.0;
            s(0) = 2.0 * t(1);
        };
        transformed.param_score = nullptr;
        transformed.sample_score = nullptr;
        transformed.closed_form_metric = nullptr;

        double base = divergence_dg(GroupClass::boltzmann(), fam, theta2(0.8, 1.0), fam,
                                    theta2(0.0, 1.5), quad)
                          .value;
        double moved = divergence_dg(GroupClass::boltzmann(), transformed, theta2(0.8, 1.0),
                                     transformed, theta2(0.0, 1.5), quad)
                           .value;
        CHECK(moved == doctest::Approx(base).epsilon(1e-10));
    }

    SUBCASE("convex in the pair of mixtures") {
        auto mixture = [&](double lambda, Eigen::Vector2d ta, Eigen::Vector2d tb) {
            ParametricFamily f = gaussian1d();
            auto base = gaussian1d();
            f.log_density = [=](const Eigen::VectorXd& x, const Eigen::VectorXd&) {
                // log-sum-exp keeps the far tails representable
                double la = base.log_density(x, ta);
                double lb = base.log_density(x, tb);
                if (lambda >= 1.0) return la;
                if (lambda <= 0.0) return lb;
                double wa = std::log(lambda) + la;
                double wb = std::log1p(-lambda) + lb;
                double m = std::max(wa, wb);
                return m + std::log(std::exp(wa - m) + std::exp(wb - m));
            };
            f.envelope = [=](const Eigen::VectorXd&, Eigen::VectorXd& c, Eigen::VectorXd& s) {
                c.resize(1);
                s.resize(1);
                c(0) = lambda * ta(0) + (1.0 - lambda) * tb(0);
                double spread = std::max(ta(1), tb(1)) + std::abs(ta(0) - tb(0));
                s(0) = spread;
            };
            f.param_score = nullptr;
            f.sample_score = nullptr;
            f.closed_form_metric = nullptr;
            return f;
        };

        Eigen::Vector2d p1(0.0, 1.0), p2(1.0, 1.4), q1(0.3, 1.2), q2(-0.5, 0.9);
        Eigen::VectorXd dummy = theta2(0.0, 1.0);
        auto b = GroupClass::boltzmann();
        QuadratureSpec wide = quad;
        wide.rel_tol = 1e-8;
        double d1 = divergence_dg(b, mixture(1.0, p1, p2), dummy, mixture(1.0, q1, q2), dummy,
                                  wide)
                        .value;
        double d2 = divergence_dg(b, mixture(0.0, p1, p2), dummy, mixture(0.0, q1, q2), dummy,
                                  wide)
                        .value;
        for (double lambda : {0.25, 0.5, 0.75}) {
            double mixed = divergence_dg(b, mixture(lambda, p1, p2), dummy,
                                         mixture(lambda, q1, q2), dummy, wide)
                               .value;
            CHECK(mixed <= lambda * d1 + (1.0 - lambda) * d2 + 1e-8);
        }
    }
}

TEST_CASE("entropy requires a normalized density") {
    auto fam = gaussian1d();
    fam.log_density = [](const Eigen::VectorXd& x, const Eigen::VectorXd& t) {
        double z = (x(0) - t(0)) / t(1);
        return -0.5 * z * z; // missing the normalization constant
    };
    fam.param_score = nullptr;
    CHECK_THROWS_WITH_AS(
        (void)entropy_sg(GroupClass::boltzmann(), fam, Eigen::Vector2d(0, 1),
                         QuadratureSpec{}),
        doctest::Contains("not normalized"), domain_error);
}

TEST_CASE("support mismatch surfaces as a domain error") {
    // q decays much faster than p: ln(p/q) grows quadratically and the
    // Tsallis integrand overflows in the tails.
    auto fam = gaussian1d();
    QuadratureSpec quad;
    CHECK_THROWS_AS((void)divergence_dg(GroupClass::tsallis(-30.0), fam, theta2(0.0, 6.0),
                                        fam, theta2(0.0, 0.05), quad),
                    domain_error);
}
