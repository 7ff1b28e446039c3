#include "entgeo/errors.hpp"
#include "entgeo/models.hpp"
#include "entgeo/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace entgeo;

namespace {

double normalization(const ParametricFamily& fam, const Eigen::VectorXd& theta,
                     const QuadratureSpec& spec) {
    Eigen::VectorXd center, scales;
    fam.envelope(theta, center, scales);
    return integrate(
               [&](const Eigen::VectorXd& x) { return std::exp(fam.log_density(x, theta)); },
               center, scales, spec)
        .value;
}

} // namespace

TEST_CASE("gaussian family basics") {
    auto fam = gaussian1d();
    QuadratureSpec spec;

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> mu(-3.0, 3.0), sigma(0.3, 2.5);
    for (int i = 0; i < 5; ++i) {
        Eigen::VectorXd theta = Eigen::Vector2d(mu(rng), sigma(rng));
        CHECK(std::abs(normalization(fam, theta, spec) - 1.0) <= 1e-8);
    }

    // Regularity: the mean parameter score vanishes.
    Eigen::VectorXd theta = Eigen::Vector2d(0.7, 1.4);
    Eigen::VectorXd center, scales;
    fam.envelope(theta, center, scales);
    for (int j = 0; j < 2; ++j) {
        double mean_score =
            integrate(
                [&](const Eigen::VectorXd& x) {
                    return std::exp(fam.log_density(x, theta)) * fam.param_score(x, theta, j);
                },
                center, scales, spec)
                .value;
        CHECK(std::abs(mean_score) <= 1e-10);
    }

    CHECK_THROWS_AS(gaussian1d(0.0, 0.0), domain_error);
    CHECK_THROWS_AS(gaussian1d(0.0, -1.0), domain_error);
    CHECK_THROWS_AS(check_theta(fam, Eigen::Vector2d(0.0, 1e-10)), domain_error);
    CHECK_THROWS_AS(check_theta(fam, Eigen::Vector2d(0.0, 1.0).head(1)), domain_error);
}

TEST_CASE("densities are nonnegative and scores analytic") {
    auto fam = gaussian1d();
    Eigen::VectorXd theta = Eigen::Vector2d(0.2, 0.9);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> xs(-6.0, 6.0);
    for (int i = 0; i < 50; ++i) {
        Eigen::VectorXd x = Eigen::VectorXd::Constant(1, xs(rng));
        CHECK(std::exp(fam.log_density(x, theta)) >= 0.0);
        // sample-space score against a finite difference of the log density
        double h = 1e-6;
        Eigen::VectorXd xp = x, xm = x;
        xp(0) += h;
        xm(0) -= h;
        double fd = (fam.log_density(xp, theta) - fam.log_density(xm, theta)) / (2 * h);
        CHECK(fam.sample_score(x, theta, 0) == doctest::Approx(fd).epsilon(1e-7));
    }
}

TEST_CASE("correlated family normalization and structure") {
    QuadratureSpec spec;
    for (double r : {0.0, 0.5, 0.9}) {
        Correlated2DParams p{0.0, 1.0, r, 1.0};
        auto fam = correlated2d(p);
        QuadratureSpec loose = spec;
        loose.rel_tol = 1e-9;
        CHECK(std::abs(normalization(fam, fam.default_theta, loose) - 1.0) <= 1e-8);
    }

    // r = 0 factorizes into independent gaussians N(mu, sigma) x N(0, Sigma^2/sigma).
    Correlated2DParams p{0.3, 1.2, 0.0, 0.8};
    auto fam = correlated2d(p);
    Eigen::VectorXd theta = Eigen::Vector2d(0.3, 1.2);
    double sd_y = 0.8 * 0.8 / 1.2;
    auto marginal = [](double z, double sd) {
        return -0.5 * std::log(2.0 * 3.14159265358979323846) - std::log(sd) -
               0.5 * z * z / (sd * sd);
    };
    for (double x = -2.0; x <= 2.0; x += 0.7) {
        for (double y = -2.0; y <= 2.0; y += 0.7) {
            double joint = fam.log_density(Eigen::Vector2d(x, y), theta);
            double split = marginal(x - 0.3, 1.2) + marginal(y, sd_y);
            CHECK(joint == doctest::Approx(split).epsilon(1e-12));
        }
    }

    CHECK_THROWS_AS(correlated2d(Correlated2DParams{0, 1, 1.0, 1}), domain_error);
    CHECK_THROWS_AS(correlated2d(Correlated2DParams{0, 1, -1.2, 1}), domain_error);
    CHECK_THROWS_AS(correlated2d(Correlated2DParams{0, -1, 0.5, 1}), domain_error);
    CHECK_THROWS_AS(correlated2d(Correlated2DParams{0, 1, 0.5, 0}), domain_error);
}

TEST_CASE("closed-form metric of the correlated model") {
    auto diag = [](const MetricTensor& m) {
        return std::make_pair(m.matrix()(0, 0), m.matrix()(1, 1));
    };

    auto [a0, b0] = diag(closed_form_metric_2dc(Correlated2DParams{0, 1, 0.0, 1}));
    CHECK(a0 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(b0 == doctest::Approx(4.0).epsilon(1e-15));

    auto [a1, b1] = diag(closed_form_metric_2dc(Correlated2DParams{0, 2, 0.0, 1}));
    CHECK(a1 == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(b1 == doctest::Approx(1.0).epsilon(1e-15));

    auto [a2, b2] = diag(closed_form_metric_2dc(Correlated2DParams{0, 1, 0.6, 1}));
    CHECK(a2 == doctest::Approx(1.0 / 0.64).epsilon(1e-15));
    CHECK(b2 == doctest::Approx(4.0 / 0.64).epsilon(1e-15));

    auto m = closed_form_metric_2dc(Correlated2DParams{0, 1, 0.6, 1});
    CHECK(m.matrix()(0, 1) == 0.0);
    CHECK(m.positive_definite());
}

TEST_CASE("oscillator mapping") {
    SUBCASE("temperature fixes the correlation") {
        OscillatorEnsemble ens;
        ens.T = 1.0;
        ens.T0 = 1.0;
        CHECK(oscillator_to_2dc(ens).r == 0.0);

        ens.T = 0.5;
        ens.T0 = 1.0;
        CHECK(oscillator_to_2dc(ens).r == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    }

    SUBCASE("marginal density matches the mapped model pointwise") {
        OscillatorEnsemble ens{2.0, 0.5, 1.5, 3.0, 0.7, 0.0, 1.0, 2.0};
        auto mapped = oscillator_to_2dc(ens);
        auto fam = correlated2d(mapped);
        Eigen::VectorXd theta = Eigen::Vector2d(mapped.mu_x, mapped.sigma);

        for (int i = 0; i <= 20; ++i) {
            for (int j = 0; j <= 20; ++j) {
                double x1 = ens.x10 + (i - 10) * 0.2;
                double x2 = (j - 10) * 0.2;
                double lhs = oscillator_marginal_log_density(ens, x1, x2);
                double rhs = fam.log_density(Eigen::Vector2d(x1, x2), theta);
                CHECK(std::abs(std::exp(lhs - rhs) - 1.0) <= 1e-8);
            }
        }
    }

    SUBCASE("round trip recovers the temperature ratio") {
        for (double ratio : {1.0, 0.75, 0.5, 0.1, 1e-3}) {
            OscillatorEnsemble ens;
            ens.T = ratio;
            ens.T0 = 1.0;
            auto mapped = oscillator_to_2dc(ens);
            CHECK(std::abs(temperature_ratio_from_2dc(mapped) - ratio) <= 1e-12);
        }
    }

    SUBCASE("rejections") {
        OscillatorEnsemble ens;
        ens.T = 2.0;
        ens.T0 = 1.0;
        CHECK_THROWS_WITH_AS(oscillator_to_2dc(ens), doctest::Contains("imaginary"),
                             domain_error);
        ens.T = -1.0;
        CHECK_THROWS_AS(oscillator_to_2dc(ens), domain_error);
        ens = OscillatorEnsemble{};
        ens.m1 = 0.0;
        CHECK_THROWS_AS(oscillator_to_2dc(ens), domain_error);
    }
}
