#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "nvlab/demand.hpp"

using namespace nvlab;

TEST_CASE("weibull cdf matches closed form") {
    CHECK(weibull_cdf({1.0, 1.0}, std::log(2.0)) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(weibull_cdf({2.0, 2.0}, 0.0) == 0.0);
    CHECK(weibull_cdf({0.5, 2.0}, 2.0) ==
          doctest::Approx(0.8646647167633873).epsilon(1e-12));
    CHECK_THROWS_AS(weibull_cdf({1.0, 1.0}, -0.1), std::domain_error);
    CHECK_THROWS_AS(weibull_cdf({-1.0, 1.0}, 0.5), std::domain_error);
}

TEST_CASE("weibull inverse cdf matches closed form") {
    CHECK(weibull_inverse_cdf({1.0, 1.0}, 0.5) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(weibull_inverse_cdf({1.0, 1.0}, 0.0) == 0.0);
    CHECK(weibull_inverse_cdf({4.0, 2.0}, 0.9) ==
          doctest::Approx(0.7587135646925732).epsilon(1e-12));
    CHECK_THROWS_AS(weibull_inverse_cdf({1.0, 1.0}, 1.0), std::domain_error);
    CHECK_THROWS_AS(weibull_inverse_cdf({1.0, 1.0}, -0.01), std::domain_error);
}

TEST_CASE("cdf and inverse cdf round-trip") {
    for (const WeibullParams params : {WeibullParams{1.0, 1.0}, WeibullParams{0.4, 2.3},
                                       WeibullParams{5.0, 0.7}}) {
        for (int i = 1; i <= 99; ++i) {
            const double q = i / 100.0;
            CHECK(weibull_cdf(params, weibull_inverse_cdf(params, q)) ==
                  doctest::Approx(q).epsilon(1e-12));
        }
    }
}

TEST_CASE("weibull cdf is strictly increasing") {
    const WeibullParams params{0.8, 1.7};
    double prev = weibull_cdf(params, 0.0);
    for (double x = 0.05; x < 6.0; x += 0.05) {
        const double cur = weibull_cdf(params, x);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("inverse transform recovers stated draws") {
    // u = 1 - e^{-2} under (theta=0.5, k=2) inverts the cdf example above.
    CHECK(weibull_inverse_cdf({0.5, 2.0}, 0.8646647167633873) ==
          doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("weibull sampler stays inside the DKW band") {
    const WeibullParams params{0.7, 1.3};
    const int n = 100000;
    auto rng = make_rng(20240601, 0, 0);
    std::vector<double> samples(n);
    for (auto& s : samples) {
        s = weibull_sample(params, rng);
    }
    std::sort(samples.begin(), samples.end());
    double sup = 0.0;
    for (int i = 0; i < n; ++i) {
        const double f = weibull_cdf(params, samples[i]);
        sup = std::max(sup, std::abs(f - (i + 1.0) / n));
        sup = std::max(sup, std::abs(f - static_cast<double>(i) / n));
    }
    const double band = std::sqrt(std::log(2.0 / 1e-6) / (2.0 * n));
    CHECK(sup <= band);
}

TEST_CASE("gamma sampler moments") {
    const int n = 100000;
    auto rng = make_rng(7, 0, 1);

    SUBCASE("unit exponential case") {
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            sum += gamma_sample({1.0, 1.0}, rng);
        }
        const double mean = sum / n;
        CHECK(std::abs(mean - 1.0) <= 4.0 / std::sqrt(static_cast<double>(n)));
    }

    SUBCASE("shape-rate moments") {
        const GammaParams params{4.0, 4.0};
        double sum = 0.0, sum_sq = 0.0;
        for (int i = 0; i < n; ++i) {
            const double x = gamma_sample(params, rng);
            sum += x;
            sum_sq += x * x;
        }
        const double mean = sum / n;
        const double var = sum_sq / n - mean * mean;
        const double se = std::sqrt(params.alpha) / params.beta / std::sqrt(double(n));
        CHECK(std::abs(mean - 1.0) <= 4.0 * se);
        CHECK(var == doctest::Approx(0.25).epsilon(0.10));
    }

    SUBCASE("inverse draws estimate beta over alpha minus one") {
        const GammaParams params{5.0, 6.0};
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            sum += 1.0 / gamma_sample(params, rng);
        }
        // inverse-gamma mean 1.5, sd sqrt(beta^2/((a-1)^2 (a-2)))
        const double se = std::sqrt(36.0 / (16.0 * 3.0)) / std::sqrt(double(n));
        CHECK(std::abs(sum / n - 1.5) <= 4.0 * se);
    }
}

TEST_CASE("inverse-gamma lower tail stays under (2/e)^alpha") {
    const GammaParams params{4.0, 4.0};
    const int n = 100000;
    auto rng = make_rng(11, 2, 3);
    int hits = 0;
    for (int i = 0; i < n; ++i) {
        const double theta = gamma_sample(params, rng);
        if (1.0 / theta <= params.beta / (2.0 * params.alpha)) {
            ++hits;
        }
    }
    const double freq = static_cast<double>(hits) / n;
    const double se = std::sqrt(freq * (1.0 - freq) / n);
    CHECK(freq <= std::pow(2.0 / M_E, params.alpha) + 3.0 * se);
}

TEST_CASE("truncated normal sampling and moments") {
    const int n = 100000;
    auto rng = make_rng(13, 4, 5);

    SUBCASE("truncation negligible far from zero") {
        const NormalParams params{10.0, 1.0};
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            const double x = normal_sample_truncated(params, rng);
            CHECK(x >= 0.0);
            sum += x;
        }
        CHECK(std::abs(sum / n - 10.0) <= 4.0 / std::sqrt(double(n)));
    }

    SUBCASE("half-normal mean at mu zero") {
        const NormalParams params{0.0, 1.0};
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            sum += normal_sample_truncated(params, rng);
        }
        const double sd = std::sqrt(1.0 - 2.0 / M_PI);
        CHECK(std::abs(sum / n - 0.7978845608028654) <= 4.0 * sd / std::sqrt(double(n)));
    }
}

TEST_CASE("truncated normal quantile") {
    // Half-normal median is 0.674489... and for mu >> 0 the conditional
    // median collapses to mu.
    CHECK(truncated_normal_quantile({0.0, 1.0}, 0.5) ==
          doctest::Approx(0.6744897501960817).epsilon(1e-7));
    CHECK(truncated_normal_quantile({10.0, 1.0}, 0.5) ==
          doctest::Approx(10.0).epsilon(1e-7));
    const NormalParams params{3.0, 2.0};
    for (double q : {0.1, 0.5, 0.9}) {
        CHECK(truncated_normal_cdf(params, truncated_normal_quantile(params, q)) ==
              doctest::Approx(q).epsilon(1e-7));
    }
}

TEST_CASE("demand range endpoints") {
    const DemandRange range = demand_range(1.0, 1.0, 600, 0.1);
    CHECK(range.d_high == doctest::Approx(9.392661928770137).epsilon(1e-12));
    CHECK(range.d_low == doctest::Approx(8.333680574837545e-05).epsilon(1e-9));

    // delta -> 0 collapses the lower endpoint
    CHECK(demand_range(1.0, 1.0, 600, 1e-12).d_low < 1e-14);

    CHECK_THROWS_AS(demand_range(1.0, 1.0, 600, 0.0), std::domain_error);
    CHECK_THROWS_AS(demand_range(1.0, 1.0, 600, 1.0), std::domain_error);
}

TEST_CASE("demand range hits the stated tail masses exactly") {
    for (double k : {1.0, 2.0}) {
        for (double theta : {0.5, 1.0, 3.0}) {
            const int horizon = 600;
            const double delta = 0.1;
            const DemandRange range = demand_range(theta, k, horizon, delta);
            const double tail = delta / (2.0 * horizon);
            CHECK(weibull_cdf({theta, k}, range.d_low) ==
                  doctest::Approx(tail).epsilon(1e-12));
            CHECK(weibull_cdf({theta, k}, range.d_high) ==
                  doctest::Approx(1.0 - tail).epsilon(1e-12));
        }
    }
}

TEST_CASE("weibull mean through log-gamma") {
    CHECK(weibull_mean({1.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-10));
    // theta^{-1/k} Gamma(1 + 1/k); Gamma(1.5) = sqrt(pi)/2
    CHECK(weibull_mean({1.0, 2.0}) ==
          doctest::Approx(0.8862269254527580).epsilon(1e-10));
    CHECK(weibull_mean({4.0, 2.0}) ==
          doctest::Approx(0.8862269254527580 / 2.0).epsilon(1e-10));
}

TEST_CASE("demand variant dispatch") {
    const Demand weibull = WeibullParams{1.0, 1.0};
    const Demand normal = NormalParams{10.0, 2.0};
    CHECK(demand_mean(weibull) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(demand_quantile(weibull, 0.5) == doctest::Approx(std::log(2.0)));
    CHECK(demand_mean(normal) == doctest::Approx(10.0).epsilon(1e-6));
    CHECK(demand_cdf(normal, demand_quantile(normal, 0.75)) ==
          doctest::Approx(0.75).epsilon(1e-7));
}
