#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nvlab/newsvendor.hpp"

using namespace nvlab;

namespace {

// Closed-form cost for exponential demand, used as the quadrature oracle:
// g(y) = h (y - 1 + e^-y) + p e^-y for theta = 1.
double exp_cost(double h, double p, double y) {
    return h * (y - 1.0 + std::exp(-y)) + p * std::exp(-y);
}

}  // namespace

TEST_CASE("service level") {
    CHECK(service_level({1.0, 1.0}) == doctest::Approx(0.5));
    CHECK(service_level({1.0 / 9.0, 1.0}) == doctest::Approx(0.9).epsilon(1e-14));
    CHECK(service_level({1.0 / 49.0, 1.0}) == doctest::Approx(0.98).epsilon(1e-14));
}

TEST_CASE("realized cost") {
    CHECK(realized_cost({1.0, 1.0}, 2.0, 1.0) == 1.0);
    CHECK(realized_cost({1.0, 2.0}, 1.0, 3.0) == 4.0);
    CHECK(realized_cost({3.0, 7.0}, 1.5, 1.5) == 0.0);
    CHECK_THROWS_AS(realized_cost({1.0, 1.0}, -1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(realized_cost({1.0, 1.0}, 0.0, -1.0), std::domain_error);
}

TEST_CASE("expected cost against exponential closed form") {
    const CostParams cost{1.0, 1.0};
    const WeibullParams demand{1.0, 1.0};
    CHECK(expected_cost(cost, demand, std::log(2.0)) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-9));
    CHECK(expected_cost(cost, demand, 0.0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(expected_cost(cost, demand, 10.0) ==
          doctest::Approx(9.000090799859525).epsilon(1e-9));
    for (double y : {0.2, 0.9, 1.7, 3.1}) {
        CHECK(expected_cost(cost, demand, y) ==
              doctest::Approx(exp_cost(1.0, 1.0, y)).epsilon(1e-9));
    }
    CHECK(expected_cost({0.5, 2.0}, demand, 1.3) ==
          doctest::Approx(exp_cost(0.5, 2.0, 1.3)).epsilon(1e-9));
}

TEST_CASE("optimal order closed form") {
    CHECK(optimal_order({1.0, 1.0}, WeibullParams{1.0, 1.0}) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(optimal_order({1.0, 9.0}, WeibullParams{1.0, 1.0}) ==
          doctest::Approx(2.302585092994046).epsilon(1e-12));
    CHECK(optimal_order({1.0, 1.0}, WeibullParams{1.0, 2.0}) ==
          doctest::Approx(0.8325546111576977).epsilon(1e-12));
}

TEST_CASE("grid search agrees with the critical quantile") {
    const CostParams cost{1.0, 1.0};
    const WeibullParams demand{1.0, 1.0};
    const double y_star = optimal_order(cost, demand);
    const double step = 1e-3;
    double best_y = 0.0;
    double best = expected_cost(cost, demand, 0.0);
    for (double y = step; y <= 4.0 * y_star; y += step) {
        const double g = expected_cost(cost, demand, y);
        if (g < best) {
            best = g;
            best_y = y;
        }
    }
    CHECK(std::abs(best_y - y_star) <= step);
}

TEST_CASE("expected cost is convex in the order") {
    const CostParams cost{0.7, 2.1};
    const WeibullParams demand{0.9, 1.4};
    auto rng = make_rng(19, 0, 0);
    for (int i = 0; i < 200; ++i) {
        const double y1 = 4.0 * uniform01(rng);
        const double y2 = 4.0 * uniform01(rng);
        const double lambda = uniform01(rng);
        const double mid = lambda * y1 + (1.0 - lambda) * y2;
        CHECK(expected_cost(cost, demand, mid) <=
              lambda * expected_cost(cost, demand, y1) +
                  (1.0 - lambda) * expected_cost(cost, demand, y2) + 1e-8);
    }
}

TEST_CASE("monte carlo realized cost matches expected cost") {
    const CostParams cost{1.0, 2.0};
    const WeibullParams demand{1.3, 1.0};
    const double y = 0.8;
    const int n = 100000;
    auto rng = make_rng(23, 0, 0);
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double c = realized_cost(cost, y, weibull_sample(demand, rng));
        sum += c;
        sum_sq += c * c;
    }
    const double mean = sum / n;
    const double se = std::sqrt((sum_sq / n - mean * mean) / n);
    CHECK(std::abs(mean - expected_cost(cost, demand, y)) <= 4.0 * se);
}

TEST_CASE("sales difference is 1-Lipschitz in the order") {
    auto rng = make_rng(29, 0, 0);
    const WeibullParams demand{1.0, 1.0};
    for (int i = 0; i < 500; ++i) {
        const double y = 3.0 * uniform01(rng);
        const double y_star = 3.0 * uniform01(rng);
        const double d = weibull_sample(demand, rng);
        CHECK(std::abs(std::min(y, d) - std::min(y_star, d)) <=
              std::abs(y - y_star) + 1e-15);
    }
}

TEST_CASE("normal demand quantile and cost") {
    const NormalParams normal{10.0, 2.0};
    const Demand demand = normal;
    const CostParams cost{1.0, 1.0};
    const double y_star = optimal_order(cost, demand);
    CHECK(truncated_normal_cdf(normal, y_star) == doctest::Approx(0.5).epsilon(1e-7));
    // the quantile minimizes the expected cost
    CHECK(expected_cost(cost, demand, y_star) <=
          expected_cost(cost, demand, y_star + 0.5));
    CHECK(expected_cost(cost, demand, y_star) <=
          expected_cost(cost, demand, y_star - 0.5));
}
