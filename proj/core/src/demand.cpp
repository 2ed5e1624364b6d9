#include "nvlab/demand.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace nvlab {

namespace {

void check_weibull(const WeibullParams& params) {
    if (!(params.theta > 0.0) || !(params.k > 0.0)) {
        throw std::domain_error("weibull params require theta > 0 and k > 0");
    }
}

void check_normal(const NormalParams& params) {
    if (!(params.sigma > 0.0)) {
        throw std::domain_error("normal params require sigma > 0");
    }
}

double std_normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

}  // namespace

double weibull_cdf(const WeibullParams& params, double x) {
    check_weibull(params);
    if (x < 0.0) {
        throw std::domain_error("weibull_cdf: x must be nonnegative");
    }
    return -std::expm1(-params.theta * std::pow(x, params.k));
}

double weibull_survival(const WeibullParams& params, double x) {
    check_weibull(params);
    if (x <= 0.0) {
        return 1.0;
    }
    return std::exp(-params.theta * std::pow(x, params.k));
}

double weibull_inverse_cdf(const WeibullParams& params, double q) {
    check_weibull(params);
    if (!(q >= 0.0) || !(q < 1.0)) {
        throw std::domain_error("weibull_inverse_cdf: q must lie in [0, 1)");
    }
    return std::pow(-std::log1p(-q) / params.theta, 1.0 / params.k);
}

double weibull_mean(const WeibullParams& params) {
    check_weibull(params);
    return std::pow(params.theta, -1.0 / params.k) *
           std::exp(std::lgamma(1.0 + 1.0 / params.k));
}

double weibull_sample(const WeibullParams& params, std::mt19937_64& rng) {
    return weibull_inverse_cdf(params, uniform01(rng));
}

double gamma_sample(const GammaParams& params, std::mt19937_64& rng) {
    if (!(params.alpha > 0.0) || !(params.beta > 0.0)) {
        throw std::domain_error("gamma params require alpha > 0 and beta > 0");
    }
    std::gamma_distribution<double> dist(params.alpha, 1.0);
    double x = dist(rng) / params.beta;
    return std::max(x, std::numeric_limits<double>::min());
}

double truncated_normal_cdf(const NormalParams& params, double x) {
    check_normal(params);
    if (x <= 0.0) {
        return 0.0;
    }
    const double mass = std_normal_cdf(params.mu / params.sigma);
    const double below = std_normal_cdf(-params.mu / params.sigma);
    return (std_normal_cdf((x - params.mu) / params.sigma) - below) / mass;
}

double truncated_normal_survival(const NormalParams& params, double x) {
    return 1.0 - truncated_normal_cdf(params, x);
}

double truncated_normal_quantile(const NormalParams& params, double q) {
    check_normal(params);
    if (!(q >= 0.0) || !(q < 1.0)) {
        throw std::domain_error("truncated_normal_quantile: q must lie in [0, 1)");
    }
    if (q == 0.0) {
        return 0.0;
    }
    double lo = 0.0;
    double hi = params.mu + 10.0 * params.sigma;
    while (truncated_normal_cdf(params, hi) < q) {
        hi *= 2.0;
    }
    // bisection to 1e-9
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        if (truncated_normal_cdf(params, mid) < q) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double truncated_normal_mean(const NormalParams& params) {
    check_normal(params);
    const double r = params.mu / params.sigma;
    const double phi = std::exp(-0.5 * r * r) / std::sqrt(2.0 * M_PI);
    return params.mu + params.sigma * phi / std_normal_cdf(r);
}

double normal_sample_truncated(const NormalParams& params, std::mt19937_64& rng) {
    check_normal(params);
    // Demand is nonnegative; negative draws are rejected and redrawn.
    for (;;) {
        std::normal_distribution<double> dist(params.mu, params.sigma);
        const double x = dist(rng);
        if (x >= 0.0) {
            return x;
        }
    }
}

DemandRange demand_range(double theta_star, double k, int horizon, double delta) {
    if (!(theta_star > 0.0) || !(k > 0.0)) {
        throw std::domain_error("demand_range: theta_star and k must be positive");
    }
    if (horizon < 1) {
        throw std::domain_error("demand_range: horizon must be >= 1");
    }
    if (!(delta > 0.0) || !(delta < 1.0)) {
        throw std::domain_error("demand_range: delta must lie in (0, 1)");
    }
    const double two_t = 2.0 * static_cast<double>(horizon);
    DemandRange range;
    range.d_low = std::pow(std::log(two_t / (two_t - delta)) / theta_star, 1.0 / k);
    range.d_high = std::pow(std::log(two_t / delta) / theta_star, 1.0 / k);
    return range;
}

double demand_cdf(const Demand& demand, double x) {
    return std::visit(
        [x](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, WeibullParams>) {
                return weibull_cdf(d, x);
            } else {
                return truncated_normal_cdf(d, x);
            }
        },
        demand);
}

double demand_survival(const Demand& demand, double x) {
    return std::visit(
        [x](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, WeibullParams>) {
                return weibull_survival(d, x);
            } else {
                return truncated_normal_survival(d, x);
            }
        },
        demand);
}

double demand_quantile(const Demand& demand, double q) {
    return std::visit(
        [q](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, WeibullParams>) {
                return weibull_inverse_cdf(d, q);
            } else {
                return truncated_normal_quantile(d, q);
            }
        },
        demand);
}

double demand_mean(const Demand& demand) {
    return std::visit(
        [](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, WeibullParams>) {
                return weibull_mean(d);
            } else {
                return truncated_normal_mean(d);
            }
        },
        demand);
}

double demand_sample(const Demand& demand, std::mt19937_64& rng) {
    return std::visit(
        [&rng](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, WeibullParams>) {
                return weibull_sample(d, rng);
            } else {
                return normal_sample_truncated(d, rng);
            }
        },
        demand);
}

}  // namespace nvlab
