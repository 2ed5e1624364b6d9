#pragma once

#include <random>
#include <variant>

#include "nvlab/random.hpp"

namespace nvlab {

// Weibull demand with rate-like scale theta and known shape k:
//   F(x) = 1 - exp(-theta * x^k)
struct WeibullParams {
    double theta = 1.0;
    double k = 1.0;
};

// Shape/rate parameterization; mean alpha/beta.
struct GammaParams {
    double alpha = 1.0;
    double beta = 1.0;
};

struct NormalParams {
    double mu = 0.0;
    double sigma = 1.0;
};

// High-probability envelope [d_low, d_high] for Weibull demand draws.
struct DemandRange {
    double d_low = 0.0;
    double d_high = 0.0;
};

double weibull_cdf(const WeibullParams& params, double x);
double weibull_survival(const WeibullParams& params, double x);
double weibull_inverse_cdf(const WeibullParams& params, double q);
double weibull_mean(const WeibullParams& params);
double weibull_sample(const WeibullParams& params, std::mt19937_64& rng);

double gamma_sample(const GammaParams& params, std::mt19937_64& rng);

// Normal(mu, sigma^2) conditioned on being nonnegative.
double truncated_normal_cdf(const NormalParams& params, double x);
double truncated_normal_survival(const NormalParams& params, double x);
double truncated_normal_quantile(const NormalParams& params, double q);
double truncated_normal_mean(const NormalParams& params);
double normal_sample_truncated(const NormalParams& params, std::mt19937_64& rng);

// Endpoints such that P(D < d_low) <= delta/(2T) and P(D > d_high) <= delta/(2T),
// with equality by construction.
DemandRange demand_range(double theta_star, double k, int horizon, double delta);

// A demand environment is either Weibull (the parametric family the policies
// model) or a truncated Normal used for misspecification experiments.
using Demand = std::variant<WeibullParams, NormalParams>;

double demand_cdf(const Demand& demand, double x);
double demand_survival(const Demand& demand, double x);
double demand_quantile(const Demand& demand, double q);
double demand_mean(const Demand& demand);
double demand_sample(const Demand& demand, std::mt19937_64& rng);

}  // namespace nvlab
