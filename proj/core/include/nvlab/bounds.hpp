#pragma once

#include <span>
#include <vector>

#include "nvlab/demand.hpp"
#include "nvlab/newsvendor.hpp"

namespace nvlab {

// Closed-form evaluators for every constant in the regret analysis. All of
// them take the true rate explicitly; they are diagnostics, never inputs to
// the policies.
struct BoundReport {
    double L = 0.0;
    double T0 = 0.0;
    double C0 = 0.0;
    double theorem1_bound = 0.0;
    std::vector<double> epsilon;  // epsilon[t-1] is the width at period t
};

// L = (-(1/2) ln(h/(p+h)))^{1/k} * min{(beta0/alpha0)^{1/k}, d_low}.
double lower_bound_L(const CostParams& cost, double k, const GammaParams& prior,
                     double d_low);

// T0 = 64 (1 - e^{-theta L^k})^{-2} ln(T/delta).
double truncation_T0(double theta_star, double L, double k, int horizon, double delta);

// sqrt(ln(2t^2/delta)) (d_high^k + 2/theta) sqrt(t / (alpha_t - 1)^2).
double posterior_confidence_width(int t, double alpha_t, double theta_star,
                                  double d_high, double k, double delta);

// sqrt(8t) ln(2t^2/delta).
double martingale_bound(int t, double delta);

// (2/e)^alpha, the tail P(1/theta <= beta/(2 alpha)) under Gamma(alpha, beta).
double inverse_gamma_tail(double alpha);

double theorem1_C0(const CostParams& cost, double k, double theta_star, double L,
                   double d_high, int horizon, double delta);

// C0 * (512 (1 - e^{-theta L^k})^{-3} ln(T/delta)^{3/2}
//       + 4 (1 - e^{-theta L^k})^{-1} sqrt(T)).
double theorem1_bound(const CostParams& cost, double k, double theta_star, double L,
                      double d_high, int horizon, double delta,
                      const GammaParams& prior);

// 16 L (h + p) / (1 - g_max) * sqrt(T ln(1/delta)).
double theorem2_bound(double lipschitz_L, const CostParams& cost, double g_max,
                      int horizon, double delta);

// Lower bound on alpha_t - 1: alpha0 - 1 before the truncation point, then
// (t/2)(1 - e^{-theta L^k}).
double alpha_t_floor(int t, double T0, const GammaParams& prior, double theta_star,
                     double L, double k);

// min over {i : b_i > 0} of a_i / b_i; sum(a)/sum(b) can never fall below it.
double sequence_min_ratio(std::span<const double> a, std::span<const double> b);

// Full report for a Weibull instance: demand range at level delta, then L,
// T0, C0, the Theorem-1 value, and the a-priori width schedule evaluated at
// the alpha_t floor.
BoundReport make_bound_report(const CostParams& cost, const GammaParams& prior,
                              double k, double theta_star, int horizon, double delta);

}  // namespace nvlab
