#include "nvlab/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace nvlab {

namespace {

double log_ratio(const CostParams& cost) {
    // -ln(h / (p + h)), the quantile exponent at the service level.
    return -std::log(cost.h / (cost.p + cost.h));
}

double censor_gap(double theta_star, double L, double k) {
    // 1 - e^{-theta L^k}: per-period probability of an uncensored observation
    // when ordering at the uniform lower bound.
    return -std::expm1(-theta_star * std::pow(L, k));
}

}  // namespace

double lower_bound_L(const CostParams& cost, double k, const GammaParams& prior,
                     double d_low) {
    if (!(d_low > 0.0)) {
        throw std::domain_error("lower_bound_L: d_low must be positive");
    }
    const double head = std::pow(0.5 * log_ratio(cost), 1.0 / k);
    return head * std::min(std::pow(prior.beta / prior.alpha, 1.0 / k), d_low);
}

double truncation_T0(double theta_star, double L, double k, int horizon,
                     double delta) {
    const double gap = censor_gap(theta_star, L, k);
    return 64.0 / (gap * gap) * std::log(static_cast<double>(horizon) / delta);
}

double posterior_confidence_width(int t, double alpha_t, double theta_star,
                                  double d_high, double k, double delta) {
    if (!(alpha_t > 1.0)) {
        throw std::domain_error("posterior_confidence_width: alpha_t must exceed 1");
    }
    const double td = static_cast<double>(t);
    return std::sqrt(std::log(2.0 * td * td / delta)) *
           (std::pow(d_high, k) + 2.0 / theta_star) *
           std::sqrt(td / ((alpha_t - 1.0) * (alpha_t - 1.0)));
}

double martingale_bound(int t, double delta) {
    const double td = static_cast<double>(t);
    return std::sqrt(8.0 * td) * std::log(2.0 * td * td / delta);
}

double inverse_gamma_tail(double alpha) {
    if (!(alpha > 0.0)) {
        throw std::domain_error("inverse_gamma_tail: alpha must be positive");
    }
    return std::pow(2.0 / M_E, alpha);
}

double theorem1_C0(const CostParams& cost, double k, double theta_star, double L,
                   double d_high, int horizon, double delta) {
    return std::max(cost.h, cost.p) * std::pow(log_ratio(cost), 1.0 / k) *
           (std::pow(d_high, k) + 2.0 / theta_star) * (1.0 / k) *
           std::pow(std::min(L, 1.0 / theta_star), 1.0 / k - 1.0) *
           std::sqrt(2.0 * std::log(static_cast<double>(horizon) / delta));
}

double theorem1_bound(const CostParams& cost, double k, double theta_star, double L,
                      double d_high, int horizon, double delta,
                      const GammaParams& prior) {
    (void)prior;  // carried for interface symmetry; the display has no alpha0 term
    const double gap = censor_gap(theta_star, L, k);
    const double log_term = std::log(static_cast<double>(horizon) / delta);
    const double c0 = theorem1_C0(cost, k, theta_star, L, d_high, horizon, delta);
    return c0 * (512.0 / (gap * gap * gap) * std::pow(log_term, 1.5) +
                 4.0 / gap * std::sqrt(static_cast<double>(horizon)));
}

double theorem2_bound(double lipschitz_L, const CostParams& cost, double g_max,
                      int horizon, double delta) {
    if (!(g_max >= 0.0) || !(g_max < 1.0)) {
        throw std::domain_error("theorem2_bound: g_max must lie in [0, 1)");
    }
    return 16.0 * lipschitz_L * (cost.h + cost.p) / (1.0 - g_max) *
           std::sqrt(static_cast<double>(horizon) * std::log(1.0 / delta));
}

double alpha_t_floor(int t, double T0, const GammaParams& prior, double theta_star,
                     double L, double k) {
    if (static_cast<double>(t) <= T0) {
        return prior.alpha - 1.0;
    }
    return 0.5 * static_cast<double>(t) * censor_gap(theta_star, L, k);
}

double sequence_min_ratio(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("sequence_min_ratio: length mismatch");
    }
    double best = std::numeric_limits<double>::infinity();
    bool any = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] > 0.0) {
            any = true;
            best = std::min(best, a[i] / b[i]);
        }
    }
    if (!any) {
        throw std::invalid_argument("sequence_min_ratio: need at least one b_i > 0");
    }
    return best;
}

BoundReport make_bound_report(const CostParams& cost, const GammaParams& prior,
                              double k, double theta_star, int horizon,
                              double delta) {
    if (!(prior.alpha > 1.0)) {
        throw std::domain_error("make_bound_report: prior alpha must exceed 1");
    }
    const DemandRange range = demand_range(theta_star, k, horizon, delta);
    BoundReport report;
    report.L = lower_bound_L(cost, k, prior, range.d_low);
    report.T0 = truncation_T0(theta_star, report.L, k, horizon, delta);
    report.C0 = theorem1_C0(cost, k, theta_star, report.L, range.d_high, horizon, delta);
    report.theorem1_bound = theorem1_bound(cost, k, theta_star, report.L,
                                           range.d_high, horizon, delta, prior);
    report.epsilon.reserve(static_cast<std::size_t>(horizon));
    for (int t = 1; t <= horizon; ++t) {
        const double floor = alpha_t_floor(t, report.T0, prior, theta_star, report.L, k);
        report.epsilon.push_back(posterior_confidence_width(
            t, floor + 1.0, theta_star, range.d_high, k, delta));
    }
    return report;
}

}  // namespace nvlab
