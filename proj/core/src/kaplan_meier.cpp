#include "nvlab/kaplan_meier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "nvlab/policies.hpp"

namespace nvlab {

KMEstimate km_fit(std::span<const CensoredObservation> observations) {
    if (observations.empty()) {
        throw std::invalid_argument("km_fit: need at least one observation");
    }
    std::vector<std::pair<double, bool>> data;
    data.reserve(observations.size());
    for (const auto& obs : observations) {
        data.emplace_back(obs.sale, obs.uncensored);
    }
    // Ties: uncensored observations come first.
    std::sort(data.begin(), data.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) {
            return a.first < b.first;
        }
        return a.second && !b.second;
    });

    const int t = static_cast<int>(data.size());
    KMEstimate estimate;
    estimate.sample_count = t;
    // Consecutive uncensored ranks a..s telescope to a single ratio
    // (t-s)/(t-a+1), so runs are accumulated with one division each. This is
    // the same product; grouping keeps the uncensored special case exact.
    double closed_runs = 1.0;  // product over completed runs
    int run_start = 0;         // first rank of the open run, 0 = none
    for (int s = 1; s <= t; ++s) {
        const auto& [sale, uncensored] = data[s - 1];
        if (!uncensored) {
            if (run_start != 0) {
                closed_runs *= static_cast<double>(t - s + 1) /
                               static_cast<double>(t - run_start + 1);
                run_start = 0;
            }
            continue;
        }
        if (run_start == 0) {
            run_start = s;
        }
        const double product = closed_runs * static_cast<double>(t - s) /
                               static_cast<double>(t - run_start + 1);
        if (!estimate.breakpoints.empty() && estimate.breakpoints.back() == sale) {
            estimate.survival.back() = product;
        } else {
            estimate.breakpoints.push_back(sale);
            estimate.survival.push_back(product);
        }
    }
    return estimate;
}

double km_eval(const KMEstimate& estimate, double x) {
    const auto it = std::upper_bound(estimate.breakpoints.begin(),
                                     estimate.breakpoints.end(), x);
    if (it == estimate.breakpoints.begin()) {
        return 1.0;
    }
    return estimate.survival[static_cast<std::size_t>(
        std::distance(estimate.breakpoints.begin(), it) - 1)];
}

double km_cdf(const KMEstimate& estimate, double x) {
    return 1.0 - km_eval(estimate, x);
}

double sup_distance(const std::function<double(double)>& f,
                    const std::function<double(double)>& g,
                    std::span<const double> grid) {
    if (grid.empty()) {
        throw std::invalid_argument("sup_distance: grid must not be empty");
    }
    double best = 0.0;
    for (double x : grid) {
        best = std::max(best, std::abs(f(x) - g(x)));
        const double left = std::nextafter(x, -std::numeric_limits<double>::infinity());
        if (left >= 0.0) {
            best = std::max(best, std::abs(f(left) - g(left)));
        }
    }
    return best;
}

namespace {

double km_objective(const KMEstimate& estimate, double k, double theta,
                    std::span<const double> grid) {
    const WeibullParams params{theta, k};
    return sup_distance([&](double x) { return weibull_cdf(params, x); },
                        [&](double x) { return km_cdf(estimate, x); }, grid);
}

}  // namespace

PluginFit plugin_fit(const KMEstimate& estimate, double k, double theta_lo,
                     double theta_hi) {
    if (estimate.breakpoints.empty()) {
        throw std::runtime_error("plugin_fit: insufficient uncensored data");
    }
    if (!(theta_lo > 0.0) || !(theta_hi > theta_lo)) {
        throw std::domain_error("plugin_fit: search interval must be positive");
    }

    std::vector<double> grid;
    grid.reserve(estimate.breakpoints.size() + 1);
    grid.push_back(0.0);
    grid.insert(grid.end(), estimate.breakpoints.begin(), estimate.breakpoints.end());

    constexpr int kScanPoints = 1024;
    const double log_lo = std::log(theta_lo);
    const double log_step = (std::log(theta_hi) - log_lo) / (kScanPoints - 1);

    double best_theta = theta_lo;
    double best_value = std::numeric_limits<double>::infinity();
    int best_index = 0;
    for (int i = 0; i < kScanPoints; ++i) {
        const double theta = std::exp(log_lo + i * log_step);
        const double value = km_objective(estimate, k, theta, grid);
        if (value < best_value) {
            best_value = value;
            best_theta = theta;
            best_index = i;
        }
    }

    // Golden-section refinement on the bracket around the best scan point.
    double a = std::exp(log_lo + std::max(best_index - 1, 0) * log_step);
    double b = std::exp(log_lo + std::min(best_index + 1, kScanPoints - 1) * log_step);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = km_objective(estimate, k, x1, grid);
    double f2 = km_objective(estimate, k, x2, grid);
    for (int iter = 0; iter < 80 && (b - a) > 1e-12 * b; ++iter) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = km_objective(estimate, k, x1, grid);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = km_objective(estimate, k, x2, grid);
        }
    }
    const double refined = 0.5 * (a + b);
    const double refined_value = km_objective(estimate, k, refined, grid);

    PluginFit fit;
    fit.k = k;
    if (refined_value <= best_value) {
        fit.theta_hat = refined;
        fit.sup_distance = refined_value;
    } else {
        fit.theta_hat = best_theta;
        fit.sup_distance = best_value;
    }
    return fit;
}

double km_confidence_width(int t, double delta, double g_at_x) {
    if (t < 1) {
        throw std::domain_error("km_confidence_width: t must be >= 1");
    }
    if (!(delta > 0.0) || !(delta < 1.0)) {
        throw std::domain_error("km_confidence_width: delta must lie in (0, 1)");
    }
    if (!(g_at_x >= 0.0) || !(g_at_x < 1.0)) {
        throw std::domain_error("km_confidence_width: band undefined for G(x) >= 1");
    }
    return std::sqrt(std::log(1.0 / delta) / (2.0 * static_cast<double>(t))) /
           (1.0 - g_at_x);
}

}  // namespace nvlab
