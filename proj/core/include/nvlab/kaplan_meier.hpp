#pragma once

#include <functional>
#include <span>
#include <vector>

#include "nvlab/demand.hpp"

namespace nvlab {

struct CensoredObservation;

// Right-continuous product-limit survival estimate. survival[i] is the value
// on [breakpoints[i], breakpoints[i+1]); the curve is 1 left of the first
// breakpoint. Only uncensored sales create breakpoints.
struct KMEstimate {
    std::vector<double> breakpoints;
    std::vector<double> survival;
    int sample_count = 0;
};

struct PluginFit {
    double theta_hat = 0.0;
    double sup_distance = 0.0;
    double k = 1.0;
};

// Product-limit fit over sales sorted ascending, uncensored before censored
// on ties. Factor ((t - s) / (t - s + 1)) enters once per uncensored rank s.
KMEstimate km_fit(std::span<const CensoredObservation> observations);

// Survival value at x (right-continuous step lookup).
double km_eval(const KMEstimate& estimate, double x);

// CDF view of the estimate, 1 - survival.
double km_cdf(const KMEstimate& estimate, double x);

// Max of |f - g| over the grid points and just left of each grid point, so
// step discontinuities are seen from both sides.
double sup_distance(const std::function<double(double)>& f,
                    const std::function<double(double)>& g,
                    std::span<const double> grid);

// Greedy parametric fit: theta minimizing the sup distance between the
// Weibull CDF (shape k) and the KM curve, over a log-spaced scan of the
// search interval refined by golden section.
PluginFit plugin_fit(const KMEstimate& estimate, double k, double theta_lo = 1e-4,
                     double theta_hi = 1e4);

// Half-width sqrt(ln(1/delta) / (2t)) / (1 - G(x)) of the weighted
// Kaplan-Meier confidence band at a point with censoring CDF value G(x).
double km_confidence_width(int t, double delta, double g_at_x);

}  // namespace nvlab
