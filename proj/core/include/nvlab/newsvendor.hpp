#pragma once

#include "nvlab/demand.hpp"

namespace nvlab {

// Unit overage cost h and unit stock-out penalty p; the implied service
// level is gamma = p / (p + h).
struct CostParams {
    double h = 1.0;
    double p = 1.0;
};

double service_level(const CostParams& cost);

// h*(y - d)^+ + p*(d - y)^+ for one realized demand.
double realized_cost(const CostParams& cost, double order, double demand);

// E[min(y, D)] = integral of the survival function over [0, y].
double expected_min_demand(const Demand& demand, double order);

// E[h (y - D)^+ + p (D - y)^+], evaluated through the survival integral so the
// same route works for every demand family.
double expected_cost(const CostParams& cost, const Demand& demand, double order);
double expected_cost(const CostParams& cost, const WeibullParams& demand, double order);

// Critical-quantile order F^{-1}(p / (p + h)); closed form for Weibull,
// numeric quantile otherwise.
double optimal_order(const CostParams& cost, const Demand& demand);
double optimal_order(const CostParams& cost, const WeibullParams& demand);

}  // namespace nvlab
