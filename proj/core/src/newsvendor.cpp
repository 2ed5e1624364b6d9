#include "nvlab/newsvendor.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace nvlab {

namespace {

void check_cost(const CostParams& cost) {
    if (!(cost.h > 0.0) || !(cost.p > 0.0)) {
        throw std::domain_error("cost params require h > 0 and p > 0");
    }
}

}  // namespace

double service_level(const CostParams& cost) {
    check_cost(cost);
    return cost.p / (cost.p + cost.h);
}

double realized_cost(const CostParams& cost, double order, double demand) {
    check_cost(cost);
    if (order < 0.0 || demand < 0.0) {
        throw std::domain_error("realized_cost: order and demand must be nonnegative");
    }
    return cost.h * std::max(order - demand, 0.0) +
           cost.p * std::max(demand - order, 0.0);
}

double expected_min_demand(const Demand& demand, double order) {
    if (order < 0.0) {
        throw std::domain_error("expected_min_demand: order must be nonnegative");
    }
    if (order == 0.0) {
        return 0.0;
    }
    // Clip the integral to the effective support: beyond the 1 - 1e-16
    // quantile the survival integrand carries less mass than the 1e-9
    // tolerance, and leaving it in starves the quadrature nodes of the
    // region where the mass lives.
    const double x_hi = demand_quantile(demand, 1.0 - 1e-16);
    const double upper = std::min(order, x_hi);
    auto survival = [&demand](double x) { return demand_survival(demand, x); };
    return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        survival, 0.0, upper, 20, 1e-9);
}

double expected_cost(const CostParams& cost, const Demand& demand, double order) {
    check_cost(cost);
    if (order < 0.0) {
        throw std::domain_error("expected_cost: order must be nonnegative");
    }
    const double m = expected_min_demand(demand, order);
    return cost.h * (order - m) + cost.p * (demand_mean(demand) - m);
}

double expected_cost(const CostParams& cost, const WeibullParams& demand, double order) {
    return expected_cost(cost, Demand(demand), order);
}

double optimal_order(const CostParams& cost, const Demand& demand) {
    return demand_quantile(demand, service_level(cost));
}

double optimal_order(const CostParams& cost, const WeibullParams& demand) {
    return weibull_inverse_cdf(demand, service_level(cost));
}

}  // namespace nvlab
