#include "nvlab/policies.hpp"

#include <cmath>
#include <stdexcept>

#include "nvlab/kaplan_meier.hpp"

namespace nvlab {

CensoredObservation CensoredObservation::from_demand(double order, double demand) {
    if (order < 0.0 || demand < 0.0) {
        throw std::domain_error("observation requires nonnegative order and demand");
    }
    CensoredObservation obs;
    obs.order = order;
    obs.uncensored = demand < order;
    obs.sale = obs.uncensored ? demand : order;
    return obs;
}

GammaParams conjugate_update(const GammaParams& posterior, double k,
                             const CensoredObservation& obs) {
    return GammaParams{posterior.alpha + (obs.uncensored ? 1.0 : 0.0),
                       posterior.beta + std::pow(obs.sale, k)};
}

double myopic_order(const GammaParams& posterior, double k, const CostParams& cost) {
    const double ratio = (cost.p + cost.h) / cost.h;
    return std::pow(posterior.beta * (std::pow(ratio, 1.0 / posterior.alpha) - 1.0),
                    1.0 / k);
}

// ---------------------------------------------------------------------------
// Thompson sampling

ThompsonPolicy::ThompsonPolicy(CostParams cost, GammaParams prior, double shape_k)
    : cost_(cost),
      posterior_(prior),
      shape_k_(shape_k),
      quantile_(service_level(cost)) {}

double ThompsonPolicy::order_for(double theta) const {
    return weibull_inverse_cdf(WeibullParams{theta, shape_k_}, quantile_);
}

double ThompsonPolicy::choose(int, std::mt19937_64& rng) {
    return order_for(gamma_sample(posterior_, rng));
}

void ThompsonPolicy::observe(const CensoredObservation& obs) {
    posterior_ = conjugate_update(posterior_, shape_k_, obs);
}

// ---------------------------------------------------------------------------
// Myopic predictive quantile

MyopicPolicy::MyopicPolicy(CostParams cost, GammaParams prior, double shape_k)
    : cost_(cost), posterior_(prior), shape_k_(shape_k) {}

double MyopicPolicy::choose(int, std::mt19937_64&) {
    return myopic_order(posterior_, shape_k_, cost_);
}

void MyopicPolicy::observe(const CensoredObservation& obs) {
    posterior_ = conjugate_update(posterior_, shape_k_, obs);
}

// ---------------------------------------------------------------------------
// Phased UCB

PhasedUcbPolicy::PhasedUcbPolicy(CostParams cost, GammaParams prior, double shape_k,
                                 int horizon, double width_scale, double theta_min)
    : cost_(cost),
      posterior_(prior),
      shape_k_(shape_k),
      horizon_(horizon),
      width_scale_(width_scale),
      theta_min_(theta_min),
      quantile_(service_level(cost)) {
    if (horizon_ < 1) {
        throw std::domain_error("phased ucb requires horizon >= 1");
    }
}

double PhasedUcbPolicy::lcb_theta(int period) const {
    const double center = posterior_.alpha / posterior_.beta;
    const double width = width_scale_ *
                         std::sqrt(std::log(static_cast<double>(horizon_)) *
                                   static_cast<double>(period)) *
                         (posterior_.alpha - 1.0) /
                         (posterior_.beta * posterior_.beta);
    return std::max(center - width, theta_min_);
}

double PhasedUcbPolicy::choose(int period, std::mt19937_64&) {
    if (period >= next_boundary_) {
        cached_order_ =
            weibull_inverse_cdf(WeibullParams{lcb_theta(period), shape_k_}, quantile_);
        next_boundary_ = 2 * std::max(period, 1);
    }
    return cached_order_;
}

void PhasedUcbPolicy::observe(const CensoredObservation& obs) {
    posterior_ = conjugate_update(posterior_, shape_k_, obs);
}

// ---------------------------------------------------------------------------
// Projected subgradient

SubgradientPolicy::SubgradientPolicy(CostParams cost, double y0, double eta0,
                                     double y_max)
    : cost_(cost), order_(y0), eta0_(eta0), y_max_(y_max) {
    if (!(y_max > 0.0) || !(eta0 > 0.0)) {
        throw std::domain_error("subgradient policy requires y_max > 0 and eta0 > 0");
    }
}

SubgradientPolicy SubgradientPolicy::from_prior(CostParams cost,
                                                const GammaParams& prior,
                                                double shape_k) {
    const double theta_guess = prior.alpha / prior.beta;
    const double y_max =
        weibull_inverse_cdf(WeibullParams{theta_guess, shape_k}, 0.999);
    return SubgradientPolicy(cost, y_max / 2.0, y_max, y_max);
}

double SubgradientPolicy::choose(int, std::mt19937_64&) {
    return order_;
}

void SubgradientPolicy::observe(const CensoredObservation& obs) {
    ++steps_;
    const double grad = obs.uncensored ? cost_.h : -cost_.p;
    const double eta = eta0_ / std::sqrt(static_cast<double>(steps_));
    order_ = std::clamp(order_ - eta * grad, 0.0, y_max_);
}

// ---------------------------------------------------------------------------
// Kaplan-Meier plug-in

KmPluginPolicy::KmPluginPolicy(CostParams cost, GammaParams prior, double shape_k)
    : cost_(cost),
      shape_k_(shape_k),
      quantile_(service_level(cost)),
      last_order_(weibull_inverse_cdf(WeibullParams{prior.alpha / prior.beta, shape_k},
                                      service_level(cost))) {}

double KmPluginPolicy::choose(int, std::mt19937_64&) {
    if (uncensored_count_ == 0) {
        if (!history_.empty()) {
            last_order_ *= 2.0;
        }
        return last_order_;
    }
    const KMEstimate km = km_fit(history_);
    const PluginFit fit = plugin_fit(km, shape_k_);
    last_order_ = weibull_inverse_cdf(WeibullParams{fit.theta_hat, shape_k_}, quantile_);
    return last_order_;
}

void KmPluginPolicy::observe(const CensoredObservation& obs) {
    history_.push_back(obs);
    if (obs.uncensored) {
        ++uncensored_count_;
    }
}

// ---------------------------------------------------------------------------
// Factory

bool is_known_policy(std::string_view name) {
    return name == "ts" || name == "ucb" || name == "oco" || name == "myopic" ||
           name == "km-plugin" || name == "oracle" || name == "fixed";
}

std::unique_ptr<Policy> make_policy(std::string_view name, const PolicyContext& ctx) {
    if (name == "ts") {
        return std::make_unique<ThompsonPolicy>(ctx.cost, ctx.prior, ctx.shape_k);
    }
    if (name == "ucb") {
        return std::make_unique<PhasedUcbPolicy>(ctx.cost, ctx.prior, ctx.shape_k,
                                                 ctx.horizon);
    }
    if (name == "oco") {
        return std::make_unique<SubgradientPolicy>(
            SubgradientPolicy::from_prior(ctx.cost, ctx.prior, ctx.shape_k));
    }
    if (name == "myopic") {
        return std::make_unique<MyopicPolicy>(ctx.cost, ctx.prior, ctx.shape_k);
    }
    if (name == "km-plugin") {
        return std::make_unique<KmPluginPolicy>(ctx.cost, ctx.prior, ctx.shape_k);
    }
    if (name == "oracle") {
        return std::make_unique<OraclePolicy>(ctx.optimal);
    }
    if (name == "fixed") {
        const double order = ctx.fixed_order >= 0.0 ? ctx.fixed_order : ctx.optimal + 1.0;
        return std::make_unique<FixedOrderPolicy>(order);
    }
    throw std::invalid_argument("unknown policy name: " + std::string(name));
}

}  // namespace nvlab
