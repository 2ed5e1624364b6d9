#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "nvlab/demand.hpp"
#include "nvlab/newsvendor.hpp"

namespace nvlab {

// What the environment reveals after a period: the sale Y = min(D, y) and
// whether demand was observed exactly (D < y). The raw demand is never stored
// when the observation is censored, so no policy can peek at it.
struct CensoredObservation {
    double order = 0.0;
    double sale = 0.0;
    bool uncensored = false;

    static CensoredObservation from_demand(double order, double demand);
};

// Gamma(alpha, beta) -> Gamma(alpha + delta, beta + Y^k). Exact for the
// Weibull likelihood with censored observations.
GammaParams conjugate_update(const GammaParams& posterior, double k,
                             const CensoredObservation& obs);

// Predictive-quantile order: solves (beta / (beta + y^k))^alpha = h / (p + h).
double myopic_order(const GammaParams& posterior, double k, const CostParams& cost);

// Sequential decision interface. choose() is called once per period before
// the demand realizes; observe() consumes exactly the censored feedback.
class Policy {
  public:
    virtual ~Policy() = default;
    virtual double choose(int period, std::mt19937_64& rng) = 0;
    virtual void observe(const CensoredObservation& obs) = 0;
};

class ThompsonPolicy final : public Policy {
  public:
    ThompsonPolicy(CostParams cost, GammaParams prior, double shape_k);

    double choose(int period, std::mt19937_64& rng) override;
    void observe(const CensoredObservation& obs) override;

    // Quantile map applied to a sampled rate; exposed so the deterministic
    // branch can be pinned in tests.
    double order_for(double theta) const;
    const GammaParams& posterior() const { return posterior_; }

  private:
    CostParams cost_;
    GammaParams posterior_;
    double shape_k_;
    double quantile_;
};

class MyopicPolicy final : public Policy {
  public:
    MyopicPolicy(CostParams cost, GammaParams prior, double shape_k);

    double choose(int period, std::mt19937_64& rng) override;
    void observe(const CensoredObservation& obs) override;
    const GammaParams& posterior() const { return posterior_; }

  private:
    CostParams cost_;
    GammaParams posterior_;
    double shape_k_;
};

// Optimistic plug-in policy: at epoch starts 1, 2, 4, 8, ... it recomputes a
// lower confidence bound on theta and keeps the implied order cached until
// the next boundary. Lower theta means a larger order, so optimism explores
// upward.
class PhasedUcbPolicy final : public Policy {
  public:
    PhasedUcbPolicy(CostParams cost, GammaParams prior, double shape_k, int horizon,
                    double width_scale = 1.0, double theta_min = 1e-6);

    double choose(int period, std::mt19937_64& rng) override;
    void observe(const CensoredObservation& obs) override;

    double lcb_theta(int period) const;
    const GammaParams& posterior() const { return posterior_; }

  private:
    CostParams cost_;
    GammaParams posterior_;
    double shape_k_;
    int horizon_;
    double width_scale_;
    double theta_min_;
    double quantile_;
    int next_boundary_ = 1;
    double cached_order_ = 0.0;
};

// Projected subgradient on the newsvendor loss. Only the censoring indicator
// is needed to evaluate the subgradient h*delta - p*(1 - delta).
class SubgradientPolicy final : public Policy {
  public:
    SubgradientPolicy(CostParams cost, double y0, double eta0, double y_max);

    static SubgradientPolicy from_prior(CostParams cost, const GammaParams& prior,
                                        double shape_k);

    double choose(int period, std::mt19937_64& rng) override;
    void observe(const CensoredObservation& obs) override;

    double current_order() const { return order_; }
    double max_order() const { return y_max_; }

  private:
    CostParams cost_;
    double order_;
    double eta0_;
    double y_max_;
    int steps_ = 0;
};

// Nonparametric baseline: fits the Weibull family against the Kaplan-Meier
// survival curve of the sales history and orders at the fitted quantile.
// While the history carries no uncensored point the order doubles each period
// to escape the all-censored regime.
class KmPluginPolicy final : public Policy {
  public:
    KmPluginPolicy(CostParams cost, GammaParams prior, double shape_k);

    double choose(int period, std::mt19937_64& rng) override;
    void observe(const CensoredObservation& obs) override;

  private:
    CostParams cost_;
    double shape_k_;
    double quantile_;
    double last_order_;
    int uncensored_count_ = 0;
    std::vector<CensoredObservation> history_;
};

// Diagnostics: clairvoyant and constant-order controls.
class OraclePolicy final : public Policy {
  public:
    explicit OraclePolicy(double optimal) : order_(optimal) {}
    double choose(int, std::mt19937_64&) override { return order_; }
    void observe(const CensoredObservation&) override {}

  private:
    double order_;
};

class FixedOrderPolicy final : public Policy {
  public:
    explicit FixedOrderPolicy(double order) : order_(order) {}
    double choose(int, std::mt19937_64&) override { return order_; }
    void observe(const CensoredObservation&) override {}

  private:
    double order_;
};

struct PolicyContext {
    CostParams cost;
    GammaParams prior;
    double shape_k = 1.0;
    int horizon = 1;
    double optimal = 0.0;      // consumed by "oracle" and the "fixed" default
    double fixed_order = -1.0; // negative means "optimal + 1"
};

bool is_known_policy(std::string_view name);

// Names: ts | ucb | oco | myopic | km-plugin | oracle | fixed.
std::unique_ptr<Policy> make_policy(std::string_view name, const PolicyContext& ctx);

}  // namespace nvlab
