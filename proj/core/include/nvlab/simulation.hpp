#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nvlab/demand.hpp"
#include "nvlab/newsvendor.hpp"
#include "nvlab/policies.hpp"

namespace nvlab {

enum class RegretMode { kFrequentist, kBayesian };

struct ExperimentConfig {
    int horizon = 600;
    int trials = 100;
    std::uint64_t seed = 1;
    CostParams cost;
    Demand demand = WeibullParams{1.0, 1.0};
    GammaParams prior{4.0, 4.0};
    std::vector<std::string> policies;
    RegretMode mode = RegretMode::kFrequentist;
    int checkpoint_every = 10;
    std::vector<int> checkpoints;  // explicit list wins over checkpoint_every
    double delta = 0.1;            // tail level for bound reports
    double fixed_order = -1.0;     // "fixed" policy order; negative = optimal + 1
    bool emit_realized = false;

    std::vector<int> checkpoint_periods() const;
};

void validate(const ExperimentConfig& config);

struct PeriodRecord {
    double order = 0.0;
    double sale = 0.0;
    bool uncensored = false;
    double realized_cost = 0.0;
    double pseudo_regret = 0.0;
    double realized_regret = 0.0;
};

struct Trajectory {
    double optimal = 0.0;                  // clairvoyant order for the trial
    Demand truth = WeibullParams{1.0, 1.0};  // environment used (Bayesian draws vary)
    std::vector<PeriodRecord> periods;
};

// Expected-cost gap of ordering y instead of the critical quantile.
double pseudo_regret_increment(const CostParams& cost, const Demand& demand, double y);
double pseudo_regret_increment(const CostParams& cost, const WeibullParams& demand,
                               double y);

// Environment of a trial. In Bayesian mode the Weibull rate is redrawn from
// the prior per trial; frequentist mode uses the configured one.
Demand resolve_demand(const ExperimentConfig& config, int trial);

// The i.i.d. demand stream of a trial; shared by every policy so comparisons
// are paired (common random numbers).
std::vector<double> draw_demands(const ExperimentConfig& config, int trial);

Trajectory run_trial(const ExperimentConfig& config, const std::string& policy_name,
                     int trial);

struct RegretCurve {
    std::vector<int> checkpoints;
    std::vector<double> mean;           // cumulative pseudo-regret
    std::vector<double> stderr_mean;
    std::vector<double> realized_mean;  // cumulative realized-cost gap
    std::vector<double> realized_stderr;
    int trials = 0;
};

std::map<std::string, RegretCurve> run_experiment(const ExperimentConfig& config);

// mean(t2) / mean(t1) with t2 = 2 t1; sqrt(T) growth gives sqrt(2).
double sublinearity_ratio(const RegretCurve& curve, int t1, int t2);

}  // namespace nvlab
