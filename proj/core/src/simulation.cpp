#include "nvlab/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nvlab/random.hpp"

namespace nvlab {

std::vector<int> ExperimentConfig::checkpoint_periods() const {
    if (!checkpoints.empty()) {
        return checkpoints;
    }
    std::vector<int> out;
    for (int t = checkpoint_every; t <= horizon; t += checkpoint_every) {
        out.push_back(t);
    }
    if (out.empty() || out.back() != horizon) {
        out.push_back(horizon);
    }
    return out;
}

void validate(const ExperimentConfig& config) {
    if (config.horizon < 1) {
        throw std::invalid_argument("horizon must be >= 1");
    }
    if (config.trials < 1) {
        throw std::invalid_argument("trials must be >= 1");
    }
    if (!(config.cost.h > 0.0)) {
        throw std::invalid_argument("cost.h must be positive");
    }
    if (!(config.cost.p > 0.0)) {
        throw std::invalid_argument("cost.p must be positive");
    }
    if (!(config.prior.alpha > 0.0)) {
        throw std::invalid_argument("prior.alpha0 must be positive");
    }
    if (!(config.prior.beta > 0.0)) {
        throw std::invalid_argument("prior.beta0 must be positive");
    }
    if (!(config.delta > 0.0) || !(config.delta < 1.0)) {
        throw std::invalid_argument("delta must lie in (0, 1)");
    }
    if (config.checkpoint_every < 1) {
        throw std::invalid_argument("checkpoint_every must be >= 1");
    }
    int prev_checkpoint = 0;
    for (int t : config.checkpoints) {
        if (t < 1 || t > config.horizon) {
            throw std::invalid_argument("checkpoints must lie within [1, horizon]");
        }
        if (t <= prev_checkpoint) {
            throw std::invalid_argument("checkpoints must be strictly increasing");
        }
        prev_checkpoint = t;
    }
    if (const auto* weibull = std::get_if<WeibullParams>(&config.demand)) {
        if (!(weibull->theta > 0.0)) {
            throw std::invalid_argument("demand.theta must be positive");
        }
        if (!(weibull->k > 0.0)) {
            throw std::invalid_argument("demand.k must be positive");
        }
    } else {
        const auto& normal = std::get<NormalParams>(config.demand);
        if (!(normal.sigma > 0.0)) {
            throw std::invalid_argument("demand.sigma must be positive");
        }
        if (normal.mu < -3.0 * normal.sigma) {
            // below this the rejection sampler would discard >99.8% of draws
            throw std::invalid_argument(
                "demand.mu must be at least -3 standard deviations");
        }
        if (config.mode == RegretMode::kBayesian) {
            throw std::invalid_argument(
                "regret_mode=bayesian requires demand.family=weibull");
        }
    }
    if (config.policies.empty()) {
        throw std::invalid_argument("policies must name at least one policy");
    }
    for (const auto& name : config.policies) {
        if (!is_known_policy(name)) {
            throw std::invalid_argument("unknown policy name: " + name);
        }
    }
}

double pseudo_regret_increment(const CostParams& cost, const Demand& demand,
                               double y) {
    const double y_star = optimal_order(cost, demand);
    const double gap = expected_cost(cost, demand, y) - expected_cost(cost, demand, y_star);
    return std::max(gap, 0.0);
}

double pseudo_regret_increment(const CostParams& cost, const WeibullParams& demand,
                               double y) {
    return pseudo_regret_increment(cost, Demand(demand), y);
}

Demand resolve_demand(const ExperimentConfig& config, int trial) {
    if (config.mode == RegretMode::kFrequentist) {
        return config.demand;
    }
    const auto& weibull = std::get<WeibullParams>(config.demand);
    auto rng = make_rng(config.seed, static_cast<std::uint64_t>(trial), kThetaStarStream);
    return WeibullParams{gamma_sample(config.prior, rng), weibull.k};
}

std::vector<double> draw_demands(const ExperimentConfig& config, int trial) {
    const Demand truth = resolve_demand(config, trial);
    auto rng = make_rng(config.seed, static_cast<std::uint64_t>(trial), kDemandStream);
    std::vector<double> demands(static_cast<std::size_t>(config.horizon));
    for (auto& d : demands) {
        d = demand_sample(truth, rng);
    }
    return demands;
}

namespace {

double model_shape(const ExperimentConfig& config) {
    // The conjugate policies model Weibull demand with this shape; under a
    // Normal environment they run misspecified with shape 1.
    if (const auto* weibull = std::get_if<WeibullParams>(&config.demand)) {
        return weibull->k;
    }
    return 1.0;
}

}  // namespace

Trajectory run_trial(const ExperimentConfig& config, const std::string& policy_name,
                     int trial) {
    const Demand truth = resolve_demand(config, trial);
    const std::vector<double> demands = draw_demands(config, trial);

    Trajectory trajectory;
    trajectory.truth = truth;
    trajectory.optimal = optimal_order(config.cost, truth);
    const double g_star = expected_cost(config.cost, truth, trajectory.optimal);

    PolicyContext ctx;
    ctx.cost = config.cost;
    ctx.prior = config.prior;
    ctx.shape_k = model_shape(config);
    ctx.horizon = config.horizon;
    ctx.optimal = trajectory.optimal;
    ctx.fixed_order = config.fixed_order;
    auto policy = make_policy(policy_name, ctx);

    auto rng = make_rng(config.seed, static_cast<std::uint64_t>(trial),
                        stream_tag(policy_name));

    trajectory.periods.reserve(demands.size());
    for (int t = 1; t <= config.horizon; ++t) {
        const double y = policy->choose(t, rng);
        const double d = demands[static_cast<std::size_t>(t - 1)];
        const auto obs = CensoredObservation::from_demand(y, d);

        PeriodRecord record;
        record.order = y;
        record.sale = obs.sale;
        record.uncensored = obs.uncensored;
        record.realized_cost = realized_cost(config.cost, y, d);
        record.pseudo_regret =
            std::max(expected_cost(config.cost, truth, y) - g_star, 0.0);
        record.realized_regret =
            record.realized_cost - realized_cost(config.cost, trajectory.optimal, d);
        trajectory.periods.push_back(record);

        policy->observe(obs);
    }
    return trajectory;
}

std::map<std::string, RegretCurve> run_experiment(const ExperimentConfig& config) {
    validate(config);
    const std::vector<int> checkpoints = config.checkpoint_periods();

    std::map<std::string, RegretCurve> curves;
    for (const auto& name : config.policies) {
        const std::size_t n_checks = checkpoints.size();
        // cum[c][trial]
        std::vector<std::vector<double>> cum(n_checks),
            cum_realized(n_checks);
        for (auto& v : cum) {
            v.resize(static_cast<std::size_t>(config.trials));
        }
        for (auto& v : cum_realized) {
            v.resize(static_cast<std::size_t>(config.trials));
        }

        for (int trial = 0; trial < config.trials; ++trial) {
            Trajectory trajectory;
            try {
                trajectory = run_trial(config, name, trial);
            } catch (const std::exception& e) {
                throw std::runtime_error("trial " + std::to_string(trial) + " (" +
                                         name + "): " + e.what());
            }
            double total = 0.0;
            double total_realized = 0.0;
            std::size_t check = 0;
            for (int t = 1; t <= config.horizon && check < n_checks; ++t) {
                const auto& record = trajectory.periods[static_cast<std::size_t>(t - 1)];
                total += record.pseudo_regret;
                total_realized += record.realized_regret;
                if (t == checkpoints[check]) {
                    cum[check][static_cast<std::size_t>(trial)] = total;
                    cum_realized[check][static_cast<std::size_t>(trial)] = total_realized;
                    ++check;
                }
            }
        }

        const auto summarize = [](const std::vector<double>& values, double& mean,
                                  double& se) {
            const double n = static_cast<double>(values.size());
            mean = 0.0;
            for (double v : values) {
                mean += v;
            }
            mean /= n;
            double var = 0.0;
            for (double v : values) {
                var += (v - mean) * (v - mean);
            }
            se = values.size() > 1 ? std::sqrt(var / (n - 1.0) / n) : 0.0;
        };

        RegretCurve curve;
        curve.checkpoints = checkpoints;
        curve.trials = config.trials;
        curve.mean.resize(n_checks);
        curve.stderr_mean.resize(n_checks);
        curve.realized_mean.resize(n_checks);
        curve.realized_stderr.resize(n_checks);
        for (std::size_t c = 0; c < n_checks; ++c) {
            summarize(cum[c], curve.mean[c], curve.stderr_mean[c]);
            summarize(cum_realized[c], curve.realized_mean[c],
                      curve.realized_stderr[c]);
        }
        curves[name] = std::move(curve);
    }
    return curves;
}

double sublinearity_ratio(const RegretCurve& curve, int t1, int t2) {
    if (t2 != 2 * t1) {
        throw std::invalid_argument("sublinearity_ratio: t2 must equal 2*t1");
    }
    const auto find = [&curve](int t) {
        const auto it =
            std::find(curve.checkpoints.begin(), curve.checkpoints.end(), t);
        if (it == curve.checkpoints.end()) {
            throw std::invalid_argument("sublinearity_ratio: checkpoint missing");
        }
        return curve.mean[static_cast<std::size_t>(
            std::distance(curve.checkpoints.begin(), it))];
    };
    const double denom = find(t1);
    if (denom == 0.0) {
        throw std::domain_error("sublinearity_ratio: zero regret at t1");
    }
    return find(t2) / denom;
}

}  // namespace nvlab
