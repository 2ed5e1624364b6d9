#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "nvlab/simulation.hpp"

namespace nvlab {

// Flat key=value config files with dotted keys. '#' starts a comment.
// Recognized keys:
//   horizon, trials, seed, delta
//   cost.h, cost.p
//   demand.family (weibull | normal), demand.theta, demand.k,
//   demand.mu, demand.sigma
//   prior.alpha0, prior.beta0, prior.theoretical
//   policies (comma separated), regret_mode (frequentist | bayesian)
//   checkpoint_every, checkpoints (comma separated), fixed.order,
//   emit_realized
ExperimentConfig parse_config(const std::filesystem::path& path,
                              const std::vector<std::string>& overrides = {});

// One "key=value" assignment as it appears in a file line or a --set flag.
ExperimentConfig parse_config_text(const std::string& text,
                                   const std::vector<std::string>& overrides = {});

}  // namespace nvlab
