#include "nvlab/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nvlab {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(value, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "': expected a number, got '" +
                                    value + "'");
    }
    if (used != value.size() || !std::isfinite(out)) {
        throw std::invalid_argument("config key '" + key + "': expected a number, got '" +
                                    value + "'");
    }
    return out;
}

long long parse_int(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    long long out = 0;
    try {
        out = std::stoll(value, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key +
                                    "': expected an integer, got '" + value + "'");
    }
    if (used != value.size()) {
        throw std::invalid_argument("config key '" + key +
                                    "': expected an integer, got '" + value + "'");
    }
    return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") {
        return true;
    }
    if (value == "false" || value == "0") {
        return false;
    }
    throw std::invalid_argument("config key '" + key + "': expected true/false, got '" +
                                value + "'");
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

struct RawConfig {
    // Weibull/Normal pieces kept separate until the family is known.
    ExperimentConfig config;
    std::string family = "weibull";
    double theta = 1.0;
    double k = 1.0;
    double mu = 10.0;
    double sigma = 2.0;
    bool theoretical_prior = false;
};

void apply(RawConfig& raw, const std::string& key, const std::string& value) {
    auto& config = raw.config;
    if (key == "horizon") {
        config.horizon = static_cast<int>(parse_int(key, value));
    } else if (key == "trials") {
        config.trials = static_cast<int>(parse_int(key, value));
    } else if (key == "seed") {
        config.seed = static_cast<std::uint64_t>(parse_int(key, value));
    } else if (key == "delta") {
        config.delta = parse_double(key, value);
    } else if (key == "cost.h") {
        config.cost.h = parse_double(key, value);
    } else if (key == "cost.p") {
        config.cost.p = parse_double(key, value);
    } else if (key == "demand.family") {
        if (value != "weibull" && value != "normal") {
            throw std::invalid_argument(
                "config key 'demand.family': expected weibull or normal, got '" + value +
                "'");
        }
        raw.family = value;
    } else if (key == "demand.theta") {
        raw.theta = parse_double(key, value);
    } else if (key == "demand.k") {
        raw.k = parse_double(key, value);
    } else if (key == "demand.mu") {
        raw.mu = parse_double(key, value);
    } else if (key == "demand.sigma") {
        raw.sigma = parse_double(key, value);
    } else if (key == "prior.alpha0") {
        config.prior.alpha = parse_double(key, value);
    } else if (key == "prior.beta0") {
        config.prior.beta = parse_double(key, value);
    } else if (key == "prior.theoretical") {
        raw.theoretical_prior = parse_bool(key, value);
    } else if (key == "policies") {
        config.policies = split_list(value);
    } else if (key == "regret_mode") {
        if (value == "frequentist") {
            config.mode = RegretMode::kFrequentist;
        } else if (value == "bayesian") {
            config.mode = RegretMode::kBayesian;
        } else {
            throw std::invalid_argument(
                "config key 'regret_mode': expected frequentist or bayesian, got '" +
                value + "'");
        }
    } else if (key == "checkpoint_every") {
        config.checkpoint_every = static_cast<int>(parse_int(key, value));
    } else if (key == "checkpoints") {
        config.checkpoints.clear();
        for (const auto& item : split_list(value)) {
            config.checkpoints.push_back(static_cast<int>(parse_int(key, item)));
        }
    } else if (key == "fixed.order") {
        config.fixed_order = parse_double(key, value);
        if (config.fixed_order < 0.0) {
            throw std::invalid_argument("config key 'fixed.order': must be nonnegative");
        }
    } else if (key == "emit_realized") {
        config.emit_realized = parse_bool(key, value);
    } else {
        throw std::invalid_argument("unknown config key: '" + key + "'");
    }
}

void apply_line(RawConfig& raw, const std::string& line, const std::string& where) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
        throw std::invalid_argument(where + ": expected key=value, got '" + line + "'");
    }
    apply(raw, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
}

ExperimentConfig finish(RawConfig raw) {
    auto& config = raw.config;
    if (raw.family == "weibull") {
        config.demand = WeibullParams{raw.theta, raw.k};
    } else {
        config.demand = NormalParams{raw.mu, raw.sigma};
    }
    if (raw.theoretical_prior) {
        // Algorithm input constraint alpha0 >= max{ln(T/delta)/ln(e/2), 2};
        // the prior mean beta0/alpha0 is preserved.
        const double alpha0 = std::max(
            std::log(static_cast<double>(config.horizon) / config.delta) /
                std::log(M_E / 2.0),
            2.0);
        config.prior.beta *= alpha0 / config.prior.alpha;
        config.prior.alpha = alpha0;
    }
    validate(config);
    return config;
}

}  // namespace

ExperimentConfig parse_config(const std::filesystem::path& path,
                              const std::vector<std::string>& overrides) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file: " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), overrides);
}

ExperimentConfig parse_config_text(const std::string& text,
                                   const std::vector<std::string>& overrides) {
    RawConfig raw;
    std::stringstream ss(text);
    std::string line;
    int line_no = 0;
    while (std::getline(ss, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        apply_line(raw, line, "line " + std::to_string(line_no));
    }
    for (const auto& override_item : overrides) {
        apply_line(raw, override_item, "override");
    }
    return finish(std::move(raw));
}

}  // namespace nvlab
