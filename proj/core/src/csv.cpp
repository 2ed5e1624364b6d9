#include "nvlab/csv.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace nvlab {

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path.string());
    }
    return out;
}

void write_curve_rows(std::ostream& out, const std::string& name,
                      const RegretCurve& curve, const std::vector<double>& values,
                      const std::vector<double>& errors) {
    for (std::size_t i = 0; i < curve.checkpoints.size(); ++i) {
        out << curve.checkpoints[i] << ',' << name << ',' << format_sig6(values[i])
            << ',' << format_sig6(errors[i]) << ',' << curve.trials << '\n';
    }
}

}  // namespace

std::string format_sig6(double value) {
    if (value == 0.0) {
        return "0.000000";
    }
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

void write_regret_csv(const std::map<std::string, RegretCurve>& curves,
                      std::ostream& out, bool emit_realized) {
    if (curves.empty()) {
        throw std::invalid_argument("write_regret_csv: no curves to write");
    }
    out << "period,policy,mean_cum_regret,stderr,trials\n";
    // std::map iteration is already sorted by policy name.
    for (const auto& [name, curve] : curves) {
        write_curve_rows(out, name, curve, curve.mean, curve.stderr_mean);
    }
    if (emit_realized) {
        for (const auto& [name, curve] : curves) {
            write_curve_rows(out, name + ".realized", curve, curve.realized_mean,
                             curve.realized_stderr);
        }
    }
}

void emit_regret_csv(const std::map<std::string, RegretCurve>& curves,
                     const std::filesystem::path& path, bool emit_realized) {
    auto out = open_output(path);
    write_regret_csv(curves, out, emit_realized);
}

void write_bound_report(const BoundReport& report, std::ostream& out) {
    char buffer[64];
    const auto line = [&](const char* key, double value) {
        std::snprintf(buffer, sizeof(buffer), "%.12g", value);
        out << key << '=' << buffer << '\n';
    };
    line("L", report.L);
    line("T0", report.T0);
    line("C0", report.C0);
    line("theorem1_bound", report.theorem1_bound);
    out << "t,epsilon_t\n";
    for (std::size_t i = 0; i < report.epsilon.size(); ++i) {
        std::snprintf(buffer, sizeof(buffer), "%.12g", report.epsilon[i]);
        out << (i + 1) << ',' << buffer << '\n';
    }
}

void emit_bound_report(const BoundReport& report, const std::filesystem::path& path) {
    auto out = open_output(path);
    write_bound_report(report, out);
}

void write_km_csv(const KMEstimate& estimate, std::ostream& out) {
    out << "x,survival\n";
    char buffer[64];
    for (std::size_t i = 0; i < estimate.breakpoints.size(); ++i) {
        std::snprintf(buffer, sizeof(buffer), "%.12g", estimate.breakpoints[i]);
        out << buffer << ',';
        std::snprintf(buffer, sizeof(buffer), "%.12g", estimate.survival[i]);
        out << buffer << '\n';
    }
}

void emit_km_csv(const KMEstimate& estimate, const std::filesystem::path& path) {
    auto out = open_output(path);
    write_km_csv(estimate, out);
}

std::vector<CensoredObservation> read_sales_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open input file: " + path.string());
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("sales csv is empty: " + path.string());
    }
    if (line == "sale,censored\r") {
        line = "sale,censored";
    }
    if (line != "sale,censored") {
        throw std::invalid_argument("sales csv must start with header 'sale,censored'");
    }
    std::vector<CensoredObservation> observations;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw std::invalid_argument("sales csv line " + std::to_string(line_no) +
                                        ": expected 'sale,censored'");
        }
        double sale = 0.0;
        int censored = 0;
        try {
            const std::string sale_field = line.substr(0, comma);
            const std::string flag_field = line.substr(comma + 1);
            std::size_t used = 0;
            sale = std::stod(sale_field, &used);
            if (used != sale_field.size()) {
                throw std::invalid_argument("trailing characters");
            }
            censored = std::stoi(flag_field, &used);
            if (used != flag_field.size()) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("sales csv line " + std::to_string(line_no) +
                                        ": malformed row '" + line + "'");
        }
        if (sale < 0.0 || (censored != 0 && censored != 1)) {
            throw std::invalid_argument("sales csv line " + std::to_string(line_no) +
                                        ": sale must be >= 0 and censored in {0,1}");
        }
        CensoredObservation obs;
        obs.sale = sale;
        obs.uncensored = censored == 0;
        // The order level is not part of the file; a censored sale equals its
        // order, an uncensored one only bounds it from below.
        obs.order = obs.uncensored ? std::numeric_limits<double>::infinity() : sale;
        observations.push_back(obs);
    }
    return observations;
}

}  // namespace nvlab
