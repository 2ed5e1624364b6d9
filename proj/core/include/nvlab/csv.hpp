#pragma once

#include <filesystem>
#include <map>
#include <ostream>
#include <string>

#include "nvlab/bounds.hpp"
#include "nvlab/kaplan_meier.hpp"
#include "nvlab/simulation.hpp"

namespace nvlab {

// Six significant digits; exact zero renders as 0.000000.
std::string format_sig6(double value);

// Header `period,policy,mean_cum_regret,stderr,trials`; rows sorted by
// (policy, period); LF line endings. When emit_realized is set, each policy
// additionally appears as "<name>.realized" with the realized-cost gap.
void write_regret_csv(const std::map<std::string, RegretCurve>& curves,
                      std::ostream& out, bool emit_realized = false);
void emit_regret_csv(const std::map<std::string, RegretCurve>& curves,
                     const std::filesystem::path& path, bool emit_realized = false);

// Four key=value lines (L, T0, C0, theorem1_bound) followed by a
// `t,epsilon_t` CSV section.
void write_bound_report(const BoundReport& report, std::ostream& out);
void emit_bound_report(const BoundReport& report, const std::filesystem::path& path);

// Step function as `x,survival` rows, one per breakpoint.
void write_km_csv(const KMEstimate& estimate, std::ostream& out);
void emit_km_csv(const KMEstimate& estimate, const std::filesystem::path& path);

// Reads `sale,censored` rows (censored in {0,1}; censored=1 means the demand
// was cut off at the order level).
std::vector<CensoredObservation> read_sales_csv(const std::filesystem::path& path);

}  // namespace nvlab
