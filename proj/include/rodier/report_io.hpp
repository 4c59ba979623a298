#ifndef RODIER_REPORT_IO_HPP
#define RODIER_REPORT_IO_HPP

#include <optional>
#include <string>

#include "json.hpp"
#include "rodier/constituents.hpp"
#include "rodier/problem.hpp"

namespace rodier {

inline constexpr const char* kToolVersion = "1.0.0";

/// Full report envelope. `seconds` is omitted when nullopt (golden runs).
nlohmann::ordered_json report_json(const Problem& p, const DecompositionReport& r, std::optional<double> seconds);

/// Human-readable summary with the constituent table.
std::string report_text(const Problem& p, const DecompositionReport& r);

/// Chamber graph: one vertex per chamber labelled by its reduced word in Delta_M^0, edges for
/// shared walls, one cluster per component, S-walls drawn bold red.
std::string report_dot(const Problem& p, const DecompositionReport& r);

/// "+-+" style rendering of a sign vector.
std::string sign_string(const std::vector<Sign>& v);

}  // namespace rodier

#endif  // RODIER_REPORT_IO_HPP
