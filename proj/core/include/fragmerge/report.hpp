#pragma once

#include <json.hpp>
#include <string>

#include "fragmerge/distribute.hpp"

namespace fragmerge {

/// Sweeps every non-empty target over universes of 1..max_atoms atoms for
/// each (operator, fragment) cell and tallies witnesses against exhaustion
/// certificates. A cell comes out as:
///   "yes"     every target has a verified witness,
///   "no"      only fragment-expressible targets do, all others exhausted,
///   "partial" mixed evidence.
/// Search fallbacks run same-universe with per-fragment profile-length caps;
/// the bounds used are recorded in each cell. Evidence is only ever claimed
/// at those bounds.
nlohmann::json build_summary_report(int max_atoms, int max_profile_len,
                                    std::uint64_t node_budget, int jobs);

std::string render_summary_markdown(const nlohmann::json& report);

} // namespace fragmerge
