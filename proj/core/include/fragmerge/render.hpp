#pragma once

#include <json.hpp>
#include <string>

#include "fragmerge/merge.hpp"

namespace fragmerge {

/// Machine-readable distance table: one row per model of the constraint in
/// ascending bitmask order, with per-base distances, the aggregation key, and
/// a minimal flag. Text output is rendered from this document, so the two
/// forms cannot drift apart.
nlohmann::json matrix_report(const Profile& profile, const KnowledgeBase& constraint,
                             MergeSpec spec, const MergeResult& result);

/// Tabular layout: rows are models of the constraint, columns the per-base
/// distances and the aggregate; minimal rows are starred.
std::string render_matrix_text(const nlohmann::json& report);

} // namespace fragmerge
