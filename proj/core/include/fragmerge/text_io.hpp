#pragma once

#include <string>
#include <string_view>

#include "fragmerge/knowledge_base.hpp"
#include "fragmerge/model_set.hpp"
#include "fragmerge/universe.hpp"

namespace fragmerge {

/// Parses a comma-separated atom list ("a,b,c"); order is significant.
/// Names with the reserved '_' prefix are rejected here (they are minted
/// internally for auxiliary atoms).
AtomUniverse parse_universe(std::string_view csv);

/// KB text format: first line is the fragment tag (full|horn|krom|1cnf);
/// every further non-empty, non-'#' line is one clause of whitespace
/// separated literals, '-' marking negation.
KnowledgeBase parse_kb(std::string_view text, const AtomUniverse& universe);
std::string format_kb(const KnowledgeBase& kb);

/// Model set text format: one interpretation per line, as "{a,b}" or "{}".
ModelSet parse_model_set(std::string_view text, const AtomUniverse& universe);
std::string format_model_set(const ModelSet& ms);

Interpretation parse_interpretation(std::string_view text, const AtomUniverse& universe);
std::string format_interpretation(Interpretation w, const AtomUniverse& universe);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

} // namespace fragmerge
