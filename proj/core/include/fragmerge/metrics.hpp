#pragma once

#include <compare>
#include <string_view>
#include <vector>

#include "fragmerge/knowledge_base.hpp"
#include "fragmerge/model_set.hpp"

namespace fragmerge {

enum class Distance { Drastic, Hamming };
enum class Aggregation { Sum, GMax, GMin };

std::string_view to_string(Distance d);
std::string_view to_string(Aggregation a);
Distance distance_from_string(std::string_view name);
Aggregation aggregation_from_string(std::string_view name);

/// Distance between interpretations over a common universe. Drastic is 0 on
/// equal interpretations and 1 otherwise; Hamming counts the symmetric
/// difference. Both are exact integers.
int dist(Interpretation a, Interpretation b, Distance d);

/// min over the members of a non-empty set.
int dist_to_models(Interpretation w, const ModelSet& models, Distance d);
int dist_to_kb(Interpretation w, const KnowledgeBase& kb, Distance d);

/// Per-base distances from one interpretation, in profile order.
struct DistanceVector {
  std::vector<int> entries;

  bool operator==(const DistanceVector&) const = default;
};

DistanceVector vector_of(Interpretation w, const Profile& profile, Distance d);

/// Total preorder on distance vectors of equal length: Sum compares totals,
/// GMax compares the vectors sorted decreasing lexicographically (leximax),
/// GMin sorted increasing (leximin). "equivalent" is a tie under the
/// aggregation, not entrywise equality.
std::strong_ordering compare(const DistanceVector& a, const DistanceVector& b, Aggregation agg);

/// The vector as the aggregation ranks it: the total for Sum, the sorted
/// vector for GMax/GMin. This is what reports display.
std::vector<int> aggregate_key(const DistanceVector& v, Aggregation agg);

} // namespace fragmerge
