#pragma once

#include <optional>
#include <vector>

#include "fragmerge/knowledge_base.hpp"
#include "fragmerge/metrics.hpp"
#include "fragmerge/model_set.hpp"

namespace fragmerge {

struct MergeSpec {
  Distance distance = Distance::Hamming;
  Aggregation aggregation = Aggregation::Sum;
};

struct MatrixRow {
  Interpretation model;            // a model of the constraint
  DistanceVector distances;        // per-base distances, profile order
  std::vector<int> aggregate_key;  // how the aggregation ranks this row
  bool minimal = false;
};

struct MergeResult {
  ModelSet models;
  std::optional<std::vector<MatrixRow>> matrix;
};

/// Distance-based merging: the models of the constraint that are minimal in
/// the profile preorder induced by the spec. Ties are kept; the result is
/// empty exactly when the constraint is inconsistent.
MergeResult merge(const Profile& profile, const KnowledgeBase& constraint, MergeSpec spec,
                  bool want_matrix = false);

/// Single-base merging (revision). The aggregation cannot matter for a
/// profile of length one; this is asserted, not assumed.
MergeResult revise(const KnowledgeBase& base, const KnowledgeBase& constraint, Distance d,
                   bool want_matrix = false);

/// Model-set equality against a target KB over the same universe.
bool equiv(const MergeResult& result, const KnowledgeBase& target);

} // namespace fragmerge
