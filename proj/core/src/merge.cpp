#include "fragmerge/merge.hpp"

#include <cassert>

#include "fragmerge/error.hpp"

namespace fragmerge {

MergeResult merge(const Profile& profile, const KnowledgeBase& constraint, MergeSpec spec,
                  bool want_matrix) {
  if (!(profile.universe() == constraint.universe()))
    fail(Errc::IncompatibleUniverse, "profile and constraint use different universes");

  std::vector<MatrixRow> rows;
  rows.reserve(constraint.models().size());
  for (Interpretation w : constraint.models().members()) {
    MatrixRow row;
    row.model = w;
    row.distances = vector_of(w, profile, spec.distance);
    row.aggregate_key = aggregate_key(row.distances, spec.aggregation);
    rows.push_back(std::move(row));
  }

  const std::vector<int>* best = nullptr;
  for (const MatrixRow& row : rows)
    if (best == nullptr || row.aggregate_key < *best) best = &row.aggregate_key;

  std::vector<Interpretation> minimal;
  for (MatrixRow& row : rows) {
    row.minimal = best != nullptr && row.aggregate_key == *best;
    if (row.minimal) minimal.push_back(row.model);
  }

  MergeResult result{ModelSet(constraint.universe(), std::move(minimal)), std::nullopt};
  if (want_matrix) result.matrix = std::move(rows);
  return result;
}

MergeResult revise(const KnowledgeBase& base, const KnowledgeBase& constraint, Distance d,
                   bool want_matrix) {
  Profile e{std::vector<KnowledgeBase>{base}};
  MergeResult result = merge(e, constraint, {d, Aggregation::Sum}, want_matrix);
  // A profile of one base cannot depend on the aggregation.
  if (!(merge(e, constraint, {d, Aggregation::GMax}).models == result.models) ||
      !(merge(e, constraint, {d, Aggregation::GMin}).models == result.models))
    fail(Errc::LengthMismatch, "internal: aggregations disagree on a singleton profile");
  return result;
}

bool equiv(const MergeResult& result, const KnowledgeBase& target) {
  if (!(result.models.universe() == target.universe()))
    fail(Errc::IncompatibleUniverse, "merge result and target use different universes");
  return result.models == target.models();
}

} // namespace fragmerge
