#include "fragmerge/metrics.hpp"

#include <algorithm>
#include <numeric>

#include "fragmerge/error.hpp"

namespace fragmerge {

std::string_view to_string(Distance d) { return d == Distance::Drastic ? "drastic" : "hamming"; }

std::string_view to_string(Aggregation a) {
  switch (a) {
    case Aggregation::Sum: return "sum";
    case Aggregation::GMax: return "gmax";
    case Aggregation::GMin: return "gmin";
  }
  return "?";
}

Distance distance_from_string(std::string_view name) {
  if (name == "drastic") return Distance::Drastic;
  if (name == "hamming") return Distance::Hamming;
  fail(Errc::Usage, "unknown distance '" + std::string(name) + "'");
}

Aggregation aggregation_from_string(std::string_view name) {
  if (name == "sum") return Aggregation::Sum;
  if (name == "gmax") return Aggregation::GMax;
  if (name == "gmin") return Aggregation::GMin;
  fail(Errc::Usage, "unknown aggregation '" + std::string(name) + "'");
}

int dist(Interpretation a, Interpretation b, Distance d) {
  // Note: the drastic distance is 0 iff the interpretations are equal, as
  // the distance axioms require.
  if (d == Distance::Drastic) return a == b ? 0 : 1;
  return hamming(a, b);
}

int dist_to_models(Interpretation w, const ModelSet& models, Distance d) {
  if (models.empty()) fail(Errc::InconsistentKb, "distance to an empty model set is undefined");
  int best = dist(w, models.members().front(), d);
  for (Interpretation m : models.members()) {
    best = std::min(best, dist(w, m, d));
    if (best == 0) break;
  }
  return best;
}

int dist_to_kb(Interpretation w, const KnowledgeBase& kb, Distance d) {
  if ((w.bits & ~kb.universe().full_mask()) != 0)
    fail(Errc::IncompatibleUniverse, "interpretation does not fit the KB's universe");
  return dist_to_models(w, kb.models(), d);
}

DistanceVector vector_of(Interpretation w, const Profile& profile, Distance d) {
  DistanceVector v;
  v.entries.reserve(profile.size());
  for (const KnowledgeBase& kb : profile.bases()) v.entries.push_back(dist_to_kb(w, kb, d));
  return v;
}

std::vector<int> aggregate_key(const DistanceVector& v, Aggregation agg) {
  switch (agg) {
    case Aggregation::Sum:
      return {std::accumulate(v.entries.begin(), v.entries.end(), 0)};
    case Aggregation::GMax: {
      std::vector<int> key = v.entries;
      std::sort(key.begin(), key.end(), std::greater<>());
      return key;
    }
    case Aggregation::GMin: {
      std::vector<int> key = v.entries;
      std::sort(key.begin(), key.end());
      return key;
    }
  }
  return {};
}

std::strong_ordering compare(const DistanceVector& a, const DistanceVector& b, Aggregation agg) {
  if (a.entries.size() != b.entries.size())
    fail(Errc::LengthMismatch, "distance vectors have different lengths");
  const std::vector<int> ka = aggregate_key(a, agg);
  const std::vector<int> kb = aggregate_key(b, agg);
  return ka <=> kb;
}

} // namespace fragmerge
