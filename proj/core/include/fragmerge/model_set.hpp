#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "fragmerge/universe.hpp"

namespace fragmerge {

/// A single truth assignment: bit i is set iff atom i of the universe is true.
struct Interpretation {
  std::uint32_t bits = 0;

  friend auto operator<=>(const Interpretation&, const Interpretation&) = default;
};

inline Interpretation meet(Interpretation a, Interpretation b) { return {a.bits & b.bits}; }
inline Interpretation join(Interpretation a, Interpretation b) { return {a.bits | b.bits}; }
inline bool subset_of(Interpretation a, Interpretation b) { return (a.bits & ~b.bits) == 0; }
inline bool comparable(Interpretation a, Interpretation b) {
  return subset_of(a, b) || subset_of(b, a);
}
inline int hamming(Interpretation a, Interpretation b) {
  return std::popcount(a.bits ^ b.bits);
}

/// Finite set of interpretations over one universe. Members are kept sorted
/// by ascending bitmask and deduplicated, which fixes iteration order
/// everywhere downstream.
class ModelSet {
public:
  explicit ModelSet(AtomUniverse universe);
  ModelSet(AtomUniverse universe, std::vector<Interpretation> members);

  /// All 2^n interpretations of the universe.
  static ModelSet all(const AtomUniverse& universe);

  const AtomUniverse& universe() const { return universe_; }
  std::span<const Interpretation> members() const { return members_; }
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  bool contains(Interpretation w) const;

  /// Intersection / union over all members; meaningful only when non-empty.
  Interpretation bottom() const;
  Interpretation top() const;

  bool operator==(const ModelSet& other) const {
    return universe_ == other.universe_ && members_ == other.members_;
  }

private:
  AtomUniverse universe_;
  std::vector<Interpretation> members_;
};

/// Embeds every member unchanged into a larger universe; the current universe
/// must be a prefix of the target, and all new atoms come out false.
ModelSet extend_to(const ModelSet& ms, const AtomUniverse& larger);

/// Projects every member onto a prefix universe, deduplicating.
ModelSet restrict_to(const ModelSet& ms, const AtomUniverse& prefix);

} // namespace fragmerge
