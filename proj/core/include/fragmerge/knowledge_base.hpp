#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "fragmerge/model_set.hpp"
#include "fragmerge/universe.hpp"

namespace fragmerge {

enum class Fragment { Full, Horn, Krom, OneCnf };

std::string_view to_string(Fragment f);
Fragment fragment_from_string(std::string_view name);

/// Disjunction of literals, encoded as two disjoint atom-index masks.
/// A clause is never empty.
struct Clause {
  std::uint32_t positives = 0;
  std::uint32_t negatives = 0;

  bool satisfied_by(Interpretation w, std::uint32_t universe_mask) const {
    return (positives & w.bits) != 0 || (negatives & ~w.bits & universe_mask) != 0;
  }
  int width() const { return std::popcount(positives | negatives); }

  friend auto operator<=>(const Clause&, const Clause&) = default;
};

/// Syntactic membership of a clause in a fragment: Horn allows at most one
/// positive literal, Krom at most two literals, 1CNF exactly one.
bool clause_fits(Fragment f, const Clause& c);

/// Models of a clause set: exactly the interpretations satisfying every
/// clause, in ascending bitmask order. An empty clause set is a tautology.
ModelSet enumerate_models(const AtomUniverse& universe, std::span<const Clause> clauses);

/// A clause set tagged with the fragment it must syntactically belong to.
/// The model set is computed once at construction and never mutated.
class KnowledgeBase {
public:
  KnowledgeBase(AtomUniverse universe, Fragment fragment, std::vector<Clause> clauses);

  const AtomUniverse& universe() const { return models_.universe(); }
  Fragment fragment() const { return fragment_; }
  std::span<const Clause> clauses() const { return clauses_; }
  const ModelSet& models() const { return models_; }
  bool consistent() const { return !models_.empty(); }

private:
  Fragment fragment_;
  std::vector<Clause> clauses_;
  ModelSet models_;
};

/// Non-empty ordered tuple of consistent knowledge bases over one universe.
class Profile {
public:
  explicit Profile(std::vector<KnowledgeBase> bases);

  const AtomUniverse& universe() const { return bases_.front().universe(); }
  std::span<const KnowledgeBase> bases() const { return bases_; }
  std::size_t size() const { return bases_.size(); }
  const KnowledgeBase& operator[](std::size_t i) const { return bases_[i]; }

private:
  std::vector<KnowledgeBase> bases_;
};

} // namespace fragmerge
