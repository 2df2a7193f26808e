#include "fragmerge/knowledge_base.hpp"

#include <algorithm>

#include "fragmerge/error.hpp"

namespace fragmerge {

std::string_view to_string(Fragment f) {
  switch (f) {
    case Fragment::Full: return "full";
    case Fragment::Horn: return "horn";
    case Fragment::Krom: return "krom";
    case Fragment::OneCnf: return "1cnf";
  }
  return "?";
}

Fragment fragment_from_string(std::string_view name) {
  if (name == "full") return Fragment::Full;
  if (name == "horn") return Fragment::Horn;
  if (name == "krom" || name == "2cnf") return Fragment::Krom;
  if (name == "1cnf") return Fragment::OneCnf;
  fail(Errc::Syntax, "unknown fragment '" + std::string(name) + "'");
}

bool clause_fits(Fragment f, const Clause& c) {
  switch (f) {
    case Fragment::Full: return true;
    case Fragment::Horn: return std::popcount(c.positives) <= 1;
    case Fragment::Krom: return c.width() <= 2;
    case Fragment::OneCnf: return c.width() == 1;
  }
  return false;
}

ModelSet enumerate_models(const AtomUniverse& universe, std::span<const Clause> clauses) {
  const std::uint32_t full = universe.full_mask();
  std::vector<Interpretation> models;
  for (std::uint32_t bits = 0;; ++bits) {
    Interpretation w{bits};
    bool ok = true;
    for (const Clause& c : clauses) {
      if (!c.satisfied_by(w, full)) {
        ok = false;
        break;
      }
    }
    if (ok) models.push_back(w);
    if (bits == full) break;
  }
  return ModelSet(universe, std::move(models));
}

KnowledgeBase::KnowledgeBase(AtomUniverse universe, Fragment fragment, std::vector<Clause> clauses)
    : fragment_(fragment), clauses_(std::move(clauses)), models_(AtomUniverse(universe)) {
  const std::uint32_t full = universe.full_mask();
  for (const Clause& c : clauses_) {
    if ((c.positives & c.negatives) != 0)
      fail(Errc::Syntax, "clause mentions an atom with both polarities");
    if (((c.positives | c.negatives) & ~full) != 0)
      fail(Errc::UnknownAtom, "clause uses atoms outside the universe");
    if (c.width() == 0) fail(Errc::Syntax, "empty clause");
    if (!clause_fits(fragment_, c))
      fail(Errc::FragmentViolation,
           "clause does not fit the " + std::string(to_string(fragment_)) + " fragment");
  }
  std::sort(clauses_.begin(), clauses_.end());
  clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
  models_ = enumerate_models(universe, clauses_);
}

Profile::Profile(std::vector<KnowledgeBase> bases) : bases_(std::move(bases)) {
  if (bases_.empty()) fail(Errc::LengthMismatch, "profile must contain at least one base");
  for (const KnowledgeBase& kb : bases_) {
    if (!(kb.universe() == bases_.front().universe()))
      fail(Errc::IncompatibleUniverse, "profile bases use different universes");
    if (!kb.consistent()) fail(Errc::InconsistentKb, "profile bases must be consistent");
  }
}

} // namespace fragmerge
