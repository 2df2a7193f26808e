#include "fragmerge/fragments.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "fragmerge/error.hpp"

namespace fragmerge {
namespace {

// Insert-if-new against a presence bitset; appends to `order` so the caller
// keeps deterministic processing order.
struct Accumulator {
  explicit Accumulator(std::size_t space) : present(space, false) {}

  bool add(std::uint32_t bits) {
    if (present[bits]) return false;
    present[bits] = true;
    order.push_back(bits);
    return true;
  }

  std::vector<bool> present;
  std::vector<std::uint32_t> order;
};

std::uint32_t maj3(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  return (a & b) | (a & c) | (b & c);
}

void one_step_into(std::span<const Interpretation> ms, Fragment f, Accumulator& acc) {
  const std::size_t n = ms.size();
  switch (f) {
    case Fragment::Full:
      break;
    case Fragment::Horn:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) acc.add(ms[i].bits & ms[j].bits);
      break;
    case Fragment::Krom:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
          for (std::size_t k = j; k < n; ++k) acc.add(maj3(ms[i].bits, ms[j].bits, ms[k].bits));
      break;
    case Fragment::OneCnf:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
          const std::uint32_t lo = ms[i].bits & ms[j].bits;
          const std::uint32_t hi = ms[i].bits | ms[j].bits;
          acc.add(lo);
          acc.add(hi);
          if (subset_of(ms[i], ms[j]) || subset_of(ms[j], ms[i])) {
            const std::uint32_t diff = hi & ~lo;
            for (std::uint32_t sub = diff;; sub = (sub - 1) & diff) {
              acc.add(lo | sub);
              if (sub == 0) break;
            }
          }
        }
      }
      break;
  }
}

std::vector<Interpretation> to_members(const std::vector<std::uint32_t>& bits) {
  std::vector<Interpretation> members;
  members.reserve(bits.size());
  for (std::uint32_t b : bits) members.push_back({b});
  return members;
}

} // namespace

ModelSet closure_step(const ModelSet& ms, Fragment f) {
  Accumulator acc(static_cast<std::size_t>(ms.universe().full_mask()) + 1);
  for (Interpretation w : ms.members()) acc.add(w.bits);
  one_step_into(ms.members(), f, acc);
  return ModelSet(ms.universe(), to_members(acc.order));
}

ModelSet closure(const ModelSet& ms, Fragment f) {
  if (f == Fragment::Full) return ms;
  Accumulator acc(static_cast<std::size_t>(ms.universe().full_mask()) + 1);
  for (Interpretation w : ms.members()) acc.add(w.bits);
  std::size_t before;
  do {
    before = acc.order.size();
    std::vector<Interpretation> current = to_members(acc.order);
    one_step_into(current, f, acc);
  } while (acc.order.size() != before);
  return ModelSet(ms.universe(), to_members(acc.order));
}

bool is_expressible(const ModelSet& ms, Fragment f) { return closure(ms, f) == ms; }

std::vector<Clause> fragment_clauses(const AtomUniverse& universe, Fragment f) {
  const int n = universe.size();
  const std::uint32_t full = universe.full_mask();
  std::vector<Clause> out;

  auto guard = [&](double estimate) {
    if (estimate > 2e6)
      fail(Errc::BoundsTooLarge, "clause enumeration for " + std::string(to_string(f)) +
                                     " over " + std::to_string(n) + " atoms is too large");
  };

  switch (f) {
    case Fragment::OneCnf:
      for (int i = 0; i < n; ++i) {
        out.push_back({1u << i, 0});
        out.push_back({0, 1u << i});
      }
      break;
    case Fragment::Krom:
      for (int i = 0; i < n; ++i) {
        out.push_back({1u << i, 0});
        out.push_back({0, 1u << i});
      }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const std::uint32_t bi = 1u << i, bj = 1u << j;
          out.push_back({bi | bj, 0});
          out.push_back({bi, bj});
          out.push_back({bj, bi});
          out.push_back({0, bi | bj});
        }
      break;
    case Fragment::Horn:
      guard(std::ldexp(static_cast<double>(n + 1), n));
      for (std::uint32_t negs = 0;; ++negs) {
        if (negs != 0) out.push_back({0, negs});
        for (int p = 0; p < n; ++p)
          if (((negs >> p) & 1u) == 0) out.push_back({1u << p, negs});
        if (negs == full) break;
      }
      break;
    case Fragment::Full:
      guard(std::pow(3.0, n));
      for (std::uint32_t pos = 0;; ++pos) {
        const std::uint32_t rest = full & ~pos;
        for (std::uint32_t negs = rest;; negs = (negs - 1) & rest) {
          if ((pos | negs) != 0) out.push_back({pos, negs});
          if (negs == 0) break;
        }
        if (pos == full) break;
      }
      break;
  }
  std::sort(out.begin(), out.end(), [](const Clause& a, const Clause& b) {
    if (a.width() != b.width()) return a.width() < b.width();
    return std::tie(a.positives, a.negatives) < std::tie(b.positives, b.negatives);
  });
  return out;
}

KnowledgeBase synthesize_kb(const ModelSet& ms, Fragment f) {
  if (!is_expressible(ms, f))
    fail(Errc::NotClosed, "model set is not closed under the " + std::string(to_string(f)) +
                              " closure operator");
  const std::uint32_t full = ms.universe().full_mask();
  std::vector<Clause> kept;
  for (const Clause& c : fragment_clauses(ms.universe(), f)) {
    bool satisfied = true;
    for (Interpretation w : ms.members())
      if (!c.satisfied_by(w, full)) {
        satisfied = false;
        break;
      }
    if (!satisfied) continue;
    // Clauses arrive narrowest first, so anything subsuming c is already kept.
    bool subsumed = false;
    for (const Clause& k : kept)
      if ((k.positives & ~c.positives) == 0 && (k.negatives & ~c.negatives) == 0) {
        subsumed = true;
        break;
      }
    if (!subsumed) kept.push_back(c);
  }
  KnowledgeBase kb(ms.universe(), f, std::move(kept));
  if (!(kb.models() == ms))
    fail(Errc::NotClosed, "internal: synthesized KB does not reproduce the closed set");
  return kb;
}

namespace dense {

SetMask ClauseTable::close(SetMask s) const {
  SetMask out = everything;
  for (std::size_t i = 0; i < models.size(); ++i)
    if ((s & ~models[i]) == 0) out &= models[i];
  return out;
}

ClauseTable make_clause_table(int n_atoms, Fragment f) {
  if (n_atoms < 1 || n_atoms > kMaxAtoms)
    fail(Errc::BoundsTooLarge,
         "dense engine supports 1.." + std::to_string(kMaxAtoms) + " atoms");
  std::vector<std::string> names;
  for (int i = 0; i < n_atoms; ++i) names.push_back("p" + std::to_string(i));
  AtomUniverse u{names};

  ClauseTable table;
  table.n_atoms = n_atoms;
  table.clauses = fragment_clauses(u, f);
  const std::uint32_t interp_count = 1u << n_atoms;
  table.everything =
      interp_count == 64 ? ~SetMask{0} : ((SetMask{1} << interp_count) - 1);
  table.models.reserve(table.clauses.size());
  for (const Clause& c : table.clauses) {
    SetMask m = 0;
    for (std::uint32_t w = 0; w < interp_count; ++w)
      if (c.satisfied_by({w}, u.full_mask())) m |= SetMask{1} << w;
    table.models.push_back(m);
  }
  return table;
}

std::vector<SetMask> enumerate_closed_sets(const ClauseTable& table, std::uint64_t limit) {
  std::unordered_set<SetMask> seen{table.everything};
  std::vector<SetMask> work{table.everything};
  for (std::size_t next = 0; next < work.size(); ++next) {
    const SetMask s = work[next];
    for (SetMask clause_models : table.models) {
      const SetMask t = s & clause_models;
      if (seen.insert(t).second) {
        if (seen.size() > limit)
          fail(Errc::BoundsTooLarge, "closed-set enumeration exceeds the node budget");
        work.push_back(t);
      }
    }
  }
  std::vector<SetMask> out(work.begin(), work.end());
  std::sort(out.begin(), out.end());
  return out;
}

SetMask to_mask(const ModelSet& ms) {
  if (ms.universe().size() > kMaxAtoms)
    fail(Errc::BoundsTooLarge, "model set too wide for the dense engine");
  SetMask m = 0;
  for (Interpretation w : ms.members()) m |= SetMask{1} << w.bits;
  return m;
}

ModelSet from_mask(SetMask s, const AtomUniverse& universe) {
  std::vector<Interpretation> members;
  for (std::uint32_t w = 0; w < (1u << universe.size()); ++w)
    if ((s >> w) & 1u) members.push_back({w});
  return ModelSet(universe, std::move(members));
}

} // namespace dense

} // namespace fragmerge
