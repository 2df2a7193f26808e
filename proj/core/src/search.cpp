#include <atomic>
#include <bit>
#include <cassert>
#include <cmath>
#include <thread>

#include "fragmerge/distribute.hpp"
#include "fragmerge/error.hpp"

namespace fragmerge {
namespace {

constexpr int kMaxSearchLen = 12;

struct DenseSearch {
  AtomUniverse working;
  Distance distance;
  Aggregation agg;
  std::vector<std::uint32_t> rows;        // models of the constraint, ascending
  std::uint64_t target_row_mask = 0;      // rows that belong to the target
  std::vector<dense::SetMask> candidates; // non-empty closed sets, ascending
  std::vector<std::vector<int>> dist;     // dist[candidate][row]

  DenseSearch(const DistributionTask& task)
      : working(task.target.universe().extended_with_fresh(task.bounds.fresh_atoms)),
        distance(task.spec.distance),
        agg(task.spec.aggregation) {
    const dense::ClauseTable table = dense::make_clause_table(working.size(), task.fragment);
    const dense::SetMask target_mask = dense::to_mask(extend_to(task.target, working));
    const dense::SetMask mu_mask = table.close(target_mask);

    for (std::uint32_t w = 0; w < (1u << working.size()); ++w) {
      if (((mu_mask >> w) & 1u) == 0) continue;
      if ((target_mask >> w) & 1u) target_row_mask |= std::uint64_t{1} << rows.size();
      rows.push_back(w);
    }

    for (dense::SetMask s : dense::enumerate_closed_sets(table, task.bounds.node_budget))
      if (s != 0) candidates.push_back(s);

    dist.resize(candidates.size());
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      dist[c].reserve(rows.size());
      for (std::uint32_t r : rows) dist[c].push_back(dist_to_mask(r, candidates[c]));
    }
  }

  int dist_to_mask(std::uint32_t w, dense::SetMask members) const {
    if (distance == Distance::Drastic) return ((members >> w) & 1u) ? 0 : 1;
    int best = working.size() + 1;
    while (members) {
      const std::uint32_t m = static_cast<std::uint32_t>(std::countr_zero(members));
      members &= members - 1;
      best = std::min(best, std::popcount(w ^ m));
    }
    return best;
  }

  /// True when the minimal rows under the aggregated profile distances are
  /// exactly the target rows.
  bool hits(std::span<const int> profile) const {
    std::array<int, kMaxSearchLen> key{}, best{};
    int best_len = -1;
    std::uint64_t best_rows = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      int len = 0;
      if (agg == Aggregation::Sum) {
        int total = 0;
        for (int c : profile) total += dist[static_cast<std::size_t>(c)][r];
        key[0] = total;
        len = 1;
      } else {
        for (int c : profile) key[len++] = dist[static_cast<std::size_t>(c)][r];
        std::sort(key.begin(), key.begin() + len);
        if (agg == Aggregation::GMax) std::reverse(key.begin(), key.begin() + len);
      }
      int cmp = -1;
      if (best_len >= 0) {
        cmp = 0;
        for (int i = 0; i < len && cmp == 0; ++i) cmp = key[i] - best[i];
      }
      if (cmp < 0) {
        best = key;
        best_len = len;
        best_rows = std::uint64_t{1} << r;
      } else if (cmp == 0) {
        best_rows |= std::uint64_t{1} << r;
      }
    }
    return best_rows == target_row_mask;
  }
};

double multiset_count(std::size_t n, int k) {
  double out = 1.0;
  for (int i = 0; i < k; ++i) out = out * (static_cast<double>(n) + i) / (i + 1);
  return out;
}

/// Enumerates non-decreasing index tuples of the given length whose first
/// index lies in [first_lo, first_hi), in lexicographic order; stops at the
/// first hit. Returns the hit tuple through `out`.
bool scan_chunk(const DenseSearch& ds, int length, int first_lo, int first_hi,
                std::vector<int>& out, std::uint64_t& examined) {
  std::vector<int> profile(static_cast<std::size_t>(length));
  const int n = static_cast<int>(ds.candidates.size());

  auto recurse = [&](auto&& self, int level, int start) -> bool {
    if (level == length) {
      ++examined;
      if (ds.hits(profile)) {
        out = profile;
        return true;
      }
      return false;
    }
    const int hi = (level == 0) ? first_hi : n;
    for (int c = (level == 0 ? first_lo : start); c < hi; ++c) {
      profile[static_cast<std::size_t>(level)] = c;
      if (self(self, level + 1, c)) return true;
    }
    return false;
  };
  return recurse(recurse, 0, first_lo);
}

DistributionWitness build_witness(const DistributionTask& task, const DenseSearch& ds,
                                  std::span<const int> indices) {
  std::vector<KnowledgeBase> bases;
  for (int c : indices)
    bases.push_back(synthesize_kb(
        dense::from_mask(ds.candidates[static_cast<std::size_t>(c)], ds.working), task.fragment));
  dense::SetMask mu_mask = 0;
  for (std::uint32_t r : ds.rows) mu_mask |= dense::SetMask{1} << r;
  KnowledgeBase mu = synthesize_kb(dense::from_mask(mu_mask, ds.working), task.fragment);

  DistributionWitness w{Profile{std::move(bases)},
                        std::move(mu),
                        task.fragment,
                        "search",
                        "",
                        task.spec.distance,
                        {task.spec.aggregation},
                        task.target,
                        task.target.universe(),
                        task.bounds.fresh_atoms,
                        task.mode == DistributionMode::Simplify ? 1 : task.bounds.max_profile_len,
                        false};
  // The witness must re-verify through the ordinary merge path, not just the
  // dense tables it was found with.
  if (!verify_witness(w))
    fail(Errc::BoundsTooLarge, "internal: dense search hit failed independent re-verification");
  return w;
}

} // namespace

SearchOutcome search(const DistributionTask& task, int jobs) {
  if (task.target.empty()) fail(Errc::InconsistentKb, "target must be non-empty");
  const int max_len =
      task.mode == DistributionMode::Simplify ? 1 : task.bounds.max_profile_len;
  if (max_len < 1 || max_len > kMaxSearchLen)
    fail(Errc::Usage, "profile length bound must be within 1.." + std::to_string(kMaxSearchLen));
  if (task.bounds.fresh_atoms < 0) fail(Errc::Usage, "fresh atom count cannot be negative");
  if (task.target.universe().size() + task.bounds.fresh_atoms > dense::kMaxAtoms)
    fail(Errc::BoundsTooLarge,
         "search supports at most " + std::to_string(dense::kMaxAtoms) +
             " atoms including fresh ones");

  DenseSearch ds(task);

  double estimated = 0;
  for (int len = 1; len <= max_len; ++len) estimated += multiset_count(ds.candidates.size(), len);
  if (estimated > static_cast<double>(task.bounds.node_budget))
    fail(Errc::BoundsTooLarge,
         "estimated " + std::to_string(estimated) + " candidate profiles exceed the node budget " +
             std::to_string(task.bounds.node_budget));

  ExhaustionCertificate cert{ds.working.size(), task.bounds.fresh_atoms, max_len, 0, 0};
  cert.candidates = ds.candidates.size();

  const int n = static_cast<int>(ds.candidates.size());
  jobs = std::max(1, jobs);
  std::uint64_t examined_total = 0;

  for (int len = 1; len <= max_len; ++len) {
    std::optional<std::vector<int>> found;
    if (jobs == 1 || n < 2 * jobs) {
      std::vector<int> hit;
      std::uint64_t examined = 0;
      if (scan_chunk(ds, len, 0, n, hit, examined)) found = hit;
      examined_total += examined;
    } else {
      // Contiguous first-index chunks; the winner is the lexicographically
      // least hit, so the outcome does not depend on scheduling.
      std::vector<std::optional<std::vector<int>>> hits(static_cast<std::size_t>(jobs));
      std::vector<std::uint64_t> examined(static_cast<std::size_t>(jobs), 0);
      std::vector<std::thread> workers;
      for (int t = 0; t < jobs; ++t) {
        const int lo = static_cast<int>(static_cast<std::int64_t>(n) * t / jobs);
        const int hi = static_cast<int>(static_cast<std::int64_t>(n) * (t + 1) / jobs);
        workers.emplace_back([&, t, lo, hi] {
          std::vector<int> hit;
          if (scan_chunk(ds, len, lo, hi, hit, examined[static_cast<std::size_t>(t)]))
            hits[static_cast<std::size_t>(t)] = hit;
        });
      }
      for (auto& w : workers) w.join();
      for (int t = 0; t < jobs; ++t) {
        examined_total += examined[static_cast<std::size_t>(t)];
        const auto& h = hits[static_cast<std::size_t>(t)];
        if (h && (!found || *h < *found)) found = h;
      }
    }
    if (found) {
      cert.profiles_examined = examined_total;
      return {build_witness(task, ds, *found), cert};
    }
  }

  cert.profiles_examined = examined_total;
  return {std::nullopt, cert};
}

} // namespace fragmerge
