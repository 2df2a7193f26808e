#include "fragmerge/model_set.hpp"

#include <algorithm>

#include "fragmerge/error.hpp"

namespace fragmerge {

ModelSet::ModelSet(AtomUniverse universe) : universe_(std::move(universe)) {}

ModelSet::ModelSet(AtomUniverse universe, std::vector<Interpretation> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
  const std::uint32_t stray = ~universe_.full_mask();
  for (Interpretation w : members_) {
    if (w.bits & stray)
      fail(Errc::IncompatibleUniverse, "interpretation uses bits outside its universe");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

ModelSet ModelSet::all(const AtomUniverse& universe) {
  std::vector<Interpretation> members;
  const std::uint32_t n = universe.full_mask();
  members.reserve(static_cast<std::size_t>(n) + 1);
  for (std::uint32_t bits = 0;; ++bits) {
    members.push_back({bits});
    if (bits == n) break;
  }
  return ModelSet(universe, std::move(members));
}

bool ModelSet::contains(Interpretation w) const {
  return std::binary_search(members_.begin(), members_.end(), w);
}

Interpretation ModelSet::bottom() const {
  Interpretation acc{universe_.full_mask()};
  for (Interpretation w : members_) acc = meet(acc, w);
  return acc;
}

Interpretation ModelSet::top() const {
  Interpretation acc{0};
  for (Interpretation w : members_) acc = join(acc, w);
  return acc;
}

ModelSet extend_to(const ModelSet& ms, const AtomUniverse& larger) {
  if (!ms.universe().is_prefix_of(larger))
    fail(Errc::IncompatibleUniverse, "universe is not a prefix of the extension target");
  std::vector<Interpretation> members(ms.members().begin(), ms.members().end());
  return ModelSet(larger, std::move(members));
}

ModelSet restrict_to(const ModelSet& ms, const AtomUniverse& prefix) {
  if (!prefix.is_prefix_of(ms.universe()))
    fail(Errc::IncompatibleUniverse, "restriction target is not a prefix of the universe");
  const std::uint32_t keep = prefix.full_mask();
  std::vector<Interpretation> members;
  members.reserve(ms.size());
  for (Interpretation w : ms.members()) members.push_back({w.bits & keep});
  return ModelSet(prefix, std::move(members));
}

} // namespace fragmerge
