#include "fragmerge/universe.hpp"

#include <algorithm>
#include <unordered_set>

#include "fragmerge/error.hpp"

namespace fragmerge {

AtomUniverse::AtomUniverse(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) fail(Errc::BadUniverse, "universe must contain at least one atom");
  if (static_cast<int>(names_.size()) > kMaxAtoms)
    fail(Errc::UniverseTooLarge,
         "universe has " + std::to_string(names_.size()) + " atoms, limit is " +
             std::to_string(kMaxAtoms));
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) fail(Errc::BadUniverse, "empty atom name");
    if (!seen.insert(n).second) fail(Errc::BadUniverse, "duplicate atom name '" + n + "'");
  }
}

std::optional<int> AtomUniverse::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

bool AtomUniverse::is_prefix_of(const AtomUniverse& other) const {
  if (size() > other.size()) return false;
  return std::equal(names_.begin(), names_.end(), other.names_.begin());
}

AtomUniverse AtomUniverse::extended_with_fresh(int count) const {
  std::vector<std::string> names = names_;
  int next = 1;
  for (int i = 0; i < count; ++i) {
    std::string candidate;
    do {
      candidate = "_x" + std::to_string(next++);
    } while (std::find(names.begin(), names.end(), candidate) != names.end());
    names.push_back(std::move(candidate));
  }
  return AtomUniverse(std::move(names));
}

} // namespace fragmerge
