#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fragmerge {

/// Ordered set of atom names. The position of a name is its bit position in
/// every interpretation over this universe; order is fixed at construction.
class AtomUniverse {
public:
  static constexpr int kMaxAtoms = 24;

  explicit AtomUniverse(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;

  /// Mask with the low size() bits set.
  std::uint32_t full_mask() const { return (size() == 32) ? ~0u : ((1u << size()) - 1u); }

  /// True when this universe's names are an initial segment of `other`'s.
  bool is_prefix_of(const AtomUniverse& other) const;

  /// Appends `count` auxiliary atoms named with the reserved "_x" prefix,
  /// numbered past any auxiliary atoms already present.
  AtomUniverse extended_with_fresh(int count) const;

  /// Names starting with '_' are reserved for internally generated atoms.
  static bool is_reserved_name(std::string_view name) { return !name.empty() && name.front() == '_'; }

  bool operator==(const AtomUniverse& other) const { return names_ == other.names_; }

private:
  std::vector<std::string> names_;
};

} // namespace fragmerge
