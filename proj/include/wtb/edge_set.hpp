#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace wtb {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

/// Set of edge ids in canonical form: sorted ascending, no duplicates.
/// Equality and ordering are those of the sorted id list.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<EdgeId> ids) : ids_(ids) { normalize(); }
  explicit EdgeSet(std::vector<EdgeId> ids) : ids_(std::move(ids)) { normalize(); }

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  EdgeId operator[](std::size_t i) const { return ids_[i]; }
  std::span<const EdgeId> ids() const { return ids_; }

  bool contains(EdgeId e) const { return std::binary_search(ids_.begin(), ids_.end(), e); }

  bool is_subset_of(const EdgeSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
  }

  friend EdgeSet set_union(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet out;
    out.ids_.reserve(a.size() + b.size());
    std::set_union(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                   std::back_inserter(out.ids_));
    return out;
  }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend auto operator<=>(const EdgeSet& a, const EdgeSet& b) { return a.ids_ <=> b.ids_; }

 private:
  void normalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::vector<EdgeId> ids_;
};

}  // namespace wtb
