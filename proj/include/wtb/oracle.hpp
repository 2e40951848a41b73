#pragma once

// Exponential-time reference implementations that follow the definitions
// literally. They exist to cross-check the polynomial algorithms on small
// instances and share no code path with them beyond `separates`.

#include <cstdlib>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "wtb/cuts.hpp"
#include "wtb/network.hpp"

namespace wtb::oracle {

inline constexpr std::size_t kDefaultMaxEdges = 18;

struct Limits {
  /// Upper bound on the per-target edge universe that gets enumerated.
  std::size_t max_edges = kDefaultMaxEdges;

  /// Honors WTB_MAX_ORACLE_EDGES when it holds a positive integer.
  static Limits from_env() {
    Limits limits;
    if (const char* raw = std::getenv("WTB_MAX_ORACLE_EDGES")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(raw, &end, 10);
      if (end != raw && *end == '\0' && v > 0) limits.max_edges = static_cast<std::size_t>(v);
    }
    return limits;
  }
};

struct MinCutFamily {
  EdgeSet target;
  /// Every minimum cut, in size-then-lexicographic enumeration order.
  std::vector<Cut> cuts;
  std::size_t capacity = 0;
};

/// Edges lying on some path from the source to an edge of `targets`. Any
/// inclusion-minimal separating set is drawn from these.
inline EdgeSet relevant_edges(const Network& net, const EdgeSet& targets) {
  auto from_source = reachable_nodes(net, EdgeSet{});
  std::vector<char> reaches(net.node_count(), 0);
  std::vector<NodeId> stack;
  for (EdgeId a : targets) {
    if (!reaches[net.tail(a)]) {
      reaches[net.tail(a)] = 1;
      stack.push_back(net.tail(a));
    }
  }
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (EdgeId e : net.in_edges(v)) {
      if (!reaches[net.tail(e)]) {
        reaches[net.tail(e)] = 1;
        stack.push_back(net.tail(e));
      }
    }
  }
  std::vector<EdgeId> ids;
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    if (from_source[net.tail(e)] && (targets.contains(e) || reaches[net.head(e)])) ids.push_back(e);
  }
  return EdgeSet(std::move(ids));
}

/// All minimum cuts between the source and `targets`, found by testing every
/// subset of the relevant edges in order of size until one size admits a
/// separator.
inline MinCutFamily enumerate_min_cuts(const Network& net, const EdgeSet& targets,
                                       const Limits& limits = Limits::from_env()) {
  if (targets.empty()) throw Error(Errc::EmptyTargetSet, "target edge set is empty");
  net.check_edges(targets);
  const EdgeSet universe = relevant_edges(net, targets);
  if (universe.size() > limits.max_edges) {
    throw Error(Errc::InstanceTooLarge, std::to_string(universe.size()) + " relevant edges exceed the oracle limit of " +
                                            std::to_string(limits.max_edges));
  }

  MinCutFamily family;
  family.target = targets;
  const std::size_t u = universe.size();
  for (std::size_t k = 0; k <= u; ++k) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      std::vector<EdgeId> ids;
      ids.reserve(k);
      for (std::size_t i : pick) ids.push_back(universe[i]);
      EdgeSet candidate(std::move(ids));
      if (separates(net, candidate, targets)) family.cuts.emplace_back(std::move(candidate), targets);

      // next k-combination of [0, u)
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == u - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!family.cuts.empty()) {
      family.capacity = k;
      break;
    }
  }
  return family;
}

/// The member of the family that separates every member; throws
/// NoPrimaryFound unless exactly one exists.
inline Cut primary_of(const Network& net, const MinCutFamily& family) {
  if (family.capacity == 0) throw Error(Errc::UnreachableTarget, "no target edge is reachable from the source");
  const Cut* found = nullptr;
  std::size_t count = 0;
  for (const Cut& candidate : family.cuts) {
    bool below_all = true;
    for (const Cut& other : family.cuts) {
      if (!separates(net, candidate.edges, other.edges)) {
        below_all = false;
        break;
      }
    }
    if (below_all) {
      found = &candidate;
      ++count;
    }
  }
  if (count != 1) throw Error(Errc::NoPrimaryFound, std::to_string(count) + " candidates separate every minimum cut");
  return *found;
}

inline Cut oracle_primary_min_cut(const Network& net, const EdgeSet& targets,
                                  const Limits& limits = Limits::from_env()) {
  return primary_of(net, enumerate_min_cuts(net, targets, limits));
}

/// Common minimum cut exists.
inline bool oracle_equivalent(const MinCutFamily& a, const MinCutFamily& b) {
  if (a.capacity != b.capacity) return false;
  for (const Cut& x : a.cuts) {
    for (const Cut& y : b.cuts) {
      if (x.edges == y.edges) return true;
    }
  }
  return false;
}

/// lower < upper: smaller minimum cut, and some minimum cut of `upper`
/// separates `lower` from the source.
inline bool oracle_dominates(const Network& net, const MinCutFamily& lower, const MinCutFamily& upper) {
  if (lower.capacity >= upper.capacity) return false;
  for (const Cut& c : upper.cuts) {
    if (separates(net, c.edges, lower.target)) return true;
  }
  return false;
}

struct Bounds {
  std::vector<MinCutFamily> families;
  /// Classes as ascending member index lists, ordered by first member.
  std::vector<std::vector<std::size_t>> classes;
  /// below[i][j] != 0 iff class i is dominated by class j.
  std::vector<std::vector<char>> below;
  std::vector<std::size_t> maximal;
  /// Primary minimum cuts of the maximal classes, sorted by edge list.
  std::vector<Cut> maximal_primary_cuts;

  std::size_t n_classes() const { return classes.size(); }
  std::size_t n_max() const { return maximal.size(); }
};

/// N, N_max and the full class order straight from the definitions: sets are
/// equivalent when their minimum-cut families intersect, and one class is
/// dominated by another when a common minimum cut of the latter separates
/// every member of the former.
inline Bounds oracle_bounds(const Network& net, std::span<const EdgeSet> sets,
                            const Limits& limits = Limits::from_env()) {
  Bounds out;
  const std::size_t n = sets.size();
  for (const EdgeSet& s : sets) out.families.push_back(enumerate_min_cuts(net, s, limits));

  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  std::map<EdgeSet, std::size_t> owner;
  for (std::size_t i = 0; i < n; ++i) {
    for (const Cut& c : out.families[i].cuts) {
      auto [it, fresh] = owner.try_emplace(c.edges, i);
      if (!fresh) {
        std::size_t a = find(i), b = find(it->second);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = slot.try_emplace(find(i), out.classes.size());
    if (fresh) out.classes.emplace_back();
    out.classes[it->second].push_back(i);
  }

  const std::size_t m = out.classes.size();
  std::vector<std::set<EdgeSet>> common(m);
  for (std::size_t c = 0; c < m; ++c) {
    const auto& members = out.classes[c];
    for (const Cut& cut : out.families[members.front()].cuts) common[c].insert(cut.edges);
    for (std::size_t k = 1; k < members.size(); ++k) {
      std::set<EdgeSet> keep;
      for (const Cut& cut : out.families[members[k]].cuts) {
        if (common[c].count(cut.edges)) keep.insert(cut.edges);
      }
      common[c] = std::move(keep);
    }
  }

  out.below.assign(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      for (const EdgeSet& cut : common[j]) {
        bool all = true;
        for (std::size_t member : out.classes[i]) {
          if (!separates(net, cut, sets[member])) {
            all = false;
            break;
          }
        }
        if (all) {
          out.below[i][j] = 1;
          break;
        }
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < m; ++j) dominated = dominated || out.below[i][j];
    if (!dominated) {
      out.maximal.push_back(i);
      out.maximal_primary_cuts.push_back(primary_of(net, out.families[out.classes[i].front()]));
    }
  }
  std::sort(out.maximal_primary_cuts.begin(), out.maximal_primary_cuts.end(),
            [](const Cut& a, const Cut& b) { return a.edges < b.edges; });
  return out;
}

using Path = std::vector<EdgeId>;

/// Every path from the source whose last edge lies in `targets` (it may pass
/// through other target edges on the way).
inline std::vector<Path> enumerate_target_paths(const Network& net, const EdgeSet& targets) {
  std::vector<Path> out;
  Path current;
  auto walk = [&](auto&& self, NodeId v) -> void {
    for (EdgeId e : net.out_edges(v)) {
      current.push_back(e);
      if (targets.contains(e)) out.push_back(current);
      self(self, net.head(e));
      current.pop_back();
    }
  };
  walk(walk, net.source());
  return out;
}

/// Up to `max_systems` distinct sets of mincut(s, A) pairwise edge-disjoint
/// source-to-target paths.
inline std::vector<std::vector<Path>> enumerate_path_systems(const Network& net, const EdgeSet& targets,
                                                             std::size_t max_systems,
                                                             const Limits& limits = Limits::from_env()) {
  const std::size_t n = enumerate_min_cuts(net, targets, limits).capacity;
  const auto paths = enumerate_target_paths(net, targets);
  std::vector<std::vector<Path>> out;
  std::vector<std::size_t> chosen;
  std::vector<char> used(net.edge_count(), 0);

  auto extend = [&](auto&& self, std::size_t from) -> void {
    if (out.size() >= max_systems) return;
    if (chosen.size() == n) {
      std::vector<Path> system;
      for (std::size_t i : chosen) system.push_back(paths[i]);
      out.push_back(std::move(system));
      return;
    }
    for (std::size_t i = from; i < paths.size(); ++i) {
      const Path& p = paths[i];
      if (std::any_of(p.begin(), p.end(), [&](EdgeId e) { return used[e] != 0; })) continue;
      for (EdgeId e : p) used[e] = 1;
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
      for (EdgeId e : p) used[e] = 0;
      if (out.size() >= max_systems) return;
    }
  };
  extend(extend, 0);
  return out;
}

}  // namespace wtb::oracle
