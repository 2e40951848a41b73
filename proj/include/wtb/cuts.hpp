#pragma once

#include <algorithm>
#include <vector>

#include "wtb/flow.hpp"
#include "wtb/network.hpp"

namespace wtb {

/// A cut over base-network edges, tagged with the edge set it was computed
/// against. `capacity` equals `edges.size()` (unit capacities).
struct Cut {
  EdgeSet edges;
  std::size_t capacity = 0;
  EdgeSet target;

  Cut() = default;
  Cut(EdgeSet edges_, EdgeSet target_)
      : edges(std::move(edges_)), capacity(edges.size()), target(std::move(target_)) {}

  friend bool operator==(const Cut&, const Cut&) = default;
};

/// mincut(s, A): value of a maximum flow on the split network.
inline std::size_t mincut_capacity(const Network& net, const EdgeSet& targets) {
  auto tnet = split_and_sink(net, targets);
  return static_cast<std::size_t>(max_flow(tnet, tnet.super_sink()).value());
}

/// True iff no edge of `targets` stays reachable from the source once
/// `blockers` is deleted. A set always separates itself.
inline bool separates(const Network& net, const EdgeSet& blockers, const EdgeSet& targets) {
  auto seen = reachable_nodes(net, blockers);
  return std::none_of(targets.begin(), targets.end(),
                      [&](EdgeId e) { return seen[net.tail(e)] && !blockers.contains(e); });
}

/// The unique minimum cut that separates every other minimum cut of
/// `targets` from the source: the edges leaving the residual source set of a
/// maximum flow, mapped back through the split edges.
inline Cut primary_min_cut(const Network& net, const EdgeSet& targets) {
  auto tnet = split_and_sink(net, targets);
  auto flow = max_flow(tnet, tnet.super_sink());
  if (flow.value() == 0) throw Error(Errc::UnreachableTarget, "no target edge is reachable from the source");
  auto source_side = residual_source_set(tnet, flow);
  std::vector<char> in_s(tnet.node_count(), 0);
  for (NodeId v : source_side) in_s[v] = 1;

  std::vector<EdgeId> edges;
  for (EdgeId e = 0; e < tnet.edge_count(); ++e) {
    if (in_s[tnet.tail(e)] && !in_s[tnet.head(e)]) {
      assert(!tnet.is_synthetic(e));
      edges.push_back(tnet.back_map(e));
    }
  }
  Cut cut(EdgeSet(std::move(edges)), targets);
  assert(static_cast<Capacity>(cut.capacity) == flow.value());
  return cut;
}

/// mincut(s, A) edge-disjoint paths from the source to `targets`, over base
/// edge ids. Each path ends with an edge of `targets`.
inline std::vector<std::vector<EdgeId>> disjoint_paths(const Network& net, const EdgeSet& targets) {
  auto tnet = split_and_sink(net, targets);
  return project_paths(tnet, decompose_paths(tnet, max_flow(tnet, tnet.super_sink())));
}

/// C1 <= C2 iff C1 separates C2 from the source. Both must be minimum cuts
/// of the same target.
inline bool cut_leq(const Network& net, const Cut& lhs, const Cut& rhs) {
  if (lhs.target != rhs.target) throw Error(Errc::TargetMismatch, "cuts were computed for different targets");
  return separates(net, lhs.edges, rhs.edges);
}

/// Per-path earlier edge of two minimum cuts of the same target. The result
/// is a minimum cut below both inputs.
inline Cut minord_merge(const Network& net, const Cut& lhs, const Cut& rhs) {
  if (lhs.target != rhs.target) throw Error(Errc::TargetMismatch, "cuts were computed for different targets");
  auto paths = disjoint_paths(net, lhs.target);
  if (lhs.edges.size() != paths.size() || rhs.edges.size() != paths.size()) {
    throw Error(Errc::ParameterOutOfRange, "minord_merge needs two minimum cuts");
  }
  std::vector<EdgeId> merged;
  for (const auto& path : paths) {
    auto on_path = [&](const EdgeSet& cut) {
      auto it = std::find_if(path.begin(), path.end(), [&](EdgeId e) { return cut.contains(e); });
      if (it == path.end()) throw Error(Errc::ParameterOutOfRange, "cut misses an edge-disjoint path");
      return *it;
    };
    EdgeId a = on_path(lhs.edges);
    EdgeId b = on_path(rhs.edges);
    merged.push_back(edge_precedes(net, a, b) ? a : b);
  }
  return Cut(EdgeSet(std::move(merged)), lhs.target);
}

}  // namespace wtb
