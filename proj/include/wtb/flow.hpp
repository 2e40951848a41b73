#pragma once

#include <algorithm>
#include <cassert>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <vector>

#include "wtb/network.hpp"

namespace wtb {

/// Integer flow on a transformed network toward `target`.
class Flow {
 public:
  Flow(std::vector<Capacity> values, Capacity value, NodeId target)
      : values_(std::move(values)), value_(value), target_(target) {}

  /// Zero flow of the right shape.
  static Flow zero(const TransformedNetwork& tnet, NodeId target) {
    return Flow(std::vector<Capacity>(tnet.edge_count(), 0), 0, target);
  }

  /// Wraps externally supplied per-edge values; throws MalformedFlow unless
  /// they form a feasible flow from the source to `target`.
  static Flow from_values(const TransformedNetwork& tnet, NodeId target, std::vector<Capacity> values);

  Capacity value() const { return value_; }
  NodeId target() const { return target_; }
  Capacity operator[](EdgeId e) const { return values_[e]; }
  std::span<const Capacity> values() const { return values_; }

  Capacity& at(EdgeId e) { return values_[e]; }
  void set_value(Capacity v) { value_ = v; }

 private:
  std::vector<Capacity> values_;
  Capacity value_;
  NodeId target_;
};

/// Capacity bounds, conservation away from source/target, and a value that
/// matches both the source outflow and the target inflow.
inline bool is_feasible(const TransformedNetwork& tnet, const Flow& flow) {
  if (flow.values().size() != tnet.edge_count() || flow.target() >= tnet.node_count()) return false;
  std::vector<Capacity> excess(tnet.node_count(), 0);
  for (EdgeId e = 0; e < tnet.edge_count(); ++e) {
    Capacity f = flow[e];
    if (f < 0 || f > tnet.capacity(e)) return false;
    excess[tnet.tail(e)] -= f;
    excess[tnet.head(e)] += f;
  }
  for (NodeId v = 0; v < tnet.node_count(); ++v) {
    if (v == tnet.source()) {
      if (-excess[v] != flow.value()) return false;
    } else if (v == flow.target()) {
      if (excess[v] != flow.value()) return false;
    } else if (excess[v] != 0) {
      return false;
    }
  }
  return true;
}

inline Flow Flow::from_values(const TransformedNetwork& tnet, NodeId target, std::vector<Capacity> values) {
  Capacity out = 0;
  if (values.size() == tnet.edge_count()) {
    for (EdgeId e : tnet.out_edges(tnet.source())) out += values[e];
  }
  Flow flow(std::move(values), out, target);
  if (!is_feasible(tnet, flow)) throw Error(Errc::MalformedFlow, "values do not form a feasible flow");
  return flow;
}

namespace detail {

// Residual step along `e` out of `v`: forward when v is the tail and e has
// slack, backward when v is the head and e carries flow. Returns the node
// reached or nullopt.
inline std::optional<NodeId> residual_step(const TransformedNetwork& tnet, const Flow& flow, NodeId v,
                                           EdgeId e) {
  if (tnet.tail(e) == v && flow[e] < tnet.capacity(e)) return tnet.head(e);
  if (tnet.head(e) == v && flow[e] > 0) return tnet.tail(e);
  return std::nullopt;
}

}  // namespace detail

/// Maximum flow by shortest augmenting paths. The breadth-first search scans
/// each node's incident edges in ascending id, so the result is deterministic.
inline Flow max_flow(const TransformedNetwork& tnet, NodeId target) {
  if (target >= tnet.node_count() || target == tnet.source()) {
    throw Error(Errc::ParameterOutOfRange, "flow target must be a non-source node");
  }
  Flow flow = Flow::zero(tnet, target);
  const NodeId s = tnet.source();
  std::vector<EdgeId> parent(tnet.node_count());
  std::vector<char> seen(tnet.node_count());

  while (true) {
    std::fill(seen.begin(), seen.end(), 0);
    std::queue<NodeId> queue;
    queue.push(s);
    seen[s] = 1;
    while (!queue.empty() && !seen[target]) {
      NodeId v = queue.front();
      queue.pop();
      for (EdgeId e : tnet.incident(v)) {
        auto w = detail::residual_step(tnet, flow, v, e);
        if (w && !seen[*w]) {
          seen[*w] = 1;
          parent[*w] = e;
          queue.push(*w);
        }
      }
    }
    if (!seen[target]) break;

    Capacity bottleneck = std::numeric_limits<Capacity>::max();
    for (NodeId v = target; v != s;) {
      EdgeId e = parent[v];
      bool forward = tnet.head(e) == v;
      bottleneck = std::min(bottleneck, forward ? tnet.capacity(e) - flow[e] : flow[e]);
      v = forward ? tnet.tail(e) : tnet.head(e);
    }
    for (NodeId v = target; v != s;) {
      EdgeId e = parent[v];
      bool forward = tnet.head(e) == v;
      flow.at(e) += forward ? bottleneck : -bottleneck;
      v = forward ? tnet.tail(e) : tnet.head(e);
    }
    flow.set_value(flow.value() + bottleneck);
    assert(is_feasible(tnet, flow));
  }
  return flow;
}

/// Edge-disjoint source-to-target paths, as augmented edge id sequences.
struct PathSet {
  std::vector<std::vector<EdgeId>> paths;
};

/// Splits a flow into v(f) unit paths, always following the lowest-id edge
/// that still carries flow.
inline PathSet decompose_paths(const TransformedNetwork& tnet, const Flow& flow) {
  if (!is_feasible(tnet, flow)) throw Error(Errc::MalformedFlow, "flow violates capacity or conservation");
  std::vector<Capacity> remaining(flow.values().begin(), flow.values().end());
  PathSet out;
  for (Capacity i = 0; i < flow.value(); ++i) {
    std::vector<EdgeId> path;
    NodeId v = tnet.source();
    while (v != flow.target()) {
      auto outs = tnet.out_edges(v);
      auto it = std::find_if(outs.begin(), outs.end(), [&](EdgeId e) { return remaining[e] > 0; });
      if (it == outs.end()) throw Error(Errc::MalformedFlow, "flow path ends before the target");
      --remaining[*it];
      path.push_back(*it);
      v = tnet.head(*it);
    }
    out.paths.push_back(std::move(path));
  }
  if (std::any_of(remaining.begin(), remaining.end(), [](Capacity r) { return r != 0; })) {
    throw Error(Errc::MalformedFlow, "flow carries circulation off the decomposed paths");
  }
  return out;
}

/// Rewrites augmented paths over base edge ids: e1/e2 halves collapse to
/// their original edge and super-edges are dropped.
inline std::vector<std::vector<EdgeId>> project_paths(const TransformedNetwork& tnet, const PathSet& set) {
  std::vector<std::vector<EdgeId>> out;
  out.reserve(set.paths.size());
  for (const auto& path : set.paths) {
    std::vector<EdgeId> base;
    for (EdgeId e : path) {
      EdgeId original = tnet.back_map(e);
      if (original == kNoEdge) continue;
      if (base.empty() || base.back() != original) base.push_back(original);
    }
    out.push_back(std::move(base));
  }
  return out;
}

/// Nodes reachable from the source along f-unsaturated paths, ascending.
/// Throws NotMaximumFlow if the target is reachable.
inline std::vector<NodeId> residual_source_set(const TransformedNetwork& tnet, const Flow& flow) {
  std::vector<char> seen(tnet.node_count(), 0);
  std::queue<NodeId> queue;
  queue.push(tnet.source());
  seen[tnet.source()] = 1;
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop();
    for (EdgeId e : tnet.incident(v)) {
      auto w = detail::residual_step(tnet, flow, v, e);
      if (w && !seen[*w]) {
        seen[*w] = 1;
        queue.push(*w);
      }
    }
  }
  if (seen[flow.target()]) throw Error(Errc::NotMaximumFlow, "target is reachable in the residual network");
  std::vector<NodeId> out;
  for (NodeId v = 0; v < tnet.node_count(); ++v) {
    if (seen[v]) out.push_back(v);
  }
  return out;
}

}  // namespace wtb
