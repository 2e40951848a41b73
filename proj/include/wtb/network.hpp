#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "wtb/edge_set.hpp"
#include "wtb/error.hpp"

namespace wtb {

struct Arc {
  NodeId tail;
  NodeId head;
  friend bool operator==(const Arc&, const Arc&) = default;
};

namespace detail {

// Adjacency shared by the base and the transformed networks. `incident[v]`
// lists every edge touching v (either direction) in ascending edge id.
struct Adjacency {
  std::vector<std::vector<EdgeId>> out;
  std::vector<std::vector<EdgeId>> in;
  std::vector<std::vector<EdgeId>> incident;

  Adjacency() = default;
  Adjacency(std::size_t node_count, std::span<const Arc> arcs)
      : out(node_count), in(node_count), incident(node_count) {
    for (EdgeId e = 0; e < arcs.size(); ++e) {
      out[arcs[e].tail].push_back(e);
      in[arcs[e].head].push_back(e);
      incident[arcs[e].tail].push_back(e);
      incident[arcs[e].head].push_back(e);
    }
  }
};

}  // namespace detail

/// Finite directed acyclic multigraph with a single source. Immutable once
/// built; every instance has passed validation.
class Network {
 public:
  static Network build(std::size_t node_count, std::vector<Arc> edges, NodeId source,
                       std::optional<std::vector<NodeId>> sinks = std::nullopt) {
    auto node_ok = [&](NodeId v) { return v < node_count; };
    if (!node_ok(source)) {
      throw Error(Errc::DanglingEndpoint, "source " + std::to_string(source) + " out of range");
    }
    for (EdgeId e = 0; e < edges.size(); ++e) {
      if (!node_ok(edges[e].tail) || !node_ok(edges[e].head)) {
        throw Error(Errc::DanglingEndpoint, "edge " + std::to_string(e) + " has an endpoint out of range");
      }
    }
    if (sinks) {
      for (NodeId t : *sinks) {
        if (!node_ok(t)) throw Error(Errc::DanglingEndpoint, "sink " + std::to_string(t) + " out of range");
      }
    }
    for (EdgeId e = 0; e < edges.size(); ++e) {
      if (edges[e].head == source) {
        throw Error(Errc::SourceHasIncomingEdges, "edge " + std::to_string(e) + " enters the source");
      }
    }

    Network net;
    net.node_count_ = node_count;
    net.arcs_ = std::move(edges);
    net.source_ = source;
    net.sinks_ = std::move(sinks);
    net.adj_ = detail::Adjacency(node_count, net.arcs_);

    // Kahn's algorithm, lowest ready node first.
    std::vector<std::size_t> indegree(node_count);
    for (const Arc& a : net.arcs_) ++indegree[a.head];
    std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
    for (NodeId v = 0; v < node_count; ++v) {
      if (indegree[v] == 0) ready.push(v);
    }
    while (!ready.empty()) {
      NodeId v = ready.top();
      ready.pop();
      net.topo_.push_back(v);
      for (EdgeId e : net.adj_.out[v]) {
        if (--indegree[net.arcs_[e].head] == 0) ready.push(net.arcs_[e].head);
      }
    }
    if (net.topo_.size() != node_count) throw Error(Errc::CyclicGraph, "network contains a directed cycle");
    return net;
  }

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return arcs_.size(); }
  NodeId source() const { return source_; }
  const std::optional<std::vector<NodeId>>& sinks() const { return sinks_; }

  const Arc& arc(EdgeId e) const { return arcs_[e]; }
  NodeId tail(EdgeId e) const { return arcs_[e].tail; }
  NodeId head(EdgeId e) const { return arcs_[e].head; }
  std::span<const Arc> arcs() const { return arcs_; }

  std::span<const EdgeId> out_edges(NodeId v) const { return adj_.out[v]; }
  std::span<const EdgeId> in_edges(NodeId v) const { return adj_.in[v]; }

  std::span<const NodeId> topological_order() const { return topo_; }

  void check_edge(EdgeId e) const {
    if (e >= arcs_.size()) throw Error(Errc::UnknownEdge, "edge id " + std::to_string(e) + " out of range");
  }
  void check_edges(const EdgeSet& set) const {
    for (EdgeId e : set) check_edge(e);
  }

  EdgeSet all_edges() const {
    std::vector<EdgeId> ids(arcs_.size());
    for (EdgeId e = 0; e < ids.size(); ++e) ids[e] = e;
    return EdgeSet(std::move(ids));
  }

  friend bool operator==(const Network& a, const Network& b) {
    return a.node_count_ == b.node_count_ && a.arcs_ == b.arcs_ && a.source_ == b.source_ &&
           a.sinks_ == b.sinks_;
  }

 private:
  Network() = default;

  std::size_t node_count_ = 0;
  std::vector<Arc> arcs_;
  NodeId source_ = 0;
  std::optional<std::vector<NodeId>> sinks_;
  detail::Adjacency adj_;
  std::vector<NodeId> topo_;
};

inline Network build_network(std::size_t node_count, std::vector<Arc> edges, NodeId source,
                             std::optional<std::vector<NodeId>> sinks = std::nullopt) {
  return Network::build(node_count, std::move(edges), source, std::move(sinks));
}

inline std::vector<NodeId> topological_order(const Network& net) {
  auto order = net.topological_order();
  return {order.begin(), order.end()};
}

/// Nodes reachable from the source once the edges in `deleted` are removed.
inline std::vector<char> reachable_nodes(const Network& net, const EdgeSet& deleted) {
  std::vector<char> seen(net.node_count(), 0);
  std::queue<NodeId> queue;
  seen[net.source()] = 1;
  queue.push(net.source());
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop();
    for (EdgeId e : net.out_edges(v)) {
      NodeId w = net.head(e);
      if (!seen[w] && !deleted.contains(e)) {
        seen[w] = 1;
        queue.push(w);
      }
    }
  }
  return seen;
}

/// Edges reachable from the source once `deleted` is removed: an edge is
/// reachable when it survives and its tail is reachable.
inline EdgeSet reachable_edges(const Network& net, const EdgeSet& deleted) {
  auto seen = reachable_nodes(net, deleted);
  std::vector<EdgeId> ids;
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    if (seen[net.tail(e)] && !deleted.contains(e)) ids.push_back(e);
  }
  return EdgeSet(std::move(ids));
}

/// Upstream-to-downstream order on edges: d <= e iff d == e or a directed
/// path leads from head(d) to tail(e).
inline bool edge_precedes(const Network& net, EdgeId d, EdgeId e) {
  net.check_edge(d);
  net.check_edge(e);
  if (d == e) return true;
  const NodeId goal = net.tail(e);
  std::vector<char> seen(net.node_count(), 0);
  std::vector<NodeId> stack{net.head(d)};
  seen[net.head(d)] = 1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    if (v == goal) return true;
    for (EdgeId out : net.out_edges(v)) {
      NodeId w = net.head(out);
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return false;
}

using Capacity = std::int64_t;

/// The base network with every target edge e split into e1 = (tail(e), t_e)
/// and e2 = (t_e, head(e)), plus a super-sink fed by "infinite" super-edges.
/// Base node ids are preserved; split nodes and the super-sink are appended.
///
/// The base network must outlive the transformed one.
class TransformedNetwork {
 public:
  static TransformedNetwork split_and_sink(const Network& net, const EdgeSet& targets) {
    if (targets.empty()) throw Error(Errc::EmptyTargetSet, "target edge set is empty");
    net.check_edges(targets);

    TransformedNetwork t(net);
    std::size_t next_node = net.node_count();
    std::vector<NodeId> split_nodes;
    for (EdgeId e = 0; e < net.edge_count(); ++e) {
      const Arc& a = net.arc(e);
      if (targets.contains(e)) {
        NodeId te = static_cast<NodeId>(next_node++);
        split_nodes.push_back(te);
        t.add_edge({a.tail, te}, 1, e);
        t.add_edge({te, a.head}, 1, e);
      } else {
        t.add_edge(a, 1, e);
      }
    }
    t.split_count_ = split_nodes.size();
    t.super_sink_ = static_cast<NodeId>(next_node++);
    for (NodeId te : split_nodes) t.add_edge({te, t.super_sink_}, t.inf_capacity(), kNoEdge);
    t.finish(next_node);
    return t;
  }

  /// Super-sink construction for a node set: one super-edge t -> t_T per target.
  static TransformedNetwork sink_nodes(const Network& net, std::span<const NodeId> targets) {
    if (targets.empty()) throw Error(Errc::EmptyTargetSet, "target node set is empty");
    TransformedNetwork t(net);
    for (EdgeId e = 0; e < net.edge_count(); ++e) t.add_edge(net.arc(e), 1, e);
    t.super_sink_ = static_cast<NodeId>(net.node_count());
    for (NodeId v : targets) {
      if (v >= net.node_count()) throw Error(Errc::DanglingEndpoint, "target node out of range");
      t.add_edge({v, t.super_sink_}, t.inf_capacity(), kNoEdge);
    }
    t.finish(net.node_count() + 1);
    return t;
  }

  const Network& base() const { return *base_; }
  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return arcs_.size(); }
  std::size_t split_count() const { return split_count_; }
  NodeId source() const { return base_->source(); }
  NodeId super_sink() const { return super_sink_; }

  const Arc& arc(EdgeId e) const { return arcs_[e]; }
  NodeId tail(EdgeId e) const { return arcs_[e].tail; }
  NodeId head(EdgeId e) const { return arcs_[e].head; }
  Capacity capacity(EdgeId e) const { return capacity_[e]; }
  /// Original edge an augmented edge stands for, or kNoEdge for super-edges.
  EdgeId back_map(EdgeId e) const { return back_map_[e]; }
  bool is_synthetic(EdgeId e) const { return back_map_[e] == kNoEdge; }

  std::span<const EdgeId> incident(NodeId v) const { return adj_.incident[v]; }
  std::span<const EdgeId> out_edges(NodeId v) const { return adj_.out[v]; }
  std::span<const EdgeId> in_edges(NodeId v) const { return adj_.in[v]; }

  /// Finite stand-in for infinite capacity: exceeds every cut of the base.
  Capacity inf_capacity() const { return static_cast<Capacity>(base_->edge_count()) + 1; }

 private:
  explicit TransformedNetwork(const Network& net) : base_(&net) {}

  void add_edge(Arc a, Capacity cap, EdgeId original) {
    arcs_.push_back(a);
    capacity_.push_back(cap);
    back_map_.push_back(original);
  }

  void finish(std::size_t node_count) {
    node_count_ = node_count;
    adj_ = detail::Adjacency(node_count, arcs_);
  }

  const Network* base_;
  std::size_t node_count_ = 0;
  std::size_t split_count_ = 0;
  NodeId super_sink_ = 0;
  std::vector<Arc> arcs_;
  std::vector<Capacity> capacity_;
  std::vector<EdgeId> back_map_;
  detail::Adjacency adj_;
};

inline TransformedNetwork split_and_sink(const Network& net, const EdgeSet& targets) {
  return TransformedNetwork::split_and_sink(net, targets);
}

}  // namespace wtb
