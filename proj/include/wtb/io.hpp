#pragma once

// Text formats, instance generators and DOT export.
//
// Network file, one directive per line, '#' starts a comment:
//   node <label>                 optional; if any appear, all nodes must
//   edge <label> <tail> <head>
//   source <label>
//   sink <label>                 optional, repeatable
// Collection file: one wiretap set per line, whitespace-separated edge labels.

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wtb/network.hpp"
#include "wtb/wiretap.hpp"

namespace wtb {

struct LabeledNetwork {
  Network net;
  std::vector<std::string> node_labels;
  std::vector<std::string> edge_labels;

  std::optional<NodeId> find_node(std::string_view label) const {
    for (NodeId v = 0; v < node_labels.size(); ++v) {
      if (node_labels[v] == label) return v;
    }
    return std::nullopt;
  }
  std::optional<EdgeId> find_edge(std::string_view label) const {
    auto it = edge_index_.find(std::string(label));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
  }
  const std::string& node(NodeId v) const { return node_labels[v]; }
  const std::string& edge(EdgeId e) const { return edge_labels[e]; }

  static LabeledNetwork make(Network net, std::vector<std::string> nodes, std::vector<std::string> edges) {
    LabeledNetwork ln{std::move(net), std::move(nodes), std::move(edges), {}};
    for (EdgeId e = 0; e < ln.edge_labels.size(); ++e) ln.edge_index_.emplace(ln.edge_labels[e], e);
    return ln;
  }

  friend bool operator==(const LabeledNetwork& a, const LabeledNetwork& b) {
    return a.net == b.net && a.node_labels == b.node_labels && a.edge_labels == b.edge_labels;
  }

  std::unordered_map<std::string, EdgeId> edge_index_;
};

namespace detail {

inline std::vector<std::string> tokens(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string t; in >> t;) out.push_back(std::move(t));
  return out;
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    f(line_no, line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

// n choose k, saturating at uint64 max.
inline std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  return r > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                        : static_cast<std::uint64_t>(r);
}

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

// Calls f(indices) for every k-subset of [0, n) in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    f(static_cast<const std::vector<std::size_t>&>(pick));
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace detail

inline LabeledNetwork parse_network(std::string_view text) {
  struct PendingEdge {
    std::string label, tail, head;
    std::size_t line;
  };
  std::vector<std::string> declared;
  std::map<std::string, std::size_t> declared_line;
  std::vector<PendingEdge> edges;
  std::map<std::string, std::size_t> edge_line;
  std::optional<std::pair<std::string, std::size_t>> source;
  std::vector<std::pair<std::string, std::size_t>> sinks;

  detail::for_each_line(text, [&](std::size_t no, std::string_view line) {
    auto t = detail::tokens(line);
    if (t.empty()) return;
    auto arity = [&](std::size_t n) {
      if (t.size() != n) {
        throw Error(Errc::ParseError, "line " + std::to_string(no) + ": '" + t[0] + "' expects " +
                                          std::to_string(n - 1) + " argument(s)", no);
      }
    };
    if (t[0] == "node") {
      arity(2);
      if (!declared_line.emplace(t[1], no).second) {
        throw Error(Errc::ParseError, "line " + std::to_string(no) + ": duplicate node '" + t[1] + "'", no);
      }
      declared.push_back(t[1]);
    } else if (t[0] == "edge") {
      arity(4);
      if (!edge_line.emplace(t[1], no).second) {
        throw Error(Errc::ParseError, "line " + std::to_string(no) + ": duplicate edge '" + t[1] + "'", no);
      }
      edges.push_back({t[1], t[2], t[3], no});
    } else if (t[0] == "source") {
      arity(2);
      if (source) throw Error(Errc::ParseError, "line " + std::to_string(no) + ": second source", no);
      source.emplace(t[1], no);
    } else if (t[0] == "sink") {
      arity(2);
      sinks.emplace_back(t[1], no);
    } else {
      throw Error(Errc::ParseError, "line " + std::to_string(no) + ": unknown directive '" + t[0] + "'", no);
    }
  });
  if (!source) throw Error(Errc::ParseError, "no source declared");

  // Without node lines, nodes are created on first mention.
  const bool explicit_nodes = !declared.empty();
  std::vector<std::string> nodes = declared;
  std::map<std::string, NodeId> index;
  for (NodeId v = 0; v < nodes.size(); ++v) index[nodes[v]] = v;
  auto resolve = [&](const std::string& label, std::size_t no) -> NodeId {
    if (auto it = index.find(label); it != index.end()) return it->second;
    if (explicit_nodes) {
      throw Error(Errc::ParseError, "line " + std::to_string(no) + ": undeclared node '" + label + "'", no);
    }
    NodeId v = static_cast<NodeId>(nodes.size());
    nodes.push_back(label);
    index[label] = v;
    return v;
  };

  NodeId s = resolve(source->first, source->second);
  std::vector<Arc> arcs;
  std::vector<std::string> edge_labels;
  for (const auto& e : edges) {
    Arc a{resolve(e.tail, e.line), resolve(e.head, e.line)};
    if (a.head == s) {
      throw Error(Errc::SourceHasIncomingEdges,
                  "line " + std::to_string(e.line) + ": edge '" + e.label + "' enters the source", e.line);
    }
    arcs.push_back(a);
    edge_labels.push_back(e.label);
  }
  std::optional<std::vector<NodeId>> sink_ids;
  if (!sinks.empty()) {
    sink_ids.emplace();
    for (const auto& [label, no] : sinks) sink_ids->push_back(resolve(label, no));
  }
  Network net = build_network(nodes.size(), std::move(arcs), s, std::move(sink_ids));
  return LabeledNetwork::make(std::move(net), std::move(nodes), std::move(edge_labels));
}

inline std::string serialize_network(const LabeledNetwork& ln) {
  std::string out;
  for (const auto& label : ln.node_labels) out += "node " + label + "\n";
  out += "source " + ln.node(ln.net.source()) + "\n";
  if (ln.net.sinks()) {
    for (NodeId t : *ln.net.sinks()) out += "sink " + ln.node(t) + "\n";
  }
  for (EdgeId e = 0; e < ln.net.edge_count(); ++e) {
    out += "edge " + ln.edge(e) + " " + ln.node(ln.net.tail(e)) + " " + ln.node(ln.net.head(e)) + "\n";
  }
  return out;
}

/// Raw edge sets, one per nonblank line, in file order.
inline std::vector<EdgeSet> parse_edge_sets(std::string_view text, const LabeledNetwork& ln) {
  std::vector<EdgeSet> out;
  detail::for_each_line(text, [&](std::size_t no, std::string_view line) {
    auto t = detail::tokens(line);
    if (t.empty()) return;
    std::vector<EdgeId> ids;
    for (const auto& label : t) {
      auto e = ln.find_edge(label);
      if (!e) throw Error(Errc::UnknownEdgeLabel, "line " + std::to_string(no) + ": unknown edge '" + label + "'", no);
      ids.push_back(*e);
    }
    out.emplace_back(std::move(ids));
  });
  return out;
}

inline Preprocessed parse_collection(std::string_view text, const LabeledNetwork& ln) {
  auto raw = parse_edge_sets(text, ln);
  return preprocess(ln.net, raw);
}

/// Comma-separated edge labels, as taken by --target.
inline EdgeSet parse_edge_list(std::string_view text, const LabeledNetwork& ln) {
  std::vector<EdgeId> ids;
  std::string s(text);
  for (char& c : s) {
    if (c == ',') c = ' ';
  }
  for (const auto& label : detail::tokens(s)) {
    auto e = ln.find_edge(label);
    if (!e) throw Error(Errc::UnknownEdgeLabel, "unknown edge '" + label + "'");
    ids.push_back(*e);
  }
  return EdgeSet(std::move(ids));
}

inline std::string serialize_edge_sets(std::span<const EdgeSet> sets, const LabeledNetwork& ln) {
  std::string out;
  for (const auto& set : sets) {
    for (std::size_t i = 0; i < set.size(); ++i) out += (i ? " " : "") + ln.edge(set[i]);
    out += "\n";
  }
  return out;
}

inline std::string serialize_collection(const WiretapCollection& coll, const LabeledNetwork& ln) {
  std::vector<EdgeSet> sets;
  for (const auto& w : coll.sets) sets.push_back(w.edges);
  return serialize_edge_sets(sets, ln);
}

/// "{e1,e2,e3}"
inline std::string format_edges(const EdgeSet& set, const LabeledNetwork& ln) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) out += (i ? "," : "") + ln.edge(set[i]);
  return out + "}";
}

inline constexpr std::uint64_t kDefaultCollectionCap = 1'000'000;

struct GeneratedInstance {
  LabeledNetwork network;
  std::vector<EdgeSet> sets;
};

/// Sum over i = 1..r of C(N, i) * C(N-1, k-1)^i, saturating.
inline std::uint64_t combination_collection_size(std::uint64_t n, std::uint64_t k, std::uint64_t r) {
  const std::uint64_t fanout = detail::binom(n - 1, k - 1);
  std::uint64_t total = 0, power = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    power = detail::sat_mul(power, fanout);
    total = detail::sat_add(total, detail::sat_mul(detail::binom(n, i), power));
  }
  return total;
}

/// Combination network G_{N,k}: s -> m1..mN, and one sink per k-subset of the
/// middle layer. The collection holds every set of at most r lower-layer edges
/// leaving distinct middle nodes.
inline GeneratedInstance gen_combination(std::size_t n, std::size_t k, std::size_t r,
                                         std::uint64_t cap = kDefaultCollectionCap) {
  if (n < 1 || k < 1 || k > n || r < 1 || r > n) {
    throw Error(Errc::ParameterOutOfRange, "need 1 <= k <= N and 1 <= r <= N");
  }
  const std::uint64_t sink_count = detail::binom(n, k);
  const std::uint64_t lower_count = detail::sat_mul(sink_count, k);
  const std::uint64_t set_count = combination_collection_size(n, k, r);
  if (lower_count > cap || set_count > cap) {
    throw Error(Errc::CollectionTooLarge, "G(" + std::to_string(n) + "," + std::to_string(k) + ") with r=" +
                                              std::to_string(r) + " exceeds the cap of " + std::to_string(cap));
  }

  std::vector<std::string> nodes{"s"};
  for (std::size_t i = 1; i <= n; ++i) nodes.push_back("m" + std::to_string(i));
  std::vector<Arc> arcs;
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) {
    arcs.push_back({0, static_cast<NodeId>(i)});
    labels.push_back("u" + std::to_string(i));
  }
  std::vector<std::vector<EdgeId>> lower_of(n);
  std::vector<NodeId> sinks;
  std::size_t j = 0;
  detail::for_each_subset(n, k, [&](const std::vector<std::size_t>& subset) {
    ++j;
    NodeId t = static_cast<NodeId>(nodes.size());
    nodes.push_back("t" + std::to_string(j));
    sinks.push_back(t);
    for (std::size_t m : subset) {
      lower_of[m].push_back(static_cast<EdgeId>(arcs.size()));
      arcs.push_back({static_cast<NodeId>(m + 1), t});
      labels.push_back("l" + std::to_string(m + 1) + "_" + std::to_string(j));
    }
  });

  std::vector<EdgeSet> sets;
  for (std::size_t size = 1; size <= r; ++size) {
    detail::for_each_subset(n, size, [&](const std::vector<std::size_t>& middles) {
      std::vector<std::size_t> choice(size, 0);
      while (true) {
        std::vector<EdgeId> ids;
        for (std::size_t i = 0; i < size; ++i) ids.push_back(lower_of[middles[i]][choice[i]]);
        sets.emplace_back(std::move(ids));
        std::size_t i = size;
        while (i > 0 && ++choice[i - 1] == lower_of[middles[i - 1]].size()) choice[--i] = 0;
        if (i == 0) break;
      }
    });
  }

  Network net = build_network(nodes.size(), std::move(arcs), 0, std::move(sinks));
  return {LabeledNetwork::make(std::move(net), std::move(nodes), std::move(labels)), std::move(sets)};
}

/// Every edge subset of size 1..r, by size then lexicographically.
inline std::vector<EdgeSet> gen_r_wiretap(const Network& net, std::size_t r,
                                          std::uint64_t cap = kDefaultCollectionCap) {
  if (r < 1) throw Error(Errc::ParameterOutOfRange, "r must be at least 1");
  const std::size_t m = net.edge_count();
  std::uint64_t total = 0;
  for (std::size_t i = 1; i <= std::min(r, m); ++i) total = detail::sat_add(total, detail::binom(m, i));
  if (total > cap) {
    throw Error(Errc::CollectionTooLarge, std::to_string(total) + " sets exceed the cap of " + std::to_string(cap));
  }
  std::vector<EdgeSet> sets;
  for (std::size_t i = 1; i <= std::min(r, m); ++i) {
    detail::for_each_subset(m, i, [&](const std::vector<std::size_t>& pick) {
      sets.emplace_back(std::vector<EdgeId>(pick.begin(), pick.end()));
    });
  }
  return sets;
}

/// Classes as nodes (bottom to top), one arrow per covering pair pointing at
/// the dominating class; maximal classes get a double border.
inline std::string export_hasse_dot(const HasseDiagram& d, const LabeledNetwork& ln) {
  std::string out = "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  std::vector<char> top(d.classes.size(), 0);
  for (std::size_t i : d.maximal) top[i] = 1;
  for (std::size_t i = 0; i < d.classes.size(); ++i) {
    const auto& cl = d.classes[i];
    out += "  c" + std::to_string(i + 1) + " [label=\"Cl" + std::to_string(i + 1) + " (" +
           std::to_string(cl.members.size()) + ")\\n" + format_edges(cl.primary_cut.edges, ln) + "\"";
    if (top[i]) out += ", peripheries=2";
    out += "];\n";
  }
  for (auto [lo, hi] : d.covers) out += "  c" + std::to_string(lo + 1) + " -> c" + std::to_string(hi + 1) + ";\n";
  return out + "}\n";
}

}  // namespace wtb
