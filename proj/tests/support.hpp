#pragma once

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wtb/wtb.hpp"

namespace wtb::testing {

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string data_path(const std::string& name) { return std::string(WTB_DATA_DIR) + "/" + name; }

inline LabeledNetwork fig1() { return parse_network(slurp(data_path("fig1.net"))); }
inline LabeledNetwork fig3() { return parse_network(slurp(data_path("fig3.net"))); }
inline WiretapCollection fig1_sets(const LabeledNetwork& ln) {
  return parse_collection(slurp(data_path("fig1.wsets")), ln).collection;
}

/// Edge set from 1-based labels e1, e2, ... on fig1.
inline EdgeSet E(std::initializer_list<int> labels) {
  std::vector<EdgeId> ids;
  for (int l : labels) ids.push_back(static_cast<EdgeId>(l - 1));
  return EdgeSet(std::move(ids));
}

inline EdgeSet by_label(const LabeledNetwork& ln, std::initializer_list<const char*> labels) {
  std::vector<EdgeId> ids;
  for (const char* l : labels) ids.push_back(*ln.find_edge(l));
  return EdgeSet(std::move(ids));
}

struct Instance {
  std::uint64_t seed = 0;
  Network net;
  /// Preprocessed: distinct and reachable.
  WiretapCollection coll;

  std::vector<EdgeSet> sets() const {
    std::vector<EdgeSet> out;
    for (const auto& w : coll.sets) out.push_back(w.edges);
    return out;
  }
};

/// Random DAG on at most 8 nodes and 14 edges (node 0 is the source, every
/// edge goes from a lower to a higher node, parallel edges allowed), with a
/// collection of at most 20 sets of 1 to 3 edges.
inline Instance random_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  const std::size_t nodes = pick(2, 8);
  const std::size_t edges = pick(1, 14);
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < edges; ++i) {
    NodeId u = static_cast<NodeId>(pick(0, nodes - 2));
    NodeId v = static_cast<NodeId>(pick(u + 1, nodes - 1));
    arcs.push_back({u, v});
  }
  Network net = build_network(nodes, std::move(arcs), 0);

  std::vector<EdgeSet> raw;
  const std::size_t count = pick(1, 20);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t size = pick(1, std::min<std::size_t>(3, edges));
    std::set<EdgeId> chosen;
    while (chosen.size() < size) chosen.insert(static_cast<EdgeId>(pick(0, edges - 1)));
    raw.emplace_back(std::vector<EdgeId>(chosen.begin(), chosen.end()));
  }
  auto pre = preprocess(net, raw);
  return {seed, std::move(net), std::move(pre.collection)};
}

inline std::vector<EdgeSet> cut_edges(const std::vector<Cut>& cuts) {
  std::vector<EdgeSet> out;
  for (const auto& c : cuts) out.push_back(c.edges);
  return out;
}

struct Tally {
  std::size_t checks = 0;
  std::size_t failed = 0;
  // first few failure descriptions
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failed;
    if (failures.size() < 20) failures.push_back(what);
  }
  bool ok() const { return failed == 0; }
};

/// Fast results against the brute-force oracle on one instance: minimum cut
/// capacities, primary cuts, equivalence, domination, the partition, N,
/// N_max, and the final cut list against the maximal-class primary cuts.
inline void compare_with_oracle(const Instance& in, Tally& t) {
  const std::string tag = "seed " + std::to_string(in.seed) + ": ";
  const Network& net = in.net;
  const auto sets = in.sets();
  const auto ob = oracle::oracle_bounds(net, sets);

  for (std::size_t i = 0; i < sets.size(); ++i) {
    t.expect(ob.families[i].capacity == mincut_capacity(net, sets[i]), tag + "mincut");
    t.expect(ob.families[i].capacity == in.coll[i].mincut, tag + "cached mincut");
    t.expect(oracle::primary_of(net, ob.families[i]).edges == primary_min_cut(net, sets[i]).edges,
             tag + "primary cut");
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      t.expect(equivalent(net, in.coll[i], in.coll[j]) == oracle::oracle_equivalent(ob.families[i], ob.families[j]),
               tag + "equivalence");
      t.expect(dominates(net, in.coll[i], in.coll[j]) ==
                   oracle::oracle_dominates(net, ob.families[i], ob.families[j]),
               tag + "domination");
    }
  }

  auto hasse = class_hasse(net, in.coll);
  std::vector<std::vector<std::size_t>> fast_classes;
  for (const auto& c : hasse.classes) fast_classes.push_back(c.members);
  t.expect(fast_classes == ob.classes, tag + "partition");
  if (fast_classes == ob.classes) t.expect(hasse.below == ob.below, tag + "class order");
  t.expect(hasse.maximal == ob.maximal, tag + "maximal classes");

  BoundOptions opt;
  opt.mode = BoundMode::Both;
  auto rep = compute_bound(net, in.coll, opt);
  t.expect(*rep.n_classes == ob.n_classes(), tag + "N");
  t.expect(*rep.n_max == ob.n_max(), tag + "N_max");
  t.expect(cut_edges(rep.cuts) == cut_edges(ob.maximal_primary_cuts), tag + "final cuts vs maximal classes");
}


struct AxiomStats {
  std::size_t instances_with_three_systems = 0;
  std::size_t path_comparisons = 0;
  std::size_t merges = 0;
};

/// Reflexivity, symmetry and transitivity of equivalence; irreflexive,
/// asymmetric, transitive class domination; partial-order axioms of the cut
/// order inside each minimum-cut family; the merge of two minimum cuts; and
/// agreement of the path-wise cut order across several path systems.
inline void check_order_axioms(const Instance& in, Tally& t, AxiomStats& stats, std::size_t family_cap = 16) {
  const std::string tag = "seed " + std::to_string(in.seed) + ": ";
  const Network& net = in.net;
  const std::size_t n = in.coll.size();

  std::vector<std::vector<char>> eq(n, std::vector<char>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) eq[i][j] = equivalent(net, in.coll[i], in.coll[j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    t.expect(eq[i][i], tag + "~ reflexive");
    for (std::size_t j = 0; j < n; ++j) {
      t.expect(eq[i][j] == eq[j][i], tag + "~ symmetric");
      if (!eq[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (eq[j][k]) t.expect(eq[i][k], tag + "~ transitive");
      }
    }
  }

  auto hasse = class_hasse(net, in.coll);
  const auto& below = hasse.below;
  const std::size_t m = below.size();
  for (std::size_t i = 0; i < m; ++i) {
    t.expect(!below[i][i], tag + "domination irreflexive");
    for (std::size_t j = 0; j < m; ++j) {
      if (!below[i][j]) continue;
      t.expect(!below[j][i], tag + "domination asymmetric");
      for (std::size_t k = 0; k < m; ++k) {
        if (below[j][k]) t.expect(below[i][k], tag + "domination transitive");
      }
    }
  }
  // any representative pair decides class domination
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      for (std::size_t a : hasse.classes[i].members) {
        for (std::size_t b : hasse.classes[j].members) {
          t.expect(dominates(net, in.coll[a], in.coll[b]) == (below[i][j] != 0), tag + "representative choice");
        }
      }
    }
  }

  for (std::size_t s = 0; s < n; ++s) {
    const EdgeSet& target = in.coll[s].edges;
    auto family = oracle::enumerate_min_cuts(net, target);
    std::vector<Cut> cuts(family.cuts.begin(),
                          family.cuts.begin() + static_cast<std::ptrdiff_t>(std::min(family_cap, family.cuts.size())));
    const std::size_t f = cuts.size();
    std::vector<std::vector<char>> leq(f, std::vector<char>(f));
    for (std::size_t i = 0; i < f; ++i) {
      for (std::size_t j = 0; j < f; ++j) leq[i][j] = cut_leq(net, cuts[i], cuts[j]);
    }
    for (std::size_t i = 0; i < f; ++i) {
      t.expect(leq[i][i], tag + "cut order reflexive");
      for (std::size_t j = 0; j < f; ++j) {
        if (i != j && leq[i][j]) t.expect(!leq[j][i], tag + "cut order antisymmetric");
        if (!leq[i][j]) continue;
        for (std::size_t k = 0; k < f; ++k) {
          if (leq[j][k]) t.expect(leq[i][k], tag + "cut order transitive");
        }
      }
    }

    for (std::size_t i = 0; i < f; ++i) {
      for (std::size_t j = i; j < f; ++j) {
        Cut merged = minord_merge(net, cuts[i], cuts[j]);
        ++stats.merges;
        bool member = std::any_of(family.cuts.begin(), family.cuts.end(),
                                  [&](const Cut& c) { return c.edges == merged.edges; });
        t.expect(member, tag + "merge is a minimum cut");
        t.expect(cut_leq(net, merged, cuts[i]) && cut_leq(net, merged, cuts[j]), tag + "merge below both inputs");
      }
    }

    if (f < 2) continue;
    auto systems = oracle::enumerate_path_systems(net, target, 6);
    if (systems.size() >= 3) ++stats.instances_with_three_systems;
    for (const auto& system : systems) {
      // position of a cut's unique edge on each path
      auto positions = [&](const Cut& c) {
        std::vector<std::size_t> pos;
        for (const auto& path : system) {
          std::size_t hits = 0, at = 0;
          for (std::size_t q = 0; q < path.size(); ++q) {
            if (c.edges.contains(path[q])) {
              ++hits;
              at = q;
            }
          }
          t.expect(hits == 1, tag + "minimum cut meets each disjoint path once");
          pos.push_back(at);
        }
        return pos;
      };
      std::vector<std::vector<std::size_t>> pos;
      for (const auto& c : cuts) pos.push_back(positions(c));
      for (std::size_t i = 0; i < f; ++i) {
        for (std::size_t j = 0; j < f; ++j) {
          bool pathwise = true;
          for (std::size_t q = 0; q < system.size(); ++q) pathwise = pathwise && pos[i][q] <= pos[j][q];
          ++stats.path_comparisons;
          t.expect(pathwise == (leq[i][j] != 0), tag + "path-wise order matches separation");
        }
      }
    }
  }
}

/// N_max <= N <= |A|, and N_max == |A| exactly when the oracle sees only
/// singleton classes and no domination.
inline void check_bound_chain(const Instance& in, Tally& t) {
  const std::string tag = "seed " + std::to_string(in.seed) + ": ";
  BoundOptions opt;
  opt.mode = BoundMode::Both;
  auto rep = compute_bound(in.net, in.coll, opt);
  t.expect(*rep.n_max <= *rep.n_classes, tag + "N_max <= N");
  t.expect(*rep.n_classes <= in.coll.size(), tag + "N <= |A|");
  auto ob = oracle::oracle_bounds(in.net, in.sets());
  bool flat = ob.n_classes() == in.coll.size();
  for (const auto& row : ob.below) {
    for (char c : row) flat = flat && !c;
  }
  t.expect((*rep.n_max == in.coll.size()) == flat, tag + "N_max == |A| iff every set is an undominated class");
}

}  // namespace wtb::testing
