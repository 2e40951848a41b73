#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wtb/cuts.hpp"
#include "wtb/network.hpp"

namespace wtb {

struct WiretapSet {
  EdgeSet edges;
  std::size_t mincut = 0;
  /// |A| == mincut(s, A)
  bool regular = false;

  friend bool operator==(const WiretapSet&, const WiretapSet&) = default;
};

/// Preprocessed collection of wiretap sets: distinct, nonempty, reachable,
/// with cached minimum cut capacities. Order follows first appearance.
struct WiretapCollection {
  std::vector<WiretapSet> sets;

  std::size_t size() const { return sets.size(); }
  bool empty() const { return sets.empty(); }
  const WiretapSet& operator[](std::size_t i) const { return sets[i]; }
};

struct Preprocessed {
  WiretapCollection collection;
  std::vector<std::string> warnings;
};

namespace detail {
inline std::string describe(const EdgeSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) out += (i ? "," : "") + std::to_string(set[i]);
  return out + "}";
}
}  // namespace detail

/// Deduplicates, drops empty sets and sets with zero minimum cut (each with a
/// warning), and fills the per-set caches.
inline Preprocessed preprocess(const Network& net, std::span<const EdgeSet> raw) {
  Preprocessed out;
  std::set<EdgeSet> seen;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const EdgeSet& set = raw[i];
    net.check_edges(set);
    if (set.empty()) {
      out.warnings.push_back("set #" + std::to_string(i + 1) + " is empty; dropped");
      continue;
    }
    if (!seen.insert(set).second) {
      out.warnings.push_back("set #" + std::to_string(i + 1) + " " + detail::describe(set) +
                             " is a duplicate; dropped");
      continue;
    }
    std::size_t capacity = mincut_capacity(net, set);
    if (capacity == 0) {
      out.warnings.push_back("set #" + std::to_string(i + 1) + " " + detail::describe(set) +
                             " is unreachable from the source; dropped");
      continue;
    }
    out.collection.sets.push_back({set, capacity, capacity == set.size()});
  }
  return out;
}

/// Canonical regular replacement of A: its primary minimum cut.
inline Cut regularize(const Network& net, const EdgeSet& set) { return primary_min_cut(net, set); }

/// A1 ~ A2: they share a minimum cut, i.e. mincut(A1) = mincut(A2) = mincut(A1 u A2).
inline bool equivalent(const Network& net, const EdgeSet& a, const EdgeSet& b) {
  std::size_t ca = mincut_capacity(net, a);
  return ca == mincut_capacity(net, b) && ca == mincut_capacity(net, set_union(a, b));
}

inline bool equivalent(const Network& net, const WiretapSet& a, const WiretapSet& b) {
  if (a.mincut != b.mincut) return false;
  if (a.edges == b.edges) return true;
  return a.mincut == mincut_capacity(net, set_union(a.edges, b.edges));
}

/// A1 < A2: mincut(A1) < mincut(A2) and some minimum cut of A2 separates A1,
/// i.e. mincut(A1 u A2) = mincut(A2).
inline bool dominates(const Network& net, const WiretapSet& lower, const WiretapSet& upper) {
  return lower.mincut < upper.mincut && mincut_capacity(net, set_union(lower.edges, upper.edges)) == upper.mincut;
}

inline bool dominates(const Network& net, const EdgeSet& lower, const EdgeSet& upper) {
  return dominates(net, WiretapSet{lower, mincut_capacity(net, lower), false},
                   WiretapSet{upper, mincut_capacity(net, upper), false});
}

struct EquivalenceClass {
  /// Indices into the collection, ascending.
  std::vector<std::size_t> members;
  Cut primary_cut;
  std::size_t capacity = 0;
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Partition into equivalence classes by pairwise "~" tests. Classes are
/// ordered by their first member; each carries the primary minimum cut its
/// members share.
inline std::vector<EquivalenceClass> partition_classes(const Network& net, const WiretapCollection& coll) {
  const std::size_t n = coll.size();
  detail::DisjointSets dsu(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dsu.find(i) == dsu.find(j)) continue;
      if (equivalent(net, coll[i], coll[j])) dsu.unite(i, j);
    }
  }
  std::map<std::size_t, std::size_t> slot;
  std::vector<EquivalenceClass> classes;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = slot.try_emplace(dsu.find(i), classes.size());
    if (fresh) {
      classes.push_back({{}, primary_min_cut(net, coll[i].edges), coll[i].mincut});
    }
    classes[it->second].members.push_back(i);
  }
#ifndef NDEBUG
  for (const auto& cl : classes) {
    for (std::size_t m : cl.members) {
      assert(primary_min_cut(net, coll[m].edges).edges == cl.primary_cut.edges);
    }
  }
#endif
  return classes;
}

struct HasseDiagram {
  std::vector<EquivalenceClass> classes;
  /// below[i][j] != 0 iff class i is dominated by class j.
  std::vector<std::vector<char>> below;
  /// Covering pairs (lower, upper), lexicographic.
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  /// Classes dominated by no other class, ascending.
  std::vector<std::size_t> maximal;
};

/// Class domination from one representative pair per class pair, reduced to
/// its covering relation.
inline HasseDiagram class_hasse(const Network& net, const WiretapCollection& coll,
                                std::vector<EquivalenceClass> classes) {
  const std::size_t n = classes.size();
  HasseDiagram d;
  d.below.assign(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const WiretapSet& lo = coll[classes[i].members.front()];
      const WiretapSet& hi = coll[classes[j].members.front()];
      d.below[i][j] = dominates(net, lo, hi) ? 1 : 0;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (!d.below[i][j]) continue;
      dominated = true;
      bool implied = false;
      for (std::size_t k = 0; k < n && !implied; ++k) implied = d.below[i][k] && d.below[k][j];
      if (!implied) d.covers.emplace_back(i, j);
    }
    if (!dominated) d.maximal.push_back(i);
  }
  d.classes = std::move(classes);
  return d;
}

inline HasseDiagram class_hasse(const Network& net, const WiretapCollection& coll) {
  return class_hasse(net, coll, partition_classes(net, coll));
}

/// E_CUT: every edge still reachable from the source once `cut` is deleted.
inline EdgeSet reachable_after_delete(const Network& net, const EdgeSet& cut) { return reachable_edges(net, cut); }

enum class BoundMode { NMax, NOnly, Both };
enum class SelectRule { Cardinality, MinCut };

struct BoundOptions {
  BoundMode mode = BoundMode::NMax;
  SelectRule select = SelectRule::Cardinality;
  /// Replace every set by its primary minimum cut before running.
  bool regularize = false;
  /// Random tie-breaking among equally ranked sets; lexicographic when unset.
  std::optional<std::uint64_t> tie_seed;
};

struct BoundReport {
  std::size_t collection_size = 0;
  std::optional<std::size_t> n_classes;
  std::optional<std::size_t> n_max;
  /// Final primary minimum cuts (B), sorted by edge list. From the N_max pass
  /// when it ran, otherwise from the class-count pass.
  std::vector<Cut> cuts;
  /// One primary cut per equivalence class (class-count pass only).
  std::vector<Cut> class_cuts;
  std::size_t recommended_alphabet_size = 0;
  /// Whether the |T| term entered the recommendation (sinks known).
  bool sink_term_included = false;
};

namespace detail {

inline bool disjoint(const EdgeSet& a, const EdgeSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

// One run of the iterative primary-cut elimination. `classes_only` restricts
// removal to sets with the chosen set's minimum cut capacity and never prunes
// the output, which counts equivalence classes instead of maximal ones.
inline std::vector<Cut> eliminate(const Network& net, const std::vector<WiretapSet>& sets, bool classes_only,
                                  const BoundOptions& options) {
  std::vector<char> alive(sets.size(), 1);
  std::size_t remaining = sets.size();
  std::vector<Cut> chosen_cuts;
  std::optional<std::mt19937_64> rng;
  if (options.tie_seed) rng.emplace(*options.tie_seed);

  auto rank = [&](const WiretapSet& w) {
    return options.select == SelectRule::Cardinality ? w.edges.size() : w.mincut;
  };

  while (remaining > 0) {
    std::vector<std::size_t> best;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (!alive[i]) continue;
      if (best.empty() || rank(sets[i]) > rank(sets[best.front()])) {
        best = {i};
      } else if (rank(sets[i]) == rank(sets[best.front()])) {
        best.push_back(i);
      }
    }
    std::size_t pick = best.front();
    if (rng) {
      pick = best[std::uniform_int_distribution<std::size_t>(0, best.size() - 1)(*rng)];
    } else {
      for (std::size_t i : best) {
        if (sets[i].edges < sets[pick].edges) pick = i;
      }
    }

    Cut cut = primary_min_cut(net, sets[pick].edges);
    EdgeSet reach = reachable_after_delete(net, cut.edges);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (!alive[i] || !disjoint(sets[i].edges, reach)) continue;
      if (classes_only && sets[i].mincut != cut.capacity) continue;
      assert(separates(net, cut.edges, sets[i].edges));
      alive[i] = 0;
      --remaining;
    }
    assert(!alive[pick]);
    if (!classes_only) {
      std::erase_if(chosen_cuts, [&](const Cut& b) { return disjoint(b.edges, reach); });
    }
    chosen_cuts.push_back(std::move(cut));
  }
  std::sort(chosen_cuts.begin(), chosen_cuts.end(),
            [](const Cut& a, const Cut& b) { return a.edges < b.edges; });
  return chosen_cuts;
}

}  // namespace detail

/// N_max (and optionally N) by iterated primary minimum cuts: choose a
/// top-ranked remaining set, take its primary minimum cut, and drop every set
/// (and every earlier cut) lying entirely outside the edges still reachable
/// once that cut is deleted.
inline BoundReport compute_bound(const Network& net, const WiretapCollection& coll,
                                 const BoundOptions& options = {}) {
  BoundReport report;
  report.collection_size = coll.size();

  std::vector<WiretapSet> sets = coll.sets;
  if (options.regularize) {
    std::set<EdgeSet> seen;
    std::vector<WiretapSet> regular;
    for (const auto& w : sets) {
      Cut cut = primary_min_cut(net, w.edges);
      if (seen.insert(cut.edges).second) regular.push_back({cut.edges, cut.capacity, true});
    }
    sets = std::move(regular);
  }

  if (options.mode != BoundMode::NMax) {
    report.class_cuts = detail::eliminate(net, sets, true, options);
    report.n_classes = report.class_cuts.size();
  }
  if (options.mode != BoundMode::NOnly) {
    report.cuts = detail::eliminate(net, sets, false, options);
    report.n_max = report.cuts.size();
  } else {
    report.cuts = report.class_cuts;
  }

  std::size_t bound = report.n_max ? *report.n_max : *report.n_classes;
  report.recommended_alphabet_size = bound + 1;
  if (net.sinks()) {
    report.sink_term_included = true;
    report.recommended_alphabet_size = std::max(report.recommended_alphabet_size, net.sinks()->size());
  }
  return report;
}

}  // namespace wtb
