#include <gtest/gtest.h>

#include <cstdlib>

#include "support.hpp"

using namespace wtb;
using wtb::testing::E;

namespace {

bool has_cut(const oracle::MinCutFamily& f, const EdgeSet& c) {
  return std::any_of(f.cuts.begin(), f.cuts.end(), [&](const Cut& x) { return x.edges == c; });
}

}  // namespace

TEST(Oracle, SinglePathHasTwoCuts) {
  auto net = build_network(3, {{0, 1}, {1, 2}}, 0);
  auto f = oracle::enumerate_min_cuts(net, EdgeSet{1});
  EXPECT_EQ(f.capacity, 1u);
  ASSERT_EQ(f.cuts.size(), 2u);
  EXPECT_EQ(f.cuts[0].edges, EdgeSet{0});
  EXPECT_EQ(f.cuts[1].edges, EdgeSet{1});
  EXPECT_EQ(oracle::oracle_primary_min_cut(net, EdgeSet{1}).edges, EdgeSet{0});
}

TEST(Oracle, SourceEdgeIsItsOwnPrimary) {
  auto ln = wtb::testing::fig1();
  EXPECT_EQ(oracle::oracle_primary_min_cut(ln.net, E({2})).edges, E({2}));
}

TEST(Oracle, Fig3Family) {
  auto ln = wtb::testing::fig3();
  auto in_t = ln.net.in_edges(*ln.find_node("t"));
  EdgeSet target(std::vector<EdgeId>(in_t.begin(), in_t.end()));
  // every one of the 21 edges leads to t, so lift the default guard
  oracle::Limits wide;
  wide.max_edges = 21;
  auto f = oracle::enumerate_min_cuts(ln.net, target, wide);
  EXPECT_EQ(f.capacity, 4u);
  auto primary = wtb::testing::by_label(ln, {"i5-t", "i9-t", "i7-i10", "s-i4"});
  EXPECT_TRUE(has_cut(f, primary));
  EXPECT_TRUE(has_cut(f, target));
  EXPECT_EQ(oracle::primary_of(ln.net, f).edges, primary);
}

TEST(Oracle, Fig1Family) {
  auto ln = wtb::testing::fig1();
  auto f = oracle::enumerate_min_cuts(ln.net, E({19, 20}));
  EXPECT_EQ(f.capacity, 2u);
  EXPECT_TRUE(has_cut(f, E({16, 17})));
  EXPECT_TRUE(has_cut(f, E({19, 20})));
  EXPECT_EQ(f.cuts.size(), 4u);
}

TEST(Oracle, UnreachableTargetHasEmptyCut) {
  auto net = build_network(3, {{0, 1}, {2, 1}}, 0);
  auto f = oracle::enumerate_min_cuts(net, EdgeSet{1});
  EXPECT_EQ(f.capacity, 0u);
  ASSERT_EQ(f.cuts.size(), 1u);
  EXPECT_TRUE(f.cuts[0].edges.empty());
}

TEST(Oracle, SizeGuard) {
  auto ln = wtb::testing::fig1();
  oracle::Limits tight;
  tight.max_edges = 3;
  try {
    oracle::enumerate_min_cuts(ln.net, E({19, 20}), tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InstanceTooLarge);
  }
  EXPECT_NO_THROW(oracle::enumerate_min_cuts(ln.net, E({6}), tight));
}

TEST(Oracle, EnvironmentOverride) {
  ::setenv("WTB_MAX_ORACLE_EDGES", "5", 1);
  EXPECT_EQ(oracle::Limits::from_env().max_edges, 5u);
  ::setenv("WTB_MAX_ORACLE_EDGES", "junk", 1);
  EXPECT_EQ(oracle::Limits::from_env().max_edges, oracle::kDefaultMaxEdges);
  ::unsetenv("WTB_MAX_ORACLE_EDGES");
  EXPECT_EQ(oracle::Limits::from_env().max_edges, oracle::kDefaultMaxEdges);
}

TEST(Oracle, Fig1Bounds) {
  auto ln = wtb::testing::fig1();
  auto coll = wtb::testing::fig1_sets(ln);
  std::vector<EdgeSet> sets;
  for (const auto& w : coll.sets) sets.push_back(w.edges);
  auto b = oracle::oracle_bounds(ln.net, sets);
  EXPECT_EQ(b.n_classes(), 15u);
  EXPECT_EQ(b.n_max(), 3u);
  EXPECT_EQ(wtb::testing::cut_edges(b.maximal_primary_cuts),
            (std::vector<EdgeSet>{E({1, 2, 3}), E({3, 4, 5}), E({16, 17})}));
}

TEST(Oracle, SingletonBounds) {
  auto net = build_network(2, {{0, 1}}, 0);
  std::vector<EdgeSet> sets{EdgeSet{0}};
  auto b = oracle::oracle_bounds(net, sets);
  EXPECT_EQ(b.n_classes(), 1u);
  EXPECT_EQ(b.n_max(), 1u);
}

TEST(Oracle, DominationAndEquivalence) {
  auto ln = wtb::testing::fig1();
  auto fam = [&](EdgeSet s) { return oracle::enumerate_min_cuts(ln.net, s); };
  EXPECT_TRUE(oracle::oracle_dominates(ln.net, fam(E({18})), fam(E({1, 3, 16}))));
  EXPECT_FALSE(oracle::oracle_dominates(ln.net, fam(E({1, 3, 16})), fam(E({18}))));
  EXPECT_TRUE(oracle::oracle_equivalent(fam(E({6})), fam(E({7}))));
  EXPECT_FALSE(oracle::oracle_equivalent(fam(E({6})), fam(E({8}))));
}

TEST(Oracle, PathSystems) {
  auto ln = wtb::testing::fig1();
  auto systems = oracle::enumerate_path_systems(ln.net, E({19, 20}), 100);
  ASSERT_FALSE(systems.empty());
  for (const auto& sys : systems) {
    ASSERT_EQ(sys.size(), 2u);
    std::set<EdgeId> used;
    for (const auto& p : sys) {
      EXPECT_TRUE(E({19, 20}).contains(p.back()));
      for (EdgeId e : p) EXPECT_TRUE(used.insert(e).second);
    }
  }
  EXPECT_LE(oracle::enumerate_path_systems(ln.net, E({19, 20}), 1).size(), 1u);
}
