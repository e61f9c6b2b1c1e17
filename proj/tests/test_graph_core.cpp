#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "cubic_generator.hpp"
#include "cubicpm/cubicpm.hpp"
#include "oracles.hpp"

using namespace cubicpm;

namespace {

oracle::EdgeMask mask_of(const EdgeSet& s) {
  oracle::EdgeMask m = 0;
  for (EdgeId e : s.members()) m |= oracle::EdgeMask{1} << e;
  return m;
}

EdgeSet set_of(const Graph& g, oracle::EdgeMask m) {
  EdgeSet s(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if ((m >> e) & 1) s.insert(e);
  }
  return s;
}

const std::map<int, std::vector<Graph>>& small_cubic() {
  static const auto all = gen::bridgeless_cubic(12);
  return all;
}

// Connected cubic graphs with bridges: two K4s with one edge subdivided
// each, joined at the subdivision vertices, and the no-S4 family.
std::vector<Graph> bridged_graphs() {
  std::vector<Graph> out{no_s4_family(3)};
  Graph two_k4(10);
  for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}) two_k4.add_edge(a, b);
  for (auto [a, b] : {std::pair{5, 6}, {5, 7}, {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9}}) two_k4.add_edge(a, b);
  two_k4.add_edge(0, 5);
  out.push_back(two_k4);
  return out;
}

}  // namespace

TEST(Graph, KeepsEdgeOrderAndIncidence) {
  Graph g(3, {{0, 1}, {1, 2}, {0, 1}});
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_EQ(g.incident(1), (std::vector<EdgeId>{0, 1, 2}));
  EXPECT_EQ(g.edges_between(0, 1), (std::vector<EdgeId>{0, 2}));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.degree(0), 2);
}

TEST(Graph, RejectsLoopsAndBadEndpoints) {
  Graph g(2);
  EXPECT_THROW(g.add_edge(0, 0), PreconditionError);
  EXPECT_THROW(g.add_edge(0, 2), PreconditionError);
  EXPECT_THROW(Graph(-1), PreconditionError);
}

TEST(EdgeSet, AlgebraAndMembers) {
  EdgeSet a(70, {1, 5, 69});
  EdgeSet b(70, {5, 6});
  EXPECT_EQ((a & b).members(), (std::vector<EdgeId>{5}));
  EXPECT_EQ((a | b).members(), (std::vector<EdgeId>{1, 5, 6, 69}));
  EXPECT_EQ(a.complement().size(), 67);
  EXPECT_TRUE(a.intersects(b));
  EXPECT_TRUE((a & b).subset_of(a));
  EXPECT_EQ(a.first(), 1);
  EXPECT_EQ(EdgeSet(70).first(), -1);
  EXPECT_THROW(a.insert(70), PreconditionError);
  EXPECT_THROW((void)(a & EdgeSet(3)), PreconditionError);
}

TEST(Validate, NamedGraphs) {
  EXPECT_TRUE(validate(petersen()).ok());
  EXPECT_TRUE(validate(k4()).ok());
  const auto c = validate(c23());
  EXPECT_TRUE(c.cubic);
  EXPECT_TRUE(c.bridgeless);
  EXPECT_FALSE(c.simple);
  ASSERT_TRUE(c.parallel_pair);
  EXPECT_EQ(*c.parallel_pair, (std::pair<EdgeId, EdgeId>{0, 1}));
}

TEST(Validate, ReportsWitnesses) {
  Graph path(3, {{0, 1}, {1, 2}});
  const auto r = validate(path);
  EXPECT_FALSE(r.cubic);
  EXPECT_EQ(r.bad_degree_vertex.value_or(-1), 0);
  EXPECT_FALSE(r.bridgeless);
  ASSERT_TRUE(r.bridge);

  Graph two(8);
  for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}) {
    two.add_edge(a, b);
    two.add_edge(a + 4, b + 4);
  }
  const auto d = validate(two);
  EXPECT_FALSE(d.connected);
  EXPECT_EQ(d.unreachable_vertex.value_or(-1), 4);
}

TEST(Bridges, MatchDeletionOracle) {
  for (const auto& [n, graphs] : small_cubic()) {
    for (const auto& g : graphs) EXPECT_EQ(mask_of(bridges(g)), oracle::bridges(g));
  }
  for (const auto& g : bridged_graphs()) {
    EXPECT_EQ(mask_of(bridges(g)), oracle::bridges(g));
    EXPECT_FALSE(bridges(g).empty());
  }
  // Parallel pairs are never bridges.
  EXPECT_TRUE(bridges(c23()).empty());
}

TEST(BlockDecomposition, BridgePath) {
  const auto bd = block_decomposition(no_s4_family(3));
  EXPECT_EQ(bd.bridges.size(), 3u);
  EXPECT_FALSE(bd.path_flag);  // three bridges hang off one cycle

  const auto two = block_decomposition(bridged_graphs()[1]);
  EXPECT_TRUE(two.path_flag);
  ASSERT_EQ(two.blocks.size(), 2u);
  EXPECT_EQ(two.blocks[0].size(), 5u);
}

TEST(Bipartite, OddCycleWitnessIsACycleInTheSubgraph) {
  const Graph g = petersen();
  const auto all = EdgeSet::all(g.edge_count());
  const auto r = bipartite_or_odd_cycle(g, all);
  EXPECT_FALSE(r.bipartite);
  EXPECT_EQ(r.odd_cycle.size() % 2, 1u);
  for (EdgeId e : r.odd_cycle_edges) EXPECT_TRUE(all.contains(e));
  EXPECT_TRUE(bipartite_or_odd_cycle(cube(), EdgeSet::all(12)).bipartite);
}

TEST(Bipartite, AgreesWithOracleOnRandomSubsets) {
  std::mt19937 rng(7);
  for (const auto& [n, graphs] : small_cubic()) {
    for (const auto& g : graphs) {
      for (int round = 0; round < 4; ++round) {
        const oracle::EdgeMask m = rng() & oracle::all_edges(g);
        EXPECT_EQ(bipartite_or_odd_cycle(g, set_of(g, m)).bipartite, oracle::bipartite(g, m));
      }
    }
  }
}

TEST(Cuts, BoundaryOfSingleVertexIsOddCut) {
  const Graph g = petersen();
  const auto c = boundary(g, {3});
  EXPECT_TRUE(c.odd);
  EXPECT_TRUE(c.is_cut);
  EXPECT_EQ(c.boundary.size(), 3);
  EXPECT_THROW(boundary(g, {}), PreconditionError);
}

TEST(Cuts, DisconnectedShoreIsNotMinimal) {
  const Graph g = prism();
  // {0, 5} are not adjacent in the prism: the boundary is a union of two cuts.
  const auto c = boundary(g, {0, 5});
  EXPECT_FALSE(c.is_cut);
}

TEST(Cuts, OddCutWithinMatchesSubsetOracle) {
  std::mt19937 rng(11);
  std::vector<Graph> graphs{petersen(), k4(), k33(), prism(), cube()};
  for (const auto& [n, gs] : small_cubic()) {
    if (n <= 10) graphs.insert(graphs.end(), gs.begin(), gs.end());
  }
  graphs.push_back(corpus::petersen_family()[1].graph);
  for (const auto& g : graphs) {
    const auto cuts = oracle::odd_cuts(g);
    for (int round = 0; round < 60; ++round) {
      oracle::EdgeMask f = 0;
      // Dense random subsets hit cuts often enough to exercise both answers.
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (rng() % 3 != 0) f |= oracle::EdgeMask{1} << e;
      }
      bool expected = false;
      for (auto c : cuts) expected = expected || (c & ~f) == 0;
      const auto w = odd_cut_within(g, set_of(g, f));
      ASSERT_EQ(w.has_value(), expected);
      if (w) {
        EXPECT_TRUE(w->odd);
        EXPECT_TRUE(w->boundary.subset_of(set_of(g, f)));
        EXPECT_NE(std::find(cuts.begin(), cuts.end(), mask_of(w->boundary)), cuts.end());
      }
    }
  }
}
