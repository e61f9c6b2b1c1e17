#include <gtest/gtest.h>

#include "corpus.hpp"
#include "cubic_generator.hpp"
#include "cubicpm/cubicpm.hpp"
#include "oracles.hpp"

using namespace cubicpm;

namespace {

// Petersen with edge `e` = xy replaced by x - u = v - y, where u and v are
// joined by two parallel edges (the last two ids).
Graph petersen_with_digon(EdgeId e, std::array<EdgeId, 2>& pair) {
  const Graph p = petersen();
  Graph g(12);
  for (EdgeId i = 0; i < p.edge_count(); ++i) {
    if (i != e) g.add_edge(p.edge(i).a, p.edge(i).b);
  }
  g.add_edge(p.edge(e).a, 10);
  g.add_edge(11, p.edge(e).b);
  pair = {g.add_edge(10, 11), g.add_edge(10, 11)};
  return g;
}

}  // namespace

TEST(Connections, TwoCutCountsAndAnchors) {
  const auto r = two_cut_connection(petersen(), 0, k33(), 4);
  EXPECT_EQ(r.graph.vertex_count(), 16);
  EXPECT_EQ(r.graph.edge_count(), 24);
  EXPECT_TRUE(validate(r.graph).ok());
  const auto uu = r.graph.edge(r.anchor("uu"));
  EXPECT_EQ(uu.a, *r.vertex_map[0][petersen().edge(0).a]);
  EXPECT_EQ(uu.b, *r.vertex_map[1][k33().edge(4).a]);
  EXPECT_FALSE(r.edge_map[0][0]);
  EXPECT_THROW(two_cut_connection(petersen(), 15, k4(), 0), PreconditionError);
}

TEST(Connections, ThreeCutIsPrincipal) {
  const auto r = three_cut_connection(petersen(), 3, cube(), 0, {2, 0, 1});
  EXPECT_EQ(r.graph.vertex_count(), 16);
  EXPECT_TRUE(validate(r.graph).ok());
  std::vector<VertexId> side;
  for (const auto& v : r.vertex_map[0]) {
    if (v) side.push_back(*v);
  }
  const auto c = boundary(r.graph, side);
  EXPECT_TRUE(c.is_cut);
  EXPECT_EQ(c.boundary, EdgeSet(r.graph.edge_count(), {r.anchor("cut0"), r.anchor("cut1"), r.anchor("cut2")}));
  EXPECT_THROW(three_cut_connection(petersen(), 0, k4(), 0, {0, 0, 1}), PreconditionError);
  EXPECT_THROW(three_cut_connection(c23(), 0, k4(), 0), PreconditionError);
}

TEST(Smoothing, CorrespondenceCountsAndInverts) {
  for (EdgeId e : {0, 7, 14}) {
    std::array<EdgeId, 2> pair{};
    const Graph gp = petersen_with_digon(e, pair);
    const auto c = smooth(gp, pair);
    EXPECT_EQ(c.target.vertex_count(), 10);
    EXPECT_EQ(c.target.edge_count(), 15);
    EXPECT_EQ(c.xy, 14);

    const auto target_pms = all_pms(c.target, {});
    int with_xy = 0;
    for (const auto& m : target_pms) {
      with_xy += m.contains(c.xy);
      for (int which : {0, 1}) {
        const auto lifted = c.backward(m, which);
        EXPECT_TRUE(is_perfect_matching(gp, lifted.edges));
        EXPECT_EQ(c.forward(lifted), m);
      }
    }
    const int without = static_cast<int>(target_pms.size()) - with_xy;
    EXPECT_EQ(oracle::perfect_matchings(gp).size(), static_cast<std::size_t>(with_xy + 2 * without));
    for (const auto& m : all_pms(gp, {})) EXPECT_TRUE(is_perfect_matching(c.target, c.forward(m).edges));
  }
}

TEST(Smoothing, Rejections) {
  EXPECT_THROW(smooth(c23(), {0, 1}), PreconditionError);        // 3-dipole
  EXPECT_THROW(smooth(petersen(), {0, 1}), PreconditionError);   // not parallel
  // Both ends of the digon see the same outer vertex 0.
  const Graph same_end(6, {{0, 1}, {1, 2}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {4, 5}, {5, 3}});
  EXPECT_THROW(smooth(same_end, {1, 2}), PreconditionError);
}

TEST(Gadgets, VertexCounts) {
  EXPECT_EQ(gadget_k4star(petersen(), 0).graph.vertex_count(), 20);
  EXPECT_EQ(gadget_k4star(k4(), 0).graph.vertex_count(), 8);
  EXPECT_EQ(gadget_pstar(k4(), 0).graph.vertex_count(), 18);
  EXPECT_EQ(gadget_pstar(petersen(), 0).graph.vertex_count(), 42);
  EXPECT_EQ(gadget_gwpv(k4(), 0).graph.vertex_count(), 12);
  EXPECT_EQ(gadget_k4prime(k4(), 0).graph.vertex_count(), 12);
  const auto h = gadget_h(k4(), 0, 1000);
  EXPECT_EQ(h.graph.vertex_count(), gadget_h_vertex_count(k4()));
  EXPECT_EQ(gadget_h_vertex_count(k4()), 190);
  EXPECT_THROW(gadget_h(petersen(), 0, 300), CapExceeded);
  EXPECT_EQ(gadget_h(petersen(), 0, 300, true).graph.vertex_count(), gadget_h_vertex_count(petersen()));
}

TEST(Gadgets, OutputsAreBridgelessCubic) {
  for (const Graph& g : {k4(), k33(), petersen()}) {
    EXPECT_TRUE(validate(gadget_k4star(g, 1).graph).ok());
    EXPECT_TRUE(validate(gadget_pstar(g, 1).graph).ok());
    EXPECT_TRUE(validate(gadget_gwpv(g, 1).graph).ok());
    EXPECT_TRUE(validate(gadget_k4prime(g, 2).graph).ok());
  }
  EXPECT_THROW(gadget_k4star(no_s4_family(3), 0), PreconditionError);
}

TEST(Gadgets, PStarAnchorEdgeIsAdjacentToItsFourCuts) {
  const auto r = gadget_pstar(k4(), 0);
  const auto e = r.graph.edge(r.anchor("e"));
  for (const char* name : {"a1", "c2", "c3", "a4"}) {
    const auto x = r.graph.edge(r.anchor(name));
    EXPECT_TRUE(x.touches(e.a) || x.touches(e.b)) << name;
  }
}

TEST(Gadgets, GwpvAnchorDTouchesCw) {
  const auto r = gadget_gwpv(petersen(), 0);
  const auto d = r.graph.edge(r.anchor("d"));
  const auto c = r.graph.edge(r.anchor("c_w"));
  EXPECT_TRUE(c.touches(d.a) || c.touches(d.b));
}

TEST(Pipelines, K4StarGivesFrequencies210) {
  for (const Graph& g : {k4(), k33()}) {
    const auto gadget = gadget_k4star(g, 0);
    const auto t = find_fr_triple(gadget.graph, FrequencySpec::edge(gadget.anchor("u3u4"), 2));
    ASSERT_TRUE(t.found);
    const auto out = extract_fr_210(g, 0, gadget, *t.found);
    EXPECT_FALSE(verify_fr(out));
    const std::vector<PerfectMatching> ms(out.m.begin(), out.m.end());
    const auto& inc = g.incident(0);
    EXPECT_EQ(frequency(ms, inc[0]), 2);
    EXPECT_EQ(frequency(ms, inc[1]), 1);
    EXPECT_EQ(frequency(ms, inc[2]), 0);
  }
}

TEST(Pipelines, GwpvGivesFrequencies110) {
  const Graph g = k33();
  const auto gadget = gadget_gwpv(g, 2);
  const auto p = find_s4_pair(gadget.graph, FrequencySpec::edge(gadget.anchor("d"), 2));
  ASSERT_TRUE(p.found);
  const auto out = extract_s4_110(g, 2, gadget, *p.found);
  EXPECT_TRUE(verify_s4(g, out).bipartite);
  const auto& inc = g.incident(2);
  EXPECT_EQ(frequency({out.first, out.second}, inc[0]), 1);
  EXPECT_EQ(frequency({out.first, out.second}, inc[1]), 1);
  EXPECT_EQ(frequency({out.first, out.second}, inc[2]), 0);
}

TEST(Pipelines, ExtractionPreconditions) {
  const auto gadget = gadget_k4star(k4(), 0);
  const auto t = find_fr_triple(gadget.graph, FrequencySpec::edge(gadget.anchor("u3u4"), 0));
  ASSERT_TRUE(t.found);
  EXPECT_THROW(extract_fr_210(k4(), 0, gadget, *t.found), PreconditionError);
}

TEST(BridgePath, DelegatesWithoutBridges) {
  const auto r = bridge_path_s4(petersen());
  ASSERT_TRUE(r.pair);
  EXPECT_TRUE(r.blocks.empty());
  EXPECT_TRUE(verify_s4(petersen(), *r.pair).bipartite);
}

TEST(BridgePath, RejectsBridgesOffAPath) { EXPECT_THROW(bridge_path_s4(no_s4_family(3)), PreconditionError); }

TEST(NoS4Family, Shape) {
  for (int t : {3, 5}) {
    const Graph g = no_s4_family(t);
    EXPECT_EQ(g.vertex_count(), 6 * t);
    const auto v = validate(g);
    EXPECT_TRUE(v.cubic);
    EXPECT_TRUE(v.connected);
    EXPECT_EQ(bridges(g).size(), t);
  }
  EXPECT_THROW(no_s4_family(4), PreconditionError);
  EXPECT_THROW(no_s4_family(1), PreconditionError);
}

TEST(BridgePath, ThreeBlocks) {
  for (const Graph& middle : {petersen(), k33(), cube()}) {
    const Graph g = corpus::bridge_path(middle, 0, middle.edge_count() - 1);
    ASSERT_EQ(bridges(g).size(), 2);
    const auto r = bridge_path_s4(g);
    ASSERT_TRUE(r.pair);
    EXPECT_EQ(r.blocks.size(), 3u);
    EXPECT_TRUE(is_perfect_matching(g, r.pair->first.edges));
    EXPECT_TRUE(is_perfect_matching(g, r.pair->second.edges));
    EXPECT_TRUE(verify_s4(g, *r.pair).bipartite);
    for (const auto& b : r.blocks) {
      ASSERT_TRUE(b.pair);
      EXPECT_TRUE(meets({b.pair->first, b.pair->second}, b.constraints));
    }
  }
}
