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

bool same_unordered(const S4Pair& a, const S4Pair& b) {
  return (a.first == b.first && a.second == b.second) || (a.first == b.second && a.second == b.first);
}

std::vector<Graph> bridgeless_upto(int n) {
  std::vector<Graph> out;
  for (const auto& [order, graphs] : gen::bridgeless_cubic(n)) {
    for (const auto& g : graphs) {
      if (bridges(g).empty()) out.push_back(g);
    }
  }
  return out;
}

}  // namespace

TEST(FrequencySpec, ParityRules) {
  const Graph p = petersen();
  EXPECT_EQ(FrequencySpec::vertex(0, 2, 1, 0).constraints(p, FrequencyTarget::fr_triple).size(), 3u);
  EXPECT_THROW(FrequencySpec::vertex(0, 2, 1, 0).constraints(p, FrequencyTarget::s4_pair), PreconditionError);
  EXPECT_EQ(FrequencySpec::vertex(0, 1, 1, 0).constraints(p, FrequencyTarget::s4_pair).size(), 3u);
  EXPECT_THROW(FrequencySpec::vertex(0, 1, 1, 0).constraints(p, FrequencyTarget::fr_triple), PreconditionError);
  EXPECT_THROW(FrequencySpec::edge(0, 3).constraints(p, FrequencyTarget::fr_triple), PreconditionError);
  EXPECT_THROW(FrequencySpec::edge(15, 1).constraints(p, FrequencyTarget::fr_triple), PreconditionError);
  EXPECT_THROW(FrequencySpec::vertex(10, 1, 1, 1).constraints(p, FrequencyTarget::fr_triple), PreconditionError);
}

TEST(FrequencySpec, VertexFormUsesAscendingIncidentEdges) {
  const Graph p = petersen();
  const auto cs = FrequencySpec::vertex(5, 2, 1, 0).constraints(p, FrequencyTarget::fr_triple);
  EXPECT_EQ(cs, (FrequencyConstraints{{p.incident(5)[0], 2}, {p.incident(5)[1], 1}, {p.incident(5)[2], 0}}));
}

TEST(FRTriple, PetersenWithEveryPrescription) {
  const Graph p = petersen();
  const auto plain = find_fr_triple(p);
  ASSERT_TRUE(plain.found);
  EXPECT_FALSE(verify_fr(*plain.found));
  for (int i = 0; i <= 2; ++i) {
    const auto r = find_fr_triple(p, FrequencySpec::edge(7, i));
    ASSERT_TRUE(r.found) << i;
    EXPECT_EQ(frequency({r.found->m[0], r.found->m[1], r.found->m[2]}, 7), i);
  }
  for (auto f : {std::array{2, 1, 0}, {0, 1, 2}, {1, 2, 0}, {1, 1, 1}}) {
    const auto spec = FrequencySpec::vertex(3, f[0], f[1], f[2]);
    const auto r = find_fr_triple(p, spec);
    ASSERT_TRUE(r.found);
    EXPECT_TRUE(meets({r.found->m[0], r.found->m[1], r.found->m[2]}, spec.constraints(p, FrequencyTarget::fr_triple)));
  }
}

TEST(FRTriple, VerifyNamesACommonEdge) {
  const auto pms = all_pms(petersen(), {});
  const auto e = verify_fr({{pms[0], pms[0], pms[1]}});
  ASSERT_TRUE(e);
  EXPECT_TRUE(pms[0].contains(*e) && pms[1].contains(*e));
}

TEST(S4Pair, PetersenAndVerification) {
  const Graph p = petersen();
  const auto r = find_s4_pair(p);
  ASSERT_TRUE(r.found);
  EXPECT_TRUE(verify_s4(p, *r.found).bipartite);
  // A matching with itself leaves the two 5-cycles of its 2-factor.
  const auto m = all_pms(p, {})[0];
  const auto bad = verify_s4(p, {m, m});
  EXPECT_FALSE(bad.bipartite);
  EXPECT_EQ(bad.odd_cycle.size(), 5u);
}

TEST(S4Pair, BaseMatchingIsKept) {
  const Graph p = petersen();
  for (const auto& m : all_pms(p, {})) {
    const auto r = find_s4_pair(p, FrequencyConstraints{}, m);
    ASSERT_TRUE(r.found);
    EXPECT_EQ(r.found->first, m);
  }
  EXPECT_THROW(find_s4_pair(p, FrequencyConstraints{}, PerfectMatching{EdgeSet(15, {0})}), PreconditionError);
}

TEST(S4Pair, PrescribedFrequencies) {
  const Graph p = petersen();
  for (auto f : {std::array{1, 1, 0}, {0, 1, 1}, {2, 0, 0}, {0, 0, 2}}) {
    const auto spec = FrequencySpec::vertex(4, f[0], f[1], f[2]);
    const auto r = find_s4_pair(p, spec);
    ASSERT_TRUE(r.found);
    EXPECT_TRUE(meets({r.found->first, r.found->second}, spec.constraints(p, FrequencyTarget::s4_pair)));
  }
}

TEST(S4Pair, NoS4FamilyHasNone) {
  const Graph g = no_s4_family(3);
  const auto pms = all_pms(g, {});
  ASSERT_FALSE(pms.empty());
  for (const auto& m : pms) EXPECT_TRUE(bridges(g).subset_of(m.edges));
  const auto r = find_s4_pair(g);
  EXPECT_FALSE(r.found);
  EXPECT_EQ(r.candidates_examined, pms.size() * (pms.size() + 1) / 2);
}

TEST(S4Pair, DeadlineIsEnforced) {
  Limits past;
  past.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  EXPECT_THROW(find_s4_pair(no_s4_family(3), FrequencyConstraints{}, std::nullopt, past), CapExceeded);
}

TEST(OddCut, PetersenMatchingIsItselfAnOddCut) {
  const Graph p = petersen();
  const auto m = all_pms(p, {})[0];
  const auto cut = verify_oddcut_pair(p, {m, m});
  ASSERT_TRUE(cut);
  EXPECT_EQ(cut->boundary, m.edges);
  const auto r = find_oddcut_pair(p);
  ASSERT_TRUE(r.found);
  EXPECT_FALSE(verify_oddcut_pair(p, *r.found));
}

TEST(OddCut, ImpliesS4OnSmallGraphs) {
  auto graphs = bridgeless_upto(10);
  graphs.push_back(petersen());
  for (const auto& g : graphs) {
    const auto cuts = oracle::odd_cuts(g);
    const auto pms = oracle::perfect_matchings(g);
    for (std::size_t i = 0; i < pms.size(); ++i) {
      for (std::size_t j = i; j < pms.size(); ++j) {
        const auto meet = pms[i] & pms[j];
        bool has_cut = false;
        for (auto c : cuts) has_cut = has_cut || (c & ~meet) == 0;
        if (!has_cut) {
          EXPECT_TRUE(oracle::bipartite(g, oracle::all_edges(g) & ~(pms[i] | pms[j])));
        }
      }
    }
  }
}

TEST(BergeFulkerson, Covers) {
  for (const auto& g : {petersen(), k4(), k33(), prism(), c23()}) {
    const auto r = find_bf_cover(g);
    ASSERT_TRUE(r.found);
    const std::vector<PerfectMatching> ms(r.found->begin(), r.found->end());
    for (EdgeId e = 0; e < g.edge_count(); ++e) EXPECT_EQ(frequency(ms, e), 2);
  }
  // Petersen has exactly six perfect matchings, so the cover uses each once.
  const auto r = find_bf_cover(petersen());
  std::vector<PerfectMatching> ms(r.found->begin(), r.found->end());
  std::sort(ms.begin(), ms.end());
  EXPECT_EQ(std::unique(ms.begin(), ms.end()), ms.end());
  EXPECT_THROW(find_bf_cover(corpus::petersen_family()[5].graph), CapExceeded);
}

TEST(S4Colouring, RoundTripOnSmallGraphs) {
  const Graph host = s4_host();
  ASSERT_EQ(host.vertex_count(), 4);
  ASSERT_EQ(host.edge_count(), 5);
  auto graphs = bridgeless_upto(10);
  graphs.push_back(petersen());
  graphs.push_back(c23());
  for (const auto& g : graphs) {
    const auto r = find_s4_pair(g);
    ASSERT_TRUE(r.found);
    const auto f = s4_colouring_from_pair(g, *r.found);
    EXPECT_FALSE(verify_h_colouring(g, host, f));
    EXPECT_TRUE(same_unordered(pair_from_s4_colouring(g, f), *r.found));
  }
}

TEST(S4Colouring, RejectsInvalidColourings) {
  const Graph p = petersen();
  const S4Colouring all_g0(p.edge_count(), 0);
  const auto bad = verify_h_colouring(p, s4_host(), all_g0);
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->vertex, 0);
  EXPECT_THROW(pair_from_s4_colouring(p, all_g0), PreconditionError);
  const auto pms = all_pms(p, {});
  EXPECT_THROW(s4_colouring_from_pair(p, {pms[0], pms[0]}), PreconditionError);
}

TEST(Certificates, SearchesAgreeWithOracles) {
  std::mt19937 rng(3);
  const auto graphs = bridgeless_upto(12);
  for (int round = 0; round < 40; ++round) {
    const Graph& g = graphs[rng() % graphs.size()];
    const auto fr = find_fr_triple(g);
    ASSERT_TRUE(fr.found);
    EXPECT_EQ(mask_of(fr.found->m[0].edges) & mask_of(fr.found->m[1].edges) & mask_of(fr.found->m[2].edges), 0u);
    const auto s4 = find_s4_pair(g);
    ASSERT_TRUE(s4.found);
    EXPECT_TRUE(oracle::bipartite(g, oracle::all_edges(g) & ~(mask_of(s4.found->first.edges) | mask_of(s4.found->second.edges))));
    const EdgeId e = static_cast<EdgeId>(rng() % g.edge_count());
    const int i = static_cast<int>(rng() % 3);
    const auto spec = find_fr_triple(g, FrequencySpec::edge(e, i));
    ASSERT_TRUE(spec.found);
    EXPECT_EQ(frequency({spec.found->m[0], spec.found->m[1], spec.found->m[2]}, e), i);
  }
}
