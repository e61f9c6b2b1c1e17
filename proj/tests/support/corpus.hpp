#pragma once

// Test graphs built from the named graphs: Petersen joined to small cubic
// graphs across 3-cuts and 2-cuts (oddness 2), and K4 / a ring with
// Petersen pieces spliced in (oddness 4).

#include <string>
#include <utility>
#include <vector>

#include "cubicpm/constructions.hpp"
#include "cubicpm/named_graphs.hpp"

namespace corpus {

using cubicpm::Graph;

struct Named {
  std::string name;
  Graph graph;
};

inline std::vector<Named> small_partners() {
  return {{"k4", cubicpm::k4()},
          {"k33", cubicpm::k33()},
          {"prism", cubicpm::prism()},
          {"cube", cubicpm::cube()},
          {"petersen", cubicpm::petersen()}};
}

/// Petersen plus its 3-cut and 2-cut connections with each small partner:
/// 11 graphs on 10..20 vertices.
inline std::vector<Named> petersen_family() {
  std::vector<Named> out{{"petersen", cubicpm::petersen()}};
  for (const auto& p : small_partners()) {
    out.push_back({"petersen*" + p.name, cubicpm::three_cut_connection(cubicpm::petersen(), 0, p.graph, 0).graph});
  }
  for (const auto& p : small_partners()) {
    out.push_back({"petersen~" + p.name, cubicpm::two_cut_connection(cubicpm::petersen(), 0, p.graph, 0).graph});
  }
  return out;
}

/// K4 with its first `count` vertices each replaced by a Petersen graph
/// minus a vertex (3-cut connections).
inline Graph k4_with_petersens(int count) {
  Graph g = cubicpm::k4();
  std::vector<cubicpm::VertexId> at{0, 1, 2, 3};
  for (int i = 0; i < count; ++i) {
    const auto r = cubicpm::three_cut_connection(g, at[i], cubicpm::petersen(), 0);
    for (int j = i + 1; j < 4; ++j) at[j] = *r.vertex_map[0][at[j]];
    g = r.graph;
  }
  return g;
}

/// Four copies of Petersen minus an edge, closed into a ring: the ends of
/// the removed edge in copy i are joined to the ends in copy i + 1.
inline Graph petersen_ring(int copies = 4) {
  const Graph p = cubicpm::petersen();
  // Petersen minus edge 0 = (0, 1): its ends are 0 and 1.
  Graph g(10 * copies);
  for (int c = 0; c < copies; ++c) {
    for (cubicpm::EdgeId e = 1; e < p.edge_count(); ++e) g.add_edge(10 * c + p.edge(e).a, 10 * c + p.edge(e).b);
  }
  for (int c = 0; c < copies; ++c) g.add_edge(10 * c + 1, 10 * ((c + 1) % copies) + 0);
  return g;
}

inline std::vector<Named> oddness_four() {
  return {{"k4+3petersen", k4_with_petersens(3)},
          {"k4+4petersen", k4_with_petersens(4)},
          {"petersen-ring", petersen_ring(4)}};
}

/// Three blocks on a path of two bridges: a K4 with one edge subdivided at
/// each end, and in the middle `middle` with edges e1 and e2 subdivided.
inline Graph bridge_path(const Graph& middle, cubicpm::EdgeId e1, cubicpm::EdgeId e2) {
  const int n = middle.vertex_count();
  Graph g(n + 12);
  const int p = n, q = n + 1;
  for (cubicpm::EdgeId e = 0; e < middle.edge_count(); ++e) {
    const auto& ed = middle.edge(e);
    if (e == e1) {
      g.add_edge(ed.a, p);
      g.add_edge(p, ed.b);
    } else if (e == e2) {
      g.add_edge(ed.a, q);
      g.add_edge(q, ed.b);
    } else {
      g.add_edge(ed.a, ed.b);
    }
  }
  for (int end = 0; end < 2; ++end) {
    const int m = n + 2 + 5 * end;  // subdivision vertex, then the K4
    const int k0 = m + 1, k1 = m + 2, k2 = m + 3, k3 = m + 4;
    for (auto [a, b] : {std::pair{k0, m}, {m, k1}, {k0, k2}, {k0, k3}, {k1, k2}, {k1, k3}, {k2, k3}}) g.add_edge(a, b);
    g.add_edge(end == 0 ? p : q, m);
  }
  return g;
}

}  // namespace corpus
