#pragma once

// H-colourings and the S4 host: a proper edge map f: E(G) -> E(H) such
// that each vertex star of G lands inside some vertex star of H.

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "cubicpm/conjectures.hpp"
#include "cubicpm/error.hpp"
#include "cubicpm/graph.hpp"
#include "cubicpm/matching.hpp"

namespace cubicpm {

/// Edge ids of the S4 host double as colour names g0..g4.
enum S4Edge : EdgeId { g0 = 0, g1 = 1, g2 = 2, g3 = 3, g4 = 4 };

/// v1..v4 are vertices 0..3; g3 and g4 are parallel between v1 and v2,
/// g1 = v1v3, g2 = v2v3 and g0 = v3v4 is pendant.
inline Graph s4_host() {
  Graph h(4, {{2, 3}, {0, 2}, {1, 2}, {0, 1}, {0, 1}});
  h.vertex_labels = {"v1", "v2", "v3", "v4"};
  h.edge_labels = {"g0", "g1", "g2", "g3", "g4"};
  return h;
}

/// Edge id -> colour (an S4Edge value).
using S4Colouring = std::vector<EdgeId>;

struct HViolation {
  VertexId vertex = -1;
  std::string reason;
};

/// Checks properness and star containment of `f` (edge of g -> edge of h).
inline std::optional<HViolation> verify_h_colouring(const Graph& g, const Graph& h, const std::vector<EdgeId>& f) {
  if (static_cast<int>(f.size()) != g.edge_count()) throw PreconditionError("edge map is not total");
  for (EdgeId x : f) {
    if (!h.has_edge(x)) throw PreconditionError("edge map leaves the host graph");
  }
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    std::vector<EdgeId> image;
    for (EdgeId e : g.incident(u)) image.push_back(f[e]);
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
      return HViolation{u, "two incident edges share colour " + std::to_string(*std::adjacent_find(image.begin(), image.end()))};
    }
    bool contained = false;
    for (VertexId v = 0; v < h.vertex_count() && !contained; ++v) {
      const auto& star = h.incident(v);
      contained = std::all_of(image.begin(), image.end(),
                              [&](EdgeId x) { return std::find(star.begin(), star.end(), x) != star.end(); });
    }
    if (!contained) return HViolation{u, "incident colours fit no vertex star of the host"};
  }
  return std::nullopt;
}

namespace detail {

/// Two-colours each path/cycle component of `sub` (max degree 2) with
/// `first`/`second`, starting from the component's lowest-id edge.
inline void alternate(const Graph& g, const EdgeSet& sub, EdgeId first, EdgeId second, std::vector<EdgeId>& out) {
  std::vector<bool> done(g.edge_count(), false);
  for (EdgeId s : sub.members()) {
    if (done[s]) continue;
    done[s] = true;
    out[s] = first;
    std::deque<EdgeId> queue{s};
    while (!queue.empty()) {
      const EdgeId e = queue.front();
      queue.pop_front();
      for (VertexId v : {g.edge(e).a, g.edge(e).b}) {
        for (EdgeId x : g.incident(v)) {
          if (x == e || !sub.contains(x) || done[x]) continue;
          done[x] = true;
          out[x] = out[e] == first ? second : first;
          queue.push_back(x);
        }
      }
    }
  }
}

}  // namespace detail

/// M1 n M2 gets g0; the even cycles of the symmetric difference take g3 on
/// M1 edges and g4 on M2 edges; the bipartite complement alternates g1/g2.
inline S4Colouring s4_colouring_from_pair(const Graph& g, const S4Pair& p) {
  if (!is_perfect_matching(g, p.first.edges) || !is_perfect_matching(g, p.second.edges)) {
    throw PreconditionError("s4 colouring: not a pair of perfect matchings");
  }
  if (!verify_s4(g, p).bipartite) throw PreconditionError("s4 colouring: complement of the union is not bipartite");
  S4Colouring f(g.edge_count(), g0);
  const EdgeSet both = p.first.edges & p.second.edges;
  for (EdgeId e : (p.first.edges - both).members()) f[e] = g3;
  for (EdgeId e : (p.second.edges - both).members()) f[e] = g4;
  detail::alternate(g, (p.first.edges | p.second.edges).complement(), g1, g2, f);
  return f;
}

inline S4Pair pair_from_s4_colouring(const Graph& g, const S4Colouring& f) {
  if (auto bad = verify_h_colouring(g, s4_host(), f)) {
    throw PreconditionError("not an S4-colouring at vertex " + std::to_string(bad->vertex) + ": " + bad->reason);
  }
  EdgeSet m1(g.edge_count());
  EdgeSet m2(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (f[e] == g3 || f[e] == g0) m1.insert(e);
    if (f[e] == g4 || f[e] == g0) m2.insert(e);
  }
  if (!is_perfect_matching(g, m1) || !is_perfect_matching(g, m2)) {
    throw ProofStepViolation("S4-colouring does not split into perfect matchings");
  }
  S4Pair p{{m1}, {m2}};
  if (!verify_s4(g, p).bipartite) throw ProofStepViolation("S4-colouring leaves an odd cycle in g1/g2");
  return p;
}

}  // namespace cubicpm
