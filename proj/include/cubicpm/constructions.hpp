#pragma once

// Graph surgery with id correspondences: 2-cut and 3-cut connections,
// smoothing of parallel pairs, and the gadgets used to move frequency
// prescriptions between graphs.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubicpm/colouring.hpp"
#include "cubicpm/conjectures.hpp"
#include "cubicpm/error.hpp"
#include "cubicpm/graph.hpp"
#include "cubicpm/matching.hpp"
#include "cubicpm/named_graphs.hpp"
#include "cubicpm/structure.hpp"

namespace cubicpm {

/// Output of a construction. `vertex_map[i][v]` / `edge_map[i][e]` give the
/// output id of vertex v / edge e of input copy i, or nothing when it was
/// removed. `anchors` names edges that the construction's users refer to.
struct GadgetResult {
  Graph graph;
  std::vector<std::vector<std::optional<VertexId>>> vertex_map;
  std::vector<std::vector<std::optional<EdgeId>>> edge_map;
  std::vector<EdgeId> new_edges;
  std::map<std::string, EdgeId> anchors;

  EdgeId anchor(const std::string& name) const {
    auto it = anchors.find(name);
    if (it == anchors.end()) throw PreconditionError("no anchor named " + name);
    return it->second;
  }
};

/// Collects copies of input graphs, deletes and adds pieces, then compacts
/// ids. Builder ids are stable until finish().
class GraphBuilder {
 public:
  int add_copy(const Graph& g) {
    Copy c;
    for (VertexId v = 0; v < g.vertex_count(); ++v) c.vertices.push_back(add_vertex());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      c.edges.push_back(add_edge(c.vertices[g.edge(e).a], c.vertices[g.edge(e).b]));
      edges_.back().fresh = false;
    }
    copies_.push_back(std::move(c));
    return static_cast<int>(copies_.size()) - 1;
  }

  VertexId add_vertex() {
    alive_.push_back(true);
    return static_cast<VertexId>(alive_.size()) - 1;
  }
  EdgeId add_edge(VertexId a, VertexId b) {
    if (a == b) throw PreconditionError("construction would create a loop");
    edges_.push_back({a, b, true, true});
    return static_cast<EdgeId>(edges_.size()) - 1;
  }
  void remove_edge(EdgeId e) { edges_.at(e).alive = false; }
  void remove_vertex(VertexId v) {
    alive_.at(v) = false;
    for (auto& e : edges_) {
      if (e.a == v || e.b == v) e.alive = false;
    }
  }

  VertexId vertex(int copy, VertexId v) const { return copies_.at(copy).vertices.at(v); }
  EdgeId edge(int copy, EdgeId e) const { return copies_.at(copy).edges.at(e); }

  /// `anchors` are given in builder edge ids.
  GadgetResult finish(const std::map<std::string, EdgeId>& anchors = {}) const {
    std::vector<VertexId> vmap(alive_.size(), -1);
    int n = 0;
    for (std::size_t v = 0; v < alive_.size(); ++v) {
      if (alive_[v]) vmap[v] = n++;
    }
    GadgetResult out;
    out.graph = Graph(n);
    std::vector<EdgeId> emap(edges_.size(), -1);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto& x = edges_[e];
      if (!x.alive) continue;
      emap[e] = out.graph.add_edge(vmap[x.a], vmap[x.b]);
      if (x.fresh) out.new_edges.push_back(emap[e]);
    }
    for (const auto& c : copies_) {
      auto& vm = out.vertex_map.emplace_back();
      for (VertexId v : c.vertices) vm.push_back(vmap[v] >= 0 ? std::optional<VertexId>(vmap[v]) : std::nullopt);
      auto& em = out.edge_map.emplace_back();
      for (EdgeId e : c.edges) em.push_back(emap[e] >= 0 ? std::optional<EdgeId>(emap[e]) : std::nullopt);
    }
    for (const auto& [name, e] : anchors) {
      if (emap.at(e) < 0) throw PreconditionError("anchor " + name + " was removed");
      out.anchors[name] = emap[e];
    }
    return out;
  }

 private:
  struct Copy {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
  };
  struct BuilderEdge {
    VertexId a;
    VertexId b;
    bool alive;
    bool fresh;
  };
  std::vector<bool> alive_;
  std::vector<BuilderEdge> edges_;
  std::vector<Copy> copies_;
};

enum class TwoCutOrientation { parallel, crossed };

namespace detail {

/// Replaces builder edges e1 = u1v1 and e2 = u2v2 by u1u2, v1v2 (parallel)
/// or u1v2, v1u2 (crossed). Returns the two new builder edges.
inline std::array<EdgeId, 2> two_cut(GraphBuilder& b, const Graph& g1, int c1, EdgeId e1, const Graph& g2, int c2,
                                     EdgeId e2, TwoCutOrientation orientation) {
  const VertexId u1 = b.vertex(c1, g1.edge(e1).a);
  const VertexId v1 = b.vertex(c1, g1.edge(e1).b);
  VertexId u2 = b.vertex(c2, g2.edge(e2).a);
  VertexId v2 = b.vertex(c2, g2.edge(e2).b);
  if (orientation == TwoCutOrientation::crossed) std::swap(u2, v2);
  b.remove_edge(b.edge(c1, e1));
  b.remove_edge(b.edge(c2, e2));
  return {b.add_edge(u1, u2), b.add_edge(v1, v2)};
}

/// Neighbours of v along its incident edges in id order; v must have degree
/// 3 and three distinct neighbours.
inline std::array<VertexId, 3> three_neighbours(const Graph& g, VertexId v) {
  if (!g.has_vertex(v)) throw PreconditionError("3-cut connection: no vertex " + std::to_string(v));
  if (g.degree(v) != 3) throw PreconditionError("3-cut connection: vertex " + std::to_string(v) + " does not have degree 3");
  const auto nb = g.neighbours(v);
  if (nb[0] == nb[1] || nb[0] == nb[2] || nb[1] == nb[2]) {
    throw PreconditionError("3-cut connection: vertex " + std::to_string(v) + " has a repeated neighbour");
  }
  return {nb[0], nb[1], nb[2]};
}

inline void require_edge(const Graph& g, EdgeId e, const char* what) {
  if (!g.has_edge(e)) throw PreconditionError(std::string(what) + ": no edge " + std::to_string(e));
}

}  // namespace detail

/// [G1 - e1] u [G2 - e2] plus two edges joining the ends of e1 and e2.
/// Copies 0 and 1 are g1 and g2; anchors "uu" and "vv" are the new edges.
inline GadgetResult two_cut_connection(const Graph& g1, EdgeId e1, const Graph& g2, EdgeId e2,
                                       TwoCutOrientation orientation = TwoCutOrientation::parallel) {
  detail::require_edge(g1, e1, "2-cut connection");
  detail::require_edge(g2, e2, "2-cut connection");
  GraphBuilder b;
  const int c1 = b.add_copy(g1);
  const int c2 = b.add_copy(g2);
  const auto added = detail::two_cut(b, g1, c1, e1, g2, c2, e2, orientation);
  return b.finish({{"uu", added[0]}, {"vv", added[1]}});
}

/// [G1 - v1] u [G2 - v2] plus three edges: the neighbour of v1 along its
/// i-th incident edge is joined to the neighbour of v2 along its
/// pairing[i]-th incident edge. Anchors "cut0".."cut2" follow v1's order.
inline GadgetResult three_cut_connection(const Graph& g1, VertexId v1, const Graph& g2, VertexId v2,
                                         std::array<int, 3> pairing = {0, 1, 2}) {
  auto sorted = pairing;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{0, 1, 2}) throw PreconditionError("3-cut connection: pairing is not a permutation");
  const auto n1 = detail::three_neighbours(g1, v1);
  const auto n2 = detail::three_neighbours(g2, v2);
  GraphBuilder b;
  const int c1 = b.add_copy(g1);
  const int c2 = b.add_copy(g2);
  b.remove_vertex(b.vertex(c1, v1));
  b.remove_vertex(b.vertex(c2, v2));
  std::map<std::string, EdgeId> anchors;
  for (int i = 0; i < 3; ++i) {
    anchors["cut" + std::to_string(i)] = b.add_edge(b.vertex(c1, n1[i]), b.vertex(c2, n2[pairing[i]]));
  }
  return b.finish(anchors);
}

/// Correspondence between perfect matchings of a multigraph G' and of the
/// multigraph G obtained by smoothing a parallel pair uv of G'.
struct PMCorrespondence {
  Graph source;  // G'
  Graph target;  // G
  VertexId u = -1, v = -1, x = -1, y = -1;  // ids in G'
  EdgeId xu = -1, vy = -1;                   // ids in G'
  std::array<EdgeId, 2> parallel{-1, -1};    // ids in G'
  EdgeId xy = -1;                            // the added edge, id in G
  std::vector<std::optional<EdgeId>> edge_map;  // G' edge -> G edge

  /// M = M' u xy - {xu, vy} if xu in M', else M' minus its uv edge.
  PerfectMatching forward(const PerfectMatching& m) const {
    if (!is_perfect_matching(source, m.edges)) throw PreconditionError("smoothing: not a perfect matching of the source");
    EdgeSet out(target.edge_count());
    for (EdgeId e : m.edges.members()) {
      if (edge_map[e]) out.insert(*edge_map[e]);
    }
    if (m.contains(xu)) out.insert(xy);
    return {out};
  }

  /// Inverse direction; when xy is unused, u and v are matched by the
  /// parallel edge `which` (0 or 1).
  PerfectMatching backward(const PerfectMatching& m, int which = 0) const {
    if (!is_perfect_matching(target, m.edges)) throw PreconditionError("smoothing: not a perfect matching of the target");
    std::vector<EdgeId> back(target.edge_count(), -1);
    for (EdgeId e = 0; e < source.edge_count(); ++e) {
      if (edge_map[e]) back[*edge_map[e]] = e;
    }
    EdgeSet out(source.edge_count());
    for (EdgeId e : m.edges.members()) {
      if (e == xy) {
        out.insert(xu);
        out.insert(vy);
      } else {
        out.insert(back[e]);
      }
    }
    if (!m.contains(xy)) out.insert(parallel.at(which));
    return {out};
  }
};

/// Deletes u and v (joined by exactly two parallel edges) and joins their
/// other neighbours x and y by a new edge, which gets the last id.
inline PMCorrespondence smooth(const Graph& g, std::array<EdgeId, 2> pair) {
  detail::require_edge(g, pair[0], "smooth");
  detail::require_edge(g, pair[1], "smooth");
  const Edge p = g.edge(pair[0]);
  const Edge q = g.edge(pair[1]);
  if (pair[0] == pair[1] || !((p.a == q.a && p.b == q.b) || (p.a == q.b && p.b == q.a))) {
    throw PreconditionError("smooth: edges are not a parallel pair");
  }
  PMCorrespondence c;
  c.source = g;
  c.u = p.a;
  c.v = p.b;
  if (g.edges_between(c.u, c.v).size() != 2) {
    throw PreconditionError("smooth: the pair is part of a triple parallel class (3-dipole), nothing to smooth");
  }
  if (g.degree(c.u) != 3 || g.degree(c.v) != 3) throw PreconditionError("smooth: endpoints must have degree 3");
  c.parallel = {std::min(pair[0], pair[1]), std::max(pair[0], pair[1])};
  for (EdgeId e : g.incident(c.u)) {
    if (e != pair[0] && e != pair[1]) c.xu = e;
  }
  for (EdgeId e : g.incident(c.v)) {
    if (e != pair[0] && e != pair[1]) c.vy = e;
  }
  c.x = g.edge(c.xu).other(c.u);
  c.y = g.edge(c.vy).other(c.v);
  if (c.x == c.y) throw PreconditionError("smooth: x and y coincide, smoothing would create a loop");

  GraphBuilder b;
  b.add_copy(g);
  const EdgeId xy = b.add_edge(b.vertex(0, c.x), b.vertex(0, c.y));
  b.remove_vertex(b.vertex(0, c.u));
  b.remove_vertex(b.vertex(0, c.v));
  auto r = b.finish({{"xy", xy}});
  c.target = std::move(r.graph);
  c.xy = r.anchors["xy"];
  c.edge_map = std::move(r.edge_map[0]);
  return c;
}

// --- Gadgets -------------------------------------------------------------

namespace detail {

inline void require_bridgeless_cubic(const Graph& g, const char* what) {
  const auto r = validate(g, {.connected = true, .cubic = true, .bridgeless = true, .simple = false});
  if (!r.ok()) throw PreconditionError(std::string(what) + ": input must be a connected bridgeless cubic graph");
}

/// Frequencies of the listed edges over a list of matchings.
inline std::vector<int> frequencies(const std::vector<PerfectMatching>& ms, const std::vector<EdgeId>& edges) {
  std::vector<int> out;
  for (EdgeId e : edges) out.push_back(frequency(ms, e));
  return out;
}

/// Restricts gadget matchings to copy `copy` of g - w, reading w's three
/// edges off the cut edges `cut` (in w's incident order).
inline std::vector<PerfectMatching> restrict_to_copy(const Graph& g, VertexId w, const GadgetResult& gadget, int copy,
                                                     const std::array<EdgeId, 3>& cut,
                                                     const std::vector<PerfectMatching>& ms) {
  std::vector<PerfectMatching> out;
  const auto& inc = g.incident(w);
  for (const auto& m : ms) {
    EdgeSet s(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto pos = std::find(inc.begin(), inc.end(), e) - inc.begin();
      const bool in = pos < 3 ? m.contains(cut[pos]) : m.contains(gadget.edge_map[copy][e].value());
      if (in) s.insert(e);
    }
    if (!is_perfect_matching(g, s)) throw ProofStepViolation("restriction to a copy is not a perfect matching");
    out.push_back({s});
  }
  return out;
}

}  // namespace detail

/// K4 on u1..u4 (0..3) with copy 1 of g 3-cut-connected at u1 and copy 2
/// at u2, through w's edges a, b, c (incident order). a1 and a2 coincide in
/// the edge replacing u1u2; b1, b2 meet at u3 and c1, c2 at u4.
/// Copies: 0 = K4, 1 and 2 = g. Anchors a1, a2, b1, c1, b2, c2, u3u4.
inline GadgetResult gadget_k4star(const Graph& g, VertexId w) {
  detail::require_bridgeless_cubic(g, "K4* gadget");
  const auto nw = detail::three_neighbours(g, w);
  GraphBuilder b;
  const int k = b.add_copy(k4());
  const int g1 = b.add_copy(g);
  const int g2 = b.add_copy(g);
  const VertexId u3 = b.vertex(k, 2);
  const VertexId u4 = b.vertex(k, 3);
  const EdgeId u3u4 = b.edge(k, 5);
  b.remove_vertex(b.vertex(k, 0));
  b.remove_vertex(b.vertex(k, 1));
  b.remove_vertex(b.vertex(g1, w));
  b.remove_vertex(b.vertex(g2, w));
  const EdgeId a = b.add_edge(b.vertex(g1, nw[0]), b.vertex(g2, nw[0]));
  const EdgeId b1 = b.add_edge(b.vertex(g1, nw[1]), u3);
  const EdgeId c1 = b.add_edge(b.vertex(g1, nw[2]), u4);
  const EdgeId b2 = b.add_edge(b.vertex(g2, nw[1]), u3);
  const EdgeId c2 = b.add_edge(b.vertex(g2, nw[2]), u4);
  return b.finish({{"a1", a}, {"a2", a}, {"b1", b1}, {"c1", c1}, {"b2", b2}, {"c2", c2}, {"u3u4", u3u4}});
}

/// From an FR-triple of the K4* gadget with u3u4 of frequency 2, an
/// FR-triple of g in which w's edges (a, b, c) have frequencies (2, 1, 0).
inline FRTriple extract_fr_210(const Graph& g, VertexId w, const GadgetResult& gadget, const FRTriple& t) {
  const std::vector<PerfectMatching> ms(t.m.begin(), t.m.end());
  if (frequency(ms, gadget.anchor("u3u4")) != 2) throw PreconditionError("extract (2,1,0): u3u4 must have frequency 2");
  if (verify_fr(t)) throw PreconditionError("extract (2,1,0): not an FR-triple of the gadget");
  for (int copy : {1, 2}) {
    const std::string i = std::to_string(copy);
    const std::array<EdgeId, 3> cut{gadget.anchor("a" + i), gadget.anchor("b" + i), gadget.anchor("c" + i)};
    if (detail::frequencies(ms, {cut.begin(), cut.end()}) != std::vector<int>{2, 1, 0}) continue;
    const auto r = detail::restrict_to_copy(g, w, gadget, copy, cut, ms);
    FRTriple out{{r[0], r[1], r[2]}};
    if (verify_fr(out)) throw ProofStepViolation("extract (2,1,0): restricted triple has a common edge");
    return out;
  }
  throw ProofStepViolation("extract (2,1,0): no copy carries frequencies (2,1,0)");
}

namespace detail {

// Petersen vertices receiving copies of g, and for each the Petersen
// neighbour joined to w's edges a, b, c.
inline constexpr std::array<VertexId, 4> kPStarSet{0, 2, 9, 8};
inline constexpr std::array<std::array<VertexId, 3>, 4> kPStarAttach{{{1, 4, 5}, {3, 7, 1}, {7, 4, 6}, {6, 5, 3}}};

}  // namespace detail

/// Petersen with a copy of g 3-cut-connected at each vertex of the
/// independent set {0, 2, 9, 8}. Copies: 0 = Petersen, 1..4 = g.
/// Anchors a1..c4 and e, the Petersen edge 1-6 adjacent to a1, c2, c3, a4.
inline GadgetResult gadget_pstar(const Graph& g, VertexId w) {
  detail::require_bridgeless_cubic(g, "P* gadget");
  const auto nw = detail::three_neighbours(g, w);
  const Graph p = petersen();
  GraphBuilder b;
  const int pc = b.add_copy(p);
  std::map<std::string, EdgeId> anchors{{"e", b.edge(pc, p.edges_between(1, 6).front())}};
  for (int i = 0; i < 4; ++i) {
    const int copy = b.add_copy(g);
    b.remove_vertex(b.vertex(copy, w));
    b.remove_vertex(b.vertex(pc, detail::kPStarSet[i]));
    for (int j = 0; j < 3; ++j) {
      anchors[std::string(1, static_cast<char>('a' + j)) + std::to_string(i + 1)] =
          b.add_edge(b.vertex(copy, nw[j]), b.vertex(pc, detail::kPStarAttach[i][j]));
    }
  }
  return b.finish(anchors);
}

/// From an FR-triple of P* with e of frequency 2, an FR-triple of g with
/// frequencies (1, 1, 1) on w's edges.
inline FRTriple extract_fr_111(const Graph& g, VertexId w, const GadgetResult& gadget, const FRTriple& t) {
  const std::vector<PerfectMatching> ms(t.m.begin(), t.m.end());
  if (frequency(ms, gadget.anchor("e")) != 2) throw PreconditionError("extract (1,1,1): e must have frequency 2");
  if (verify_fr(t)) throw PreconditionError("extract (1,1,1): not an FR-triple of the gadget");
  for (int copy = 1; copy <= 4; ++copy) {
    const std::string i = std::to_string(copy);
    const std::array<EdgeId, 3> cut{gadget.anchor("a" + i), gadget.anchor("b" + i), gadget.anchor("c" + i)};
    if (detail::frequencies(ms, {cut.begin(), cut.end()}) != std::vector<int>{1, 1, 1}) continue;
    const auto r = detail::restrict_to_copy(g, w, gadget, copy, cut, ms);
    FRTriple out{{r[0], r[1], r[2]}};
    if (verify_fr(out)) throw ProofStepViolation("extract (1,1,1): restricted triple has a common edge");
    return out;
  }
  throw ProofStepViolation("extract (1,1,1): no copy carries frequencies (1,1,1)");
}

namespace detail {

// The path f1 f2 f3 = (0,1) (1,2) (2,3) in k4()'s edge ids.
inline constexpr std::array<EdgeId, 3> kK4Path{0, 3, 5};

/// Adds K4 with copies of g 2-cut-connected onto f1 (at edge a of the first
/// copy) and f2. Returns builder ids of the K4 copy and the two g copies.
inline std::array<int, 3> add_k4prime(GraphBuilder& b, const Graph& g, EdgeId a) {
  static const Graph k = k4();
  const int kc = b.add_copy(k);
  const int g1 = b.add_copy(g);
  const int g2 = b.add_copy(g);
  two_cut(b, k, kc, kK4Path[0], g, g1, a, TwoCutOrientation::parallel);
  two_cut(b, k, kc, kK4Path[1], g, g2, a, TwoCutOrientation::parallel);
  return {kc, g1, g2};
}

}  // namespace detail


/// K4 with copy 1 of g 2-cut-connected between f1 = (0,1) and a, and copy 2
/// between f2 = (1,2) and a; f3 = (2,3) stays. Copies: 0 = K4, 1 and 2 = g.
/// Anchor f3.
inline GadgetResult gadget_k4prime(const Graph& g, EdgeId a) {
  detail::require_bridgeless_cubic(g, "K4' gadget");
  detail::require_edge(g, a, "K4' gadget");
  GraphBuilder b;
  const auto ids = detail::add_k4prime(b, g, a);
  return b.finish({{"f3", b.edge(ids[0], detail::kK4Path[2])}});
}

/// Vertex count of gadget_h(g, .) without building it.
inline long long gadget_h_vertex_count(const Graph& g) { return 10 + 15LL * (4 + 2LL * g.vertex_count()); }

/// Petersen with every edge e_i 2-cut-connected to f3 of its own copy T_i
/// of K4'. Copies: 0 = Petersen, then for edge i of the Petersen graph
/// 1 + 3i = the K4 of T_i, 2 + 3i = G_1^i, 3 + 3i = G_2^i.
/// Refuses outputs above `max_vertices` unless `force`.
inline GadgetResult gadget_h(const Graph& g, EdgeId a, int max_vertices = 512, bool force = false) {
  detail::require_bridgeless_cubic(g, "H gadget");
  detail::require_edge(g, a, "H gadget");
  const long long n = gadget_h_vertex_count(g);
  if (!force && n > max_vertices) {
    throw CapExceeded("H gadget would have " + std::to_string(n) + " vertices, above cap " + std::to_string(max_vertices));
  }
  const Graph p = petersen();
  static const Graph k = k4();
  GraphBuilder b;
  const int pc = b.add_copy(p);
  for (EdgeId i = 0; i < p.edge_count(); ++i) {
    const auto ids = detail::add_k4prime(b, g, a);
    detail::two_cut(b, p, pc, i, k, ids[0], detail::kK4Path[2], TwoCutOrientation::parallel);
  }
  return b.finish();
}

/// g 3-cut-connected at w to the Petersen graph at vertex 0, joining w's
/// edges a, b, c (incident order) towards Petersen vertices 1, 4, 5.
/// Copies: 0 = g, 1 = Petersen. Anchors a_w, b_w, c_w and d = the Petersen
/// edge (5,7), adjacent to c_w.
inline GadgetResult gadget_gwpv(const Graph& g, VertexId w) {
  detail::require_bridgeless_cubic(g, "G(w)*P(v) gadget");
  const auto nw = detail::three_neighbours(g, w);
  const Graph p = petersen();
  GraphBuilder b;
  const int gc = b.add_copy(g);
  const int pc = b.add_copy(p);
  b.remove_vertex(b.vertex(gc, w));
  b.remove_vertex(b.vertex(pc, 0));
  std::map<std::string, EdgeId> anchors{{"d", b.edge(pc, p.edges_between(5, 7).front())}};
  const std::array<VertexId, 3> to{1, 4, 5};
  const std::array<const char*, 3> names{"a_w", "b_w", "c_w"};
  for (int j = 0; j < 3; ++j) anchors[names[j]] = b.add_edge(b.vertex(gc, nw[j]), b.vertex(pc, to[j]));
  return b.finish(anchors);
}

/// From an S4-pair of G(w)*P(v) with d of frequency 2, an S4-pair of g with
/// frequencies (1, 1, 0) on w's edges.
inline S4Pair extract_s4_110(const Graph& g, VertexId w, const GadgetResult& gadget, const S4Pair& p) {
  const std::vector<PerfectMatching> ms{p.first, p.second};
  if (frequency(ms, gadget.anchor("d")) != 2) throw PreconditionError("extract (1,1,0): d must have frequency 2");
  if (!verify_s4(gadget.graph, p).bipartite) throw PreconditionError("extract (1,1,0): not an S4-pair of the gadget");
  const std::array<EdgeId, 3> cut{gadget.anchor("a_w"), gadget.anchor("b_w"), gadget.anchor("c_w")};
  const auto f = detail::frequencies(ms, {cut.begin(), cut.end()});
  if (f != std::vector<int>{1, 1, 0}) {
    throw ProofStepViolation("extract (1,1,0): cut frequencies are not (1,1,0); the Petersen side would be 3-edge-colourable");
  }
  const auto r = detail::restrict_to_copy(g, w, gadget, 0, cut, ms);
  S4Pair out{r[0], r[1]};
  if (!verify_s4(g, out).bipartite) throw ProofStepViolation("extract (1,1,0): restricted pair leaves an odd cycle");
  return out;
}

// --- Graphs with bridges ---------------------------------------------------

namespace detail {

/// The subgraph induced on `keep` (ascending output ids) with an extra edge
/// between `extra_a` and `extra_b` (vertices of g) appended last.
struct BlockGraph {
  Graph graph;
  std::vector<EdgeId> to_parent;  // local edge -> g edge, -1 for the extra edge
  std::vector<VertexId> local;    // g vertex -> local id or -1
};

inline BlockGraph block_graph(const Graph& g, const std::vector<VertexId>& keep, VertexId extra_a, VertexId extra_b) {
  BlockGraph out;
  out.local.assign(g.vertex_count(), -1);
  std::vector<VertexId> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) out.local[sorted[i]] = static_cast<VertexId>(i);
  out.graph = Graph(static_cast<int>(sorted.size()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const VertexId a = out.local[g.edge(e).a];
    const VertexId b = out.local[g.edge(e).b];
    if (a < 0 || b < 0) continue;
    out.graph.add_edge(a, b);
    out.to_parent.push_back(e);
  }
  if (extra_a == extra_b) throw PreconditionError("bridge path: closing edge would be a loop");
  out.graph.add_edge(out.local[extra_a], out.local[extra_b]);
  out.to_parent.push_back(-1);
  return out;
}

}  // namespace detail

/// Per-block data of the bridge-path composition.
struct BridgeBlock {
  Graph derived;                      // B_i'
  FrequencyConstraints constraints;   // in B_i' edge ids
  std::vector<EdgeId> to_parent;      // B_i' edge -> g edge, -1 for the added edge
  std::optional<S4Pair> pair;
};

struct BridgePathResult {
  std::optional<S4Pair> pair;  // empty only for a bridgeless input with no S4-pair
  std::vector<BridgeBlock> blocks;
  std::uint64_t candidates_examined = 0;
};

/// S4-pair of a connected cubic graph whose bridges e_1..e_k lie on one
/// path, assembled from S4-pairs of the derived blocks: end blocks lose
/// their bridge vertex u and gain the edge xy between u's other
/// neighbours, and must give both remaining edges at x frequency 1; middle
/// blocks gain the edge joining their two bridge ends, with frequency 2.
inline BridgePathResult bridge_path_s4(const Graph& g, const Limits& limits = {}) {
  detail::require_cubic(g, "bridge path");
  const auto bd = block_decomposition(g);
  BridgePathResult out;
  if (bd.bridges.empty()) {
    const auto r = find_s4_pair(g, FrequencyConstraints{}, std::nullopt, limits);
    out.pair = r.found;
    out.candidates_examined = r.candidates_examined;
    return out;
  }
  if (!bd.path_flag) throw PreconditionError("bridge path: bridges do not lie on a single path; unsupported");

  const int k = static_cast<int>(bd.bridges.size());
  std::vector<int> block_of(g.vertex_count(), -1);
  for (int i = 0; i <= k; ++i) {
    for (VertexId v : bd.blocks[i]) block_of[v] = i;
  }
  // end_in[i] = endpoint of bridge i in block i, start_in[i+1] = the other.
  std::vector<VertexId> end_in(k), start_in(k + 1, -1);
  for (int i = 0; i < k; ++i) {
    const Edge& e = g.edge(bd.bridges[i]);
    end_in[i] = block_of[e.a] == i ? e.a : e.b;
    start_in[i + 1] = e.other(end_in[i]);
  }

  auto end_block = [&](int i, VertexId u) {
    std::vector<VertexId> others;
    std::vector<EdgeId> via;
    for (EdgeId e : g.incident(u)) {
      if (block_of[g.edge(e).other(u)] == i) {
        others.push_back(g.edge(e).other(u));
        via.push_back(e);
      }
    }
    if (others.size() != 2) throw PreconditionError("bridge path: end block vertex does not have two block neighbours");
    const VertexId x = std::min(others[0], others[1]);
    const VertexId y = std::max(others[0], others[1]);
    std::vector<VertexId> keep;
    for (VertexId v : bd.blocks[i]) {
      if (v != u) keep.push_back(v);
    }
    auto bg = detail::block_graph(g, keep, x, y);
    BridgeBlock blk;
    const EdgeId added = bg.graph.edge_count() - 1;
    for (EdgeId e : bg.graph.incident(bg.local[x])) {
      if (e != added) blk.constraints.push_back({e, 1});
    }
    blk.derived = std::move(bg.graph);
    blk.to_parent = std::move(bg.to_parent);
    return blk;
  };

  for (int i = 0; i <= k; ++i) {
    BridgeBlock blk;
    if (i == 0) {
      blk = end_block(0, end_in[0]);
    } else if (i == k) {
      blk = end_block(k, start_in[k]);
    } else {
      auto bg = detail::block_graph(g, bd.blocks[i], start_in[i], end_in[i]);
      blk.constraints.push_back({bg.graph.edge_count() - 1, 2});
      blk.derived = std::move(bg.graph);
      blk.to_parent = std::move(bg.to_parent);
    }
    const auto check = validate(blk.derived, {.connected = true, .cubic = true, .bridgeless = true, .simple = false});
    if (!check.ok()) {
      throw PreconditionError("bridge path: derived block " + std::to_string(i + 1) + " is not a bridgeless cubic multigraph");
    }
    const auto r = find_s4_pair(blk.derived, blk.constraints, std::nullopt, limits);
    out.candidates_examined += r.candidates_examined;
    if (!r.found) {
      throw ProofStepViolation("bridge path: derived block " + std::to_string(i + 1) +
                               " has no S4-pair with the prescribed frequencies (counterexample candidate)");
    }
    blk.pair = r.found;
    out.blocks.push_back(std::move(blk));
  }

  EdgeSet m1(g.edge_count());
  EdgeSet m2(g.edge_count());
  for (EdgeId e : bd.bridges) {
    m1.insert(e);
    m2.insert(e);
  }
  for (const auto& blk : out.blocks) {
    for (EdgeId e = 0; e < blk.derived.edge_count(); ++e) {
      if (blk.to_parent[e] < 0) continue;
      if (blk.pair->first.contains(e)) m1.insert(blk.to_parent[e]);
      if (blk.pair->second.contains(e)) m2.insert(blk.to_parent[e]);
    }
  }
  if (!is_perfect_matching(g, m1) || !is_perfect_matching(g, m2)) {
    throw ProofStepViolation("bridge path: assembled edge sets are not perfect matchings");
  }
  S4Pair pair{{m1}, {m2}};
  if (!verify_s4(g, pair).bipartite) throw ProofStepViolation("bridge path: assembled pair leaves an odd cycle");
  out.pair = std::move(pair);
  return out;
}

/// A t-cycle T (vertices 0..t-1) whose vertex i hangs by a bridge from a
/// K4 with one edge subdivided, attached at the subdivision vertex. Every
/// perfect matching contains all t bridges, so no pair of perfect matchings
/// meets the odd cycle T. Block i uses vertices t + 5i .. t + 5i + 4, the
/// subdivision vertex first.
inline Graph no_s4_family(int t) {
  if (t < 3 || t % 2 == 0) throw PreconditionError("no-S4 family needs an odd cycle length t >= 3");
  Graph g(6 * t);
  for (VertexId i = 0; i < t; ++i) g.add_edge(i, (i + 1) % t);
  for (VertexId i = 0; i < t; ++i) {
    const VertexId m = t + 5 * i;
    const VertexId k0 = m + 1, k1 = m + 2, k2 = m + 3, k3 = m + 4;
    g.add_edge(i, m);
    g.add_edge(k0, m);
    g.add_edge(m, k1);
    for (auto [a, b] : {std::pair{k0, k2}, {k0, k3}, {k1, k2}, {k1, k3}, {k2, k3}}) g.add_edge(a, b);
  }
  return g;
}

}  // namespace cubicpm
