#pragma once

// Constructive S4-pairs for cubic graphs of oddness 2 and 4, and covering
// disjoint odd cycles with few perfect matchings via fractional perfect
// matchings (Edmonds' polytope) and 3-cut-hitting matchings.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubicpm/conjectures.hpp"
#include "cubicpm/error.hpp"
#include "cubicpm/graph.hpp"
#include "cubicpm/matching.hpp"

namespace cubicpm {

struct OddnessTwoPath {
  S4Pair pair;
  std::vector<EdgeId> path;  // the M1/E1 alternating path Q, in walk order
};

namespace detail {

/// Edges at positions start, start+2, ... around `c` (start mod length).
inline std::vector<EdgeId> every_other(const Cycle& c, int start, int count) {
  std::vector<EdgeId> out;
  for (int i = 0; i < count; ++i) out.push_back(c.edges[(start + 2 * i) % c.length()]);
  return out;
}

/// Perfect matching of the path left after deleting `v` from odd cycle `c`.
inline std::vector<EdgeId> cycle_minus_vertex_matching(const Cycle& c, VertexId v) {
  const int t = static_cast<int>(std::find(c.vertices.begin(), c.vertices.end(), v) - c.vertices.begin());
  return every_other(c, t + 1, (c.length() - 1) / 2);
}

inline void require_pm(const Graph& g, const EdgeSet& s, const char* what) {
  if (!is_perfect_matching(g, s)) throw ProofStepViolation(std::string(what) + ": built edge set is not a perfect matching");
}

}  // namespace detail

/// Pairs a minimal perfect matching M1 with M2 = (M1 n Q) u (E1 \ Q) u
/// M_C1 u M_C2, where E1 takes alternate edges of every even 2-factor
/// cycle and Q is a shortest path alternating M1/E1 from the first odd
/// cycle to the second.
inline OddnessTwoPath construct_s4_oddness2_path(const Graph& g, const Limits& limits = {}) {
  const auto cert = oddness(g, limits);
  if (cert.oddness != 2) throw PreconditionError("oddness-2 construction needs oddness exactly 2, got " + std::to_string(cert.oddness));
  const PerfectMatching& m1 = cert.witness;
  const TwoFactor tf = two_factor(g, m1);
  const Cycle& c1 = tf.cycles[tf.odd_cycles[0]];
  const Cycle& c2 = tf.cycles[tf.odd_cycles[1]];

  EdgeSet e1(g.edge_count());
  std::vector<int> cycle_of(g.vertex_count(), -1);
  for (std::size_t i = 0; i < tf.cycles.size(); ++i) {
    const Cycle& c = tf.cycles[i];
    for (VertexId v : c.vertices) cycle_of[v] = static_cast<int>(i);
    if (c.odd()) continue;
    const int anchor = static_cast<int>(std::min_element(c.edges.begin(), c.edges.end()) - c.edges.begin());
    for (EdgeId e : detail::every_other(c, anchor, c.length() / 2)) e1.insert(e);
  }
  const int i1 = tf.odd_cycles[0];
  const int i2 = tf.odd_cycles[1];

  auto edge_in = [&](VertexId v, const EdgeSet& s) {
    for (EdgeId e : g.incident(v)) {
      if (s.contains(e)) return e;
    }
    return EdgeId{-1};
  };

  // M1 u E1 is a disjoint union of paths and cycles, and odd-cycle
  // vertices are path ends, so walking from each C1 vertex is the BFS.
  std::optional<std::vector<EdgeId>> best;
  VertexId best_end = -1;
  VertexId best_start = -1;
  std::vector<VertexId> starts = c1.vertices;
  std::sort(starts.begin(), starts.end());
  for (VertexId s : starts) {
    std::vector<EdgeId> walk;
    VertexId cur = s;
    while (true) {
      const EdgeId m = edge_in(cur, m1.edges);
      walk.push_back(m);
      cur = g.edge(m).other(cur);
      if (cycle_of[cur] == i1 || cycle_of[cur] == i2) break;
      const EdgeId e = edge_in(cur, e1);
      walk.push_back(e);
      cur = g.edge(e).other(cur);
    }
    if (cycle_of[cur] != i2) continue;
    if (!best || walk.size() < best->size()) {
      best = walk;
      best_start = s;
      best_end = cur;
    }
  }
  if (!best) throw ProofStepViolation("oddness-2 construction: no M1/E1 alternating path joins the odd cycles");

  const EdgeSet q = EdgeSet::of(g.edge_count(), *best);
  EdgeSet m2 = (m1.edges & q) | (e1 - q);
  for (EdgeId e : detail::cycle_minus_vertex_matching(c1, best_start)) m2.insert(e);
  for (EdgeId e : detail::cycle_minus_vertex_matching(c2, best_end)) m2.insert(e);
  detail::require_pm(g, m2, "oddness-2 construction");

  OddnessTwoPath out{{m1, {m2}}, *best};
  if (!verify_s4(g, out.pair).bipartite) throw ProofStepViolation("oddness-2 construction: complement is not bipartite");
  return out;
}

/// First two consecutive edges of `c` outside `avoid`, walking from the
/// cycle's lowest vertex along its lower-id edge.
inline std::pair<EdgeId, EdgeId> adjacent_pair_avoiding(const Cycle& c, const EdgeSet& avoid) {
  const int len = c.length();
  const int lo = static_cast<int>(std::min_element(c.vertices.begin(), c.vertices.end()) - c.vertices.begin());
  const EdgeId fwd = c.edges[lo];
  const EdgeId back = c.edges[(lo + len - 1) % len];
  std::vector<EdgeId> order;
  for (int i = 0; i < len; ++i) {
    order.push_back(fwd <= back ? c.edges[(lo + i) % len] : c.edges[(lo - 1 - i + 2 * len) % len]);
  }
  for (int i = 0; i < len; ++i) {
    const EdgeId a = order[i];
    const EdgeId b = order[(i + 1) % len];
    if (!avoid.contains(a) && !avoid.contains(b)) return {a, b};
  }
  throw ProofStepViolation("no adjacent edge pair of the odd cycle avoids the matching");
}

struct FractionalStep {
  PerfectMatching matching;
  EdgeWeighting w;
  EdgeWeighting c;
  std::optional<PerfectMatching> hitting;  // N, when weights are 1/5 and 2/5
  Rational achieved;
  Rational bound;
};

namespace detail {

/// Weights 1/5 on N and 2/5 elsewhere, objective = one adjacent pair per
/// cycle outside N, and an Edmonds witness for it.
inline FractionalStep fifths_step(const Graph& g, const std::vector<Cycle>& cycles, const PerfectMatching& n,
                                  const Limits& limits) {
  FractionalStep step;
  step.hitting = n;
  step.w = EdgeWeighting::uniform(g, Rational(2, 5));
  for (EdgeId e : n.edges.members()) step.w.value[e] = Rational(1, 5);
  step.c = EdgeWeighting::uniform(g, 0);
  for (const auto& cyc : cycles) {
    const auto [a, b] = adjacent_pair_avoiding(cyc, n.edges);
    step.c.value[a] = 1;
    step.c.value[b] = 1;
  }
  const auto wit = edmonds_witness(g, step.w, step.c, {}, TightCuts::listed, limits);
  step.matching = wit.matching;
  step.achieved = wit.achieved;
  step.bound = wit.bound;
  return step;
}

}  // namespace detail

struct FractionalConstruction {
  S4Pair pair;
  FractionalStep step;
};

/// Oddness 2: w = 1/3 everywhere. Oddness 4: w = 1/5 on a perfect matching
/// N meeting every 3-cut once and 2/5 elsewhere. Either way c is the
/// indicator of one adjacent edge pair per odd cycle of a minimal 2-factor,
/// and M2 is a perfect matching with c.chi(M2) >= c.w, which forces M2 to
/// meet every odd cycle.
inline FractionalConstruction construct_s4_fractional(const Graph& g, const Limits& limits = {}) {
  const auto cert = oddness(g, limits);
  if (cert.oddness != 2 && cert.oddness != 4) {
    throw PreconditionError("fractional construction needs oddness 2 or 4, got " + std::to_string(cert.oddness));
  }
  const TwoFactor tf = two_factor(g, cert.witness);
  std::vector<Cycle> odd;
  for (int i : tf.odd_cycles) odd.push_back(tf.cycles[i]);

  FractionalConstruction out;
  if (cert.oddness == 2) {
    FractionalStep& step = out.step;
    step.w = EdgeWeighting::uniform(g, Rational(1, 3));
    step.c = EdgeWeighting::uniform(g, 0);
    for (const auto& cyc : odd) {
      const auto [a, b] = adjacent_pair_avoiding(cyc, EdgeSet(g.edge_count()));
      step.c.value[a] = 1;
      step.c.value[b] = 1;
    }
    const auto wit = edmonds_witness(g, step.w, step.c, {}, TightCuts::listed, limits);
    step.matching = wit.matching;
    step.achieved = wit.achieved;
    step.bound = wit.bound;
  } else {
    out.step = detail::fifths_step(g, odd, pm_hitting_all_3cuts(g, limits), limits);
  }
  out.pair = S4Pair{cert.witness, out.step.matching};
  for (const auto& cyc : odd) {
    if (!EdgeSet::of(g.edge_count(), cyc.edges).intersects(out.pair.second.edges)) {
      throw ProofStepViolation("fractional construction: M2 misses an odd cycle");
    }
  }
  if (!verify_s4(g, out.pair).bipartite) throw ProofStepViolation("fractional construction: complement is not bipartite");
  return out;
}

namespace detail {

inline std::uint64_t cover_bound(int k) {
  if (k < 1 || k > 27) throw PreconditionError("k must be between 1 and 27");
  std::uint64_t p = 1;
  for (int i = 1; i < k; ++i) p *= 5;
  return p - 1;
}

inline void validate_cycle(const Graph& g, const Cycle& c) {
  const int len = c.length();
  if (len == 0 || static_cast<int>(c.vertices.size()) != len) throw PreconditionError("malformed cycle");
  if (len % 2 == 0) throw PreconditionError("cycle is not odd");
  for (int i = 0; i < len; ++i) {
    if (!g.has_edge(c.edges[i])) throw PreconditionError("cycle uses an unknown edge");
    const Edge& e = g.edge(c.edges[i]);
    const VertexId a = c.vertices[i];
    const VertexId b = c.vertices[(i + 1) % len];
    if (!(e.touches(a) && e.other(a) == b)) throw PreconditionError("cycle edge does not join consecutive vertices");
  }
}

inline bool meets(const Cycle& c, const EdgeSet& m) {
  return std::any_of(c.edges.begin(), c.edges.end(), [&](EdgeId e) { return m.contains(e); });
}

}  // namespace detail

/// At most k-1 perfect matchings such that every cycle in `cycles` shares
/// an edge with one of them. Needs |cycles| <= 5^(k-1) - 1; each round
/// leaves at most a fifth of the remaining cycles untouched.
inline std::vector<PerfectMatching> cover_odd_cycles(const Graph& g, const std::vector<Cycle>& cycles, int k,
                                                     const Limits& limits = {}) {
  const std::uint64_t cap = detail::cover_bound(k);
  if (cycles.size() > cap) {
    throw PreconditionError(std::to_string(cycles.size()) + " odd cycles exceed 5^(k-1)-1 = " + std::to_string(cap));
  }
  std::vector<bool> used(g.vertex_count(), false);
  for (const auto& c : cycles) {
    detail::validate_cycle(g, c);
    for (VertexId v : c.vertices) {
      if (used[v]) throw PreconditionError("odd cycles are not vertex-disjoint");
      used[v] = true;
    }
  }

  std::vector<PerfectMatching> out;
  std::vector<Cycle> left = cycles;
  std::optional<PerfectMatching> n;
  for (int round = k; !left.empty(); --round) {
    if (left.size() > detail::cover_bound(round)) throw ProofStepViolation("odd-cycle cover: too many cycles left untouched");
    if (!n) n = pm_hitting_all_3cuts(g, limits);
    const auto step = detail::fifths_step(g, left, *n, limits);
    out.push_back(step.matching);
    std::vector<Cycle> next;
    for (auto& c : left) {
      if (!detail::meets(c, step.matching.edges)) next.push_back(std::move(c));
    }
    left = std::move(next);
  }
  return out;
}

/// A minimal perfect matching together with a cover of its 2-factor's odd
/// cycles: at most k perfect matchings whose union has bipartite complement.
inline std::vector<PerfectMatching> k_cover_bipartite(const Graph& g, int k, const Limits& limits = {}) {
  const auto cert = oddness(g, limits);
  const std::uint64_t cap = detail::cover_bound(k);
  if (static_cast<std::uint64_t>(cert.oddness) > cap) {
    throw PreconditionError("oddness " + std::to_string(cert.oddness) + " exceeds 5^(k-1)-1 = " + std::to_string(cap));
  }
  const TwoFactor tf = two_factor(g, cert.witness);
  std::vector<Cycle> odd;
  for (int i : tf.odd_cycles) odd.push_back(tf.cycles[i]);
  std::vector<PerfectMatching> out{cert.witness};
  for (auto& m : cover_odd_cycles(g, odd, k, limits)) out.push_back(std::move(m));

  EdgeSet all(g.edge_count());
  for (const auto& m : out) all |= m.edges;
  if (!bipartite_or_odd_cycle(g, all.complement()).bipartite) {
    throw ProofStepViolation("k-cover: complement of the union is not bipartite");
  }
  return out;
}

}  // namespace cubicpm
