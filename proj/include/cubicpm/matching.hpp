#pragma once

// Perfect matchings: enumeration, 2-factors, oddness, fractional perfect
// matchings and the exhaustive realisation of the Edmonds-polytope lemma
// (for a fractional perfect matching w and any c there is a perfect
// matching N with c.chi(N) >= c.w).

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "cubicpm/error.hpp"
#include "cubicpm/graph.hpp"
#include "cubicpm/structure.hpp"

namespace cubicpm {

using Rational = boost::rational<std::int64_t>;

/// Size and budget caps for exhaustive searches.
struct Limits {
  int max_vertices = 26;
  std::uint64_t max_pms = 0;  // 0 = unlimited
  std::optional<std::chrono::steady_clock::time_point> deadline;

  void require_vertices(const Graph& g, const char* what) const {
    if (g.vertex_count() > max_vertices) {
      throw CapExceeded(std::string(what) + ": exhaustive search refused, " + std::to_string(g.vertex_count()) +
                        " vertices exceeds cap " + std::to_string(max_vertices));
    }
  }
  void check_deadline() const {
    if (deadline && std::chrono::steady_clock::now() > *deadline) throw CapExceeded("time budget exhausted");
  }
};

struct PerfectMatching {
  EdgeSet edges;

  bool contains(EdgeId e) const { return edges.contains(e); }
  friend bool operator==(const PerfectMatching&, const PerfectMatching&) = default;
  friend auto operator<=>(const PerfectMatching&, const PerfectMatching&) = default;
};

/// True when `s` covers every vertex of `g` exactly once.
inline bool is_perfect_matching(const Graph& g, const EdgeSet& s) {
  if (s.universe() != g.edge_count()) return false;
  std::vector<int> hits(g.vertex_count(), 0);
  for (EdgeId e : s.members()) {
    ++hits[g.edge(e).a];
    ++hits[g.edge(e).b];
  }
  for (int h : hits) {
    if (h != 1) return false;
  }
  return true;
}

inline PerfectMatching make_perfect_matching(const Graph& g, const EdgeSet& s) {
  if (!is_perfect_matching(g, s)) throw PreconditionError("edge set is not a perfect matching");
  return PerfectMatching{s};
}

namespace detail {

class PmEnumerator {
 public:
  PmEnumerator(const Graph& g, const Limits& limits, const std::function<bool(const EdgeSet&)>& visit)
      : g_(g), limits_(limits), visit_(visit), covered_(g.vertex_count(), false), current_(g.edge_count()) {}

  // Returns false when the visitor asked to stop.
  bool run() {
    if (g_.vertex_count() % 2 == 1) return true;
    return extend(0);
  }

 private:
  bool extend(VertexId from) {
    if ((++nodes_ & 1023) == 0) limits_.check_deadline();
    VertexId v = from;
    while (v < g_.vertex_count() && covered_[v]) ++v;
    if (v == g_.vertex_count()) return visit_(current_);
    covered_[v] = true;
    for (EdgeId e : g_.incident(v)) {
      VertexId u = g_.edge(e).other(v);
      if (covered_[u]) continue;
      covered_[u] = true;
      if (stranded(v) || stranded(u)) {
        covered_[u] = false;
        continue;
      }
      current_.insert(e);
      const bool go_on = extend(v + 1);
      current_.erase(e);
      covered_[u] = false;
      if (!go_on) {
        covered_[v] = false;
        return false;
      }
    }
    covered_[v] = false;
    return true;
  }

  // True when some uncovered neighbour of x has no uncovered neighbour left.
  bool stranded(VertexId x) const {
    for (EdgeId e : g_.incident(x)) {
      const VertexId y = g_.edge(e).other(x);
      if (covered_[y]) continue;
      bool free = false;
      for (EdgeId f : g_.incident(y)) free = free || !covered_[g_.edge(f).other(y)];
      if (!free) return true;
    }
    return false;
  }

  const Graph& g_;
  const Limits& limits_;
  const std::function<bool(const EdgeSet&)>& visit_;
  std::vector<bool> covered_;
  EdgeSet current_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Calls `visit` on every perfect matching in canonical order: branch on
/// the lowest uncovered vertex, trying its incident edges by ascending id.
/// `visit` returns false to stop early; the function returns false then.
inline bool for_each_pm(const Graph& g, const Limits& limits, const std::function<bool(const EdgeSet&)>& visit) {
  limits.require_vertices(g, "perfect matching enumeration");
  return detail::PmEnumerator(g, limits, visit).run();
}

struct PmEnumeration {
  std::vector<PerfectMatching> matchings;
  bool complete = true;  // false when limits.max_pms cut the stream short
};

inline PmEnumeration enumerate_pms(const Graph& g, const Limits& limits = {}) {
  PmEnumeration out;
  for_each_pm(g, limits, [&](const EdgeSet& s) {
    if (limits.max_pms != 0 && out.matchings.size() == limits.max_pms) {
      out.complete = false;
      return false;
    }
    out.matchings.push_back(PerfectMatching{s});
    return true;
  });
  return out;
}

/// All perfect matchings, or CapExceeded when the PM cap truncates them.
inline std::vector<PerfectMatching> all_pms(const Graph& g, const Limits& limits) {
  auto e = enumerate_pms(g, limits);
  if (!e.complete) throw CapExceeded("perfect matching cap of " + std::to_string(limits.max_pms) + " reached");
  return std::move(e.matchings);
}

/// A cycle given by its vertices in traversal order; edges[i] joins
/// vertices[i] and vertices[(i+1) % length]. Length-2 cycles come from
/// parallel pairs.
struct Cycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  int length() const { return static_cast<int>(edges.size()); }
  bool odd() const { return length() % 2 == 1; }
};

struct TwoFactor {
  std::vector<Cycle> cycles;       // ordered by lowest vertex
  std::vector<int> odd_cycles;     // indices into cycles

  int odd_count() const { return static_cast<int>(odd_cycles.size()); }
};

/// Cycle decomposition of a spanning 2-regular edge set. Each cycle starts
/// at its lowest vertex and leaves along its lower-id edge.
inline TwoFactor decompose_two_factor(const Graph& g, const EdgeSet& factor) {
  TwoFactor tf;
  std::vector<bool> seen(g.vertex_count(), false);
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    Cycle c;
    VertexId v = s;
    EdgeId via = -1;
    do {
      seen[v] = true;
      c.vertices.push_back(v);
      EdgeId next = -1;
      int deg = 0;
      for (EdgeId e : g.incident(v)) {
        if (!factor.contains(e)) continue;
        ++deg;
        if (e != via && next == -1) next = e;
      }
      if (deg != 2) throw PreconditionError("edge set is not a 2-factor at vertex " + std::to_string(v));
      c.edges.push_back(next);
      via = next;
      v = g.edge(next).other(v);
    } while (v != s);
    if (c.odd()) tf.odd_cycles.push_back(static_cast<int>(tf.cycles.size()));
    tf.cycles.push_back(std::move(c));
  }
  return tf;
}

inline TwoFactor two_factor(const Graph& g, const PerfectMatching& m) {
  if (!is_perfect_matching(g, m.edges)) throw PreconditionError("two_factor: not a perfect matching");
  return decompose_two_factor(g, m.edges.complement());
}

namespace detail {

inline int odd_cycles_in_complement(const Graph& g, const EdgeSet& m) {
  const Components c = components_without(g, m);
  std::vector<int> size(c.count, 0);
  for (int l : c.label) ++size[l];
  int odd = 0;
  for (int s : size) odd += s % 2;
  return odd;
}

inline void require_cubic(const Graph& g, const char* what) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) throw PreconditionError(std::string(what) + ": graph is not cubic");
  }
}

}  // namespace detail

struct OddnessCertificate {
  int oddness = 0;
  PerfectMatching witness;  // a minimal perfect matching
  bool exhaustive = true;
  std::uint64_t matchings_examined = 0;
};

/// Exact oddness by enumerating every perfect matching; every 2-factor of
/// a cubic graph is the complement of one.
inline OddnessCertificate oddness(const Graph& g, const Limits& limits = {}) {
  detail::require_cubic(g, "oddness");
  limits.require_vertices(g, "oddness");
  OddnessCertificate cert;
  int best = -1;
  for_each_pm(g, limits, [&](const EdgeSet& s) {
    ++cert.matchings_examined;
    if (limits.max_pms != 0 && cert.matchings_examined > limits.max_pms) {
      throw CapExceeded("oddness: perfect matching cap reached");
    }
    const int odd = detail::odd_cycles_in_complement(g, s);
    if (best == -1 || odd < best) {
      best = odd;
      cert.witness = PerfectMatching{s};
    }
    return true;
  });
  if (best == -1) throw PreconditionError("oddness: graph has no perfect matching");
  cert.oddness = best;
  return cert;
}

/// Exact rational value per edge id.
struct EdgeWeighting {
  std::vector<Rational> value;

  static EdgeWeighting uniform(const Graph& g, Rational r) {
    return {std::vector<Rational>(static_cast<std::size_t>(g.edge_count()), r)};
  }
  static EdgeWeighting indicator(const Graph& g, const EdgeSet& s) {
    auto w = uniform(g, 0);
    for (EdgeId e : s.members()) w.value[e] = 1;
    return w;
  }
  Rational operator[](EdgeId e) const { return value.at(e); }
  Rational weight(const EdgeSet& s) const {
    Rational sum = 0;
    for (EdgeId e : s.members()) sum += value.at(e);
    return sum;
  }
};

inline Rational dot(const EdgeWeighting& x, const EdgeWeighting& y) {
  if (x.value.size() != y.value.size()) throw PreconditionError("dot: length mismatch");
  Rational sum = 0;
  for (std::size_t i = 0; i < x.value.size(); ++i) sum += x.value[i] * y.value[i];
  return sum;
}

/// c . chi(s)
inline Rational dot(const EdgeWeighting& c, const EdgeSet& s) { return c.weight(s); }

namespace detail {

// A vertex set W with boundary exactly `x`, if one exists: every edge of
// `x` must join two components of g - x, and those components must admit
// a 2-colouring that every edge of `x` crosses.
inline std::optional<std::vector<bool>> side_with_boundary(const Graph& g, const EdgeSet& x) {
  const Components c = components_without(g, x);
  std::vector<int> parent(c.count);
  std::vector<int> parity(c.count, 0);  // parity relative to parent
  for (int i = 0; i < c.count; ++i) parent[i] = i;
  auto find = [&](int v) {
    int p = 0;
    while (parent[v] != v) {
      p ^= parity[v];
      v = parent[v];
    }
    return std::pair{v, p};
  };
  for (EdgeId e : x.members()) {
    const int p = c.label[g.edge(e).a];
    const int q = c.label[g.edge(e).b];
    if (p == q) return std::nullopt;
    auto [rp, pp] = find(p);
    auto [rq, pq] = find(q);
    if (rp == rq) {
      if (pp == pq) return std::nullopt;
      continue;
    }
    parent[rq] = rp;
    parity[rq] = pp ^ pq ^ 1;
  }
  std::vector<bool> in(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) in[v] = find(c.label[v]).second == 1;
  return in;
}

}  // namespace detail

/// Every edge set of size three that is the boundary of some vertex set.
/// In a cubic graph these are exactly the odd boundaries of size three;
/// the minimal ones are the 3-cuts (vertex stars included).
inline std::vector<EdgeSet> three_edge_boundaries(const Graph& g) {
  std::vector<EdgeSet> out;
  const int m = g.edge_count();
  for (EdgeId x = 0; x < m; ++x) {
    for (EdgeId y = x + 1; y < m; ++y) {
      for (EdgeId z = y + 1; z < m; ++z) {
        EdgeSet t(m, {x, y, z});
        if (detail::side_with_boundary(g, t)) out.push_back(std::move(t));
      }
    }
  }
  return out;
}

enum class FractionalCheckMode {
  full,      // every odd vertex set; at most 16 vertices
  targeted,  // conditions 1-2, bridges and all size-3 odd boundaries
};

struct FractionalCheck {
  bool pass = true;
  int failed_condition = 0;  // 1, 2 or 3; 0 on pass
  std::optional<EdgeId> edge_witness;
  std::optional<VertexId> vertex_witness;
  std::optional<std::vector<VertexId>> set_witness;
  /// True when the checked odd sets cover every odd set: always in full
  /// mode; in targeted mode when g is cubic and every weight is >= 1/5,
  /// since every odd boundary of size >= 5 then weighs at least 1.
  bool complete = false;
};

inline FractionalCheck check_fractional_pm(const Graph& g, const EdgeWeighting& w,
                                           FractionalCheckMode mode = FractionalCheckMode::targeted) {
  if (static_cast<int>(w.value.size()) != g.edge_count()) throw PreconditionError("weighting length mismatch");
  FractionalCheck r;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (w[e] < Rational(0) || w[e] > Rational(1)) {
      r.pass = false;
      r.failed_condition = 1;
      r.edge_witness = e;
      return r;
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Rational sum = 0;
    for (EdgeId e : g.incident(v)) sum += w[e];
    if (sum != Rational(1)) {
      r.pass = false;
      r.failed_condition = 2;
      r.vertex_witness = v;
      return r;
    }
  }

  auto fail_set = [&](const std::vector<bool>& in) {
    r.pass = false;
    r.failed_condition = 3;
    std::vector<VertexId> side;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (in[v]) side.push_back(v);
    }
    r.set_witness = std::move(side);
  };

  if (mode == FractionalCheckMode::full) {
    if (g.vertex_count() > 16) throw CapExceeded("check_fractional_pm: full mode limited to 16 vertices");
    const int n = g.vertex_count();
    r.complete = true;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      if (std::popcount(mask) % 2 == 0) continue;
      Rational sum = 0;
      for (const auto& e : g.edges()) {
        if (((mask >> e.a) & 1) != ((mask >> e.b) & 1)) sum += w[&e - g.edges().data()];
      }
      if (sum < Rational(1)) {
        std::vector<bool> in(n);
        for (int v = 0; v < n; ++v) in[v] = (mask >> v) & 1;
        fail_set(in);
        return r;
      }
    }
    return r;
  }

  // Bridges whose sides are odd.
  const EdgeSet br = detail::all_bridges(g);
  for (EdgeId e : br.members()) {
    EdgeSet only(g.edge_count(), {e});
    const Components c = components_without(g, only);
    std::vector<bool> in(g.vertex_count());
    int size = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      in[v] = c.label[v] == c.label[g.edge(e).a];
      size += in[v];
    }
    if (size % 2 == 1 && w[e] < 1) {
      fail_set(in);
      return r;
    }
  }
  for (const auto& x : three_edge_boundaries(g)) {
    if (w.weight(x) < Rational(1)) {
      auto in = *detail::side_with_boundary(g, x);
      int size = 0;
      for (VertexId v = 0; v < g.vertex_count(); ++v) size += in[v];
      if (size % 2 == 0) in.flip();
      fail_set(in);
      return r;
    }
  }
  bool cubic = true;
  for (VertexId v = 0; v < g.vertex_count(); ++v) cubic = cubic && g.degree(v) == 3;
  bool heavy = true;
  for (const auto& x : w.value) heavy = heavy && x >= Rational(1, 5);
  r.complete = cubic && heavy;
  return r;
}

/// Which tight odd cuts (w(X) = 1) the witness must meet exactly once.
enum class TightCuts {
  listed,    // only the cuts passed by the caller
  all_odd,   // every odd cut with w(X) = 1, found by subset enumeration (<= 16 vertices)
};

struct EdmondsWitness {
  PerfectMatching matching;
  Rational achieved;  // c . chi(N)
  Rational bound;     // c . w
  std::uint64_t candidates_examined = 0;
};

/// First perfect matching in enumeration order with c.chi(N) >= c.w that
/// meets each required tight cut in exactly one edge.
inline EdmondsWitness edmonds_witness(const Graph& g, const EdgeWeighting& w, const EdgeWeighting& c,
                                      const std::vector<EdgeSet>& tight_cuts = {},
                                      TightCuts which = TightCuts::listed, const Limits& limits = {}) {
  limits.require_vertices(g, "edmonds_witness");
  const auto check = check_fractional_pm(g, w, FractionalCheckMode::targeted);
  if (!check.pass) throw PreconditionError("edmonds_witness: w is not a fractional perfect matching");
  if (static_cast<int>(c.value.size()) != g.edge_count()) throw PreconditionError("objective length mismatch");

  std::vector<EdgeSet> required = tight_cuts;
  if (which == TightCuts::all_odd) {
    if (g.vertex_count() > 16) throw CapExceeded("edmonds_witness: full tight-cut enforcement limited to 16 vertices");
    const int n = g.vertex_count();
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      if (std::popcount(mask) % 2 == 0 || (mask >> (n - 1)) & 1) continue;
      std::vector<bool> in(n);
      for (int v = 0; v < n; ++v) in[v] = (mask >> v) & 1;
      EdgeSet x = boundary_edges(g, in);
      if (w.weight(x) == Rational(1) && is_cut(g, x)) required.push_back(std::move(x));
    }
  }

  EdmondsWitness out;
  out.bound = dot(c, w);
  bool found = false;
  for_each_pm(g, limits, [&](const EdgeSet& s) {
    ++out.candidates_examined;
    const Rational value = dot(c, s);
    if (value < out.bound) return true;
    for (const auto& x : required) {
      if ((x & s).size() != 1) return true;
    }
    out.matching = PerfectMatching{s};
    out.achieved = value;
    found = true;
    return false;
  });
  if (!found) throw ProofStepViolation("edmonds_witness: lemma violation, no qualifying perfect matching");
  return out;
}

/// A perfect matching meeting every size-3 odd boundary (so every 3-cut)
/// in exactly one edge.
inline PerfectMatching pm_hitting_all_3cuts(const Graph& g, const Limits& limits = {}) {
  limits.require_vertices(g, "pm_hitting_all_3cuts");
  const auto cuts = three_edge_boundaries(g);
  std::optional<PerfectMatching> found;
  for_each_pm(g, limits, [&](const EdgeSet& s) {
    for (const auto& x : cuts) {
      if ((x & s).size() != 1) return true;
    }
    found = PerfectMatching{s};
    return false;
  });
  if (!found) throw ProofStepViolation("pm_hitting_all_3cuts: remark violation, no perfect matching meets every 3-cut once");
  return *found;
}

}  // namespace cubicpm
