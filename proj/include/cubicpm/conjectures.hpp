#pragma once

// Predicates and exhaustive certifying searches for FR-triples (three
// perfect matchings with empty common intersection), S4-pairs (two perfect
// matchings whose union has a bipartite complement), odd-cut-free pairs
// and Berge-Fulkerson covers, with optional prescribed edge frequencies.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubicpm/error.hpp"
#include "cubicpm/graph.hpp"
#include "cubicpm/matching.hpp"
#include "cubicpm/structure.hpp"

namespace cubicpm {

/// Required frequencies: each (edge, i) asks that `edge` lie in exactly
/// `i` of the matchings.
using FrequencyConstraints = std::vector<std::pair<EdgeId, int>>;

enum class FrequencyTarget { fr_triple, s4_pair };

/// Either one edge with a frequency, or a vertex with frequencies for its
/// three incident edges taken in ascending edge-id order.
struct FrequencySpec {
  enum class Kind { edge, vertex };
  Kind kind = Kind::edge;
  int id = 0;  // edge id or vertex id
  std::array<int, 3> freq{0, 0, 0};  // edge form uses freq[0]

  static FrequencySpec edge(EdgeId e, int i) { return {Kind::edge, e, {i, 0, 0}}; }
  static FrequencySpec vertex(VertexId v, int i, int j, int k) { return {Kind::vertex, v, {i, j, k}}; }

  /// Validates against `g` and the target's parity rule (sum 3 for
  /// FR-triples, 2 for S4-pairs) and expands into edge constraints.
  FrequencyConstraints constraints(const Graph& g, FrequencyTarget target) const {
    auto in_range = [](int x) { return x >= 0 && x <= 2; };
    if (kind == Kind::edge) {
      if (!g.has_edge(id)) throw PreconditionError("frequency spec: no edge " + std::to_string(id));
      if (!in_range(freq[0])) throw PreconditionError("frequency spec: frequency must be 0, 1 or 2");
      return {{id, freq[0]}};
    }
    if (!g.has_vertex(id)) throw PreconditionError("frequency spec: no vertex " + std::to_string(id));
    if (g.degree(id) != 3) throw PreconditionError("frequency spec: vertex must have degree 3");
    for (int x : freq) {
      if (!in_range(x)) throw PreconditionError("frequency spec: frequencies must be 0, 1 or 2");
    }
    const int want = target == FrequencyTarget::fr_triple ? 3 : 2;
    if (freq[0] + freq[1] + freq[2] != want) {
      throw PreconditionError("frequency spec: vertex frequencies must sum to " + std::to_string(want));
    }
    const auto& inc = g.incident(id);
    return {{inc[0], freq[0]}, {inc[1], freq[1]}, {inc[2], freq[2]}};
  }
};

struct FRTriple {
  std::array<PerfectMatching, 3> m;
};

struct S4Pair {
  PerfectMatching first;
  PerfectMatching second;
};

template <class T>
struct SearchOutcome {
  std::optional<T> found;
  std::uint64_t candidates_examined = 0;
};

/// Number of matchings in `ms` containing `a`.
inline int frequency(const std::vector<PerfectMatching>& ms, EdgeId a) {
  int count = 0;
  for (const auto& m : ms) {
    if (a < 0 || a >= m.edges.universe()) throw PreconditionError("frequency: foreign edge id");
    count += m.contains(a);
  }
  return count;
}

inline bool meets(const std::vector<PerfectMatching>& ms, const FrequencyConstraints& cs) {
  for (auto [e, i] : cs) {
    if (frequency(ms, e) != i) return false;
  }
  return true;
}

/// An edge in all three matchings, if any.
inline std::optional<EdgeId> verify_fr(const FRTriple& t) {
  const EdgeId e = (t.m[0].edges & t.m[1].edges & t.m[2].edges).first();
  if (e < 0) return std::nullopt;
  return e;
}

inline SearchOutcome<FRTriple> find_fr_triple(const Graph& g, const FrequencyConstraints& cs,
                                              const Limits& limits = {}) {
  limits.require_vertices(g, "find_fr_triple");
  for (auto [e, i] : cs) {
    if (!g.has_edge(e)) throw PreconditionError("find_fr_triple: constraint on unknown edge");
  }
  const auto pms = all_pms(g, limits);
  SearchOutcome<FRTriple> out;
  const std::size_t n = pms.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const EdgeSet ij = pms[i].edges & pms[j].edges;
      for (std::size_t k = j; k < n; ++k) {
        ++out.candidates_examined;
        if (ij.intersects(pms[k].edges)) continue;
        if (!meets({pms[i], pms[j], pms[k]}, cs)) continue;
        out.found = FRTriple{{pms[i], pms[j], pms[k]}};
        return out;
      }
    }
    limits.check_deadline();
  }
  return out;
}

inline SearchOutcome<FRTriple> find_fr_triple(const Graph& g, const std::optional<FrequencySpec>& spec = std::nullopt,
                                              const Limits& limits = {}) {
  return find_fr_triple(g, spec ? spec->constraints(g, FrequencyTarget::fr_triple) : FrequencyConstraints{}, limits);
}

/// Checks the complement of M1 u M2 for an odd cycle.
inline BipartiteCheck verify_s4(const Graph& g, const S4Pair& p) {
  return bipartite_or_odd_cycle(g, (p.first.edges | p.second.edges).complement());
}

/// Searches unordered pairs with repetition in enumeration order. With
/// `base`, the first matching is fixed to it.
inline SearchOutcome<S4Pair> find_s4_pair(const Graph& g, const FrequencyConstraints& cs,
                                          const std::optional<PerfectMatching>& base = std::nullopt,
                                          const Limits& limits = {}) {
  limits.require_vertices(g, "find_s4_pair");
  for (auto [e, i] : cs) {
    if (!g.has_edge(e)) throw PreconditionError("find_s4_pair: constraint on unknown edge");
  }
  if (base && !is_perfect_matching(g, base->edges)) throw PreconditionError("find_s4_pair: base is not a perfect matching");
  const auto pms = all_pms(g, limits);
  SearchOutcome<S4Pair> out;
  auto try_pair = [&](const PerfectMatching& a, const PerfectMatching& b) {
    ++out.candidates_examined;
    if (!meets({a, b}, cs)) return false;
    S4Pair p{a, b};
    if (!verify_s4(g, p).bipartite) return false;
    out.found = std::move(p);
    return true;
  };
  if (base) {
    for (const auto& m : pms) {
      if (try_pair(*base, m)) return out;
    }
    return out;
  }
  for (std::size_t i = 0; i < pms.size(); ++i) {
    for (std::size_t j = i; j < pms.size(); ++j) {
      if (try_pair(pms[i], pms[j])) return out;
    }
    limits.check_deadline();
  }
  return out;
}

inline SearchOutcome<S4Pair> find_s4_pair(const Graph& g, const std::optional<FrequencySpec>& spec = std::nullopt,
                                          const std::optional<PerfectMatching>& base = std::nullopt,
                                          const Limits& limits = {}) {
  return find_s4_pair(g, spec ? spec->constraints(g, FrequencyTarget::s4_pair) : FrequencyConstraints{}, base, limits);
}

/// An odd cut inside M1 n M2, if any.
inline std::optional<CutWitness> verify_oddcut_pair(const Graph& g, const S4Pair& p) {
  return odd_cut_within(g, p.first.edges & p.second.edges);
}

/// First pair (unordered, with repetition) whose intersection holds no
/// odd cut.
inline SearchOutcome<S4Pair> find_oddcut_pair(const Graph& g, const Limits& limits = {}) {
  limits.require_vertices(g, "find_oddcut_pair");
  const auto pms = all_pms(g, limits);
  SearchOutcome<S4Pair> out;
  for (std::size_t i = 0; i < pms.size(); ++i) {
    for (std::size_t j = i; j < pms.size(); ++j) {
      ++out.candidates_examined;
      S4Pair p{pms[i], pms[j]};
      if (!verify_oddcut_pair(g, p)) {
        out.found = std::move(p);
        return out;
      }
    }
    limits.check_deadline();
  }
  return out;
}

/// Default caps for find_bf_cover: the search runs over 6-multisets.
inline Limits bf_cover_limits() {
  Limits l;
  l.max_vertices = 16;
  return l;
}

/// Six perfect matchings covering every edge exactly twice. The search
/// always extends the partial cover through its lowest-id edge still
/// covered fewer than twice, trying matchings in enumeration order.
inline SearchOutcome<std::array<PerfectMatching, 6>> find_bf_cover(const Graph& g, const Limits& limits = bf_cover_limits()) {
  limits.require_vertices(g, "find_bf_cover");
  const auto pms = all_pms(g, limits);
  SearchOutcome<std::array<PerfectMatching, 6>> out;
  std::vector<int> count(g.edge_count(), 0);
  std::vector<std::size_t> chosen;

  auto recurse = [&](auto&& self) -> bool {
    if (chosen.size() == 6) {
      for (int c : count) {
        if (c != 2) return false;
      }
      return true;
    }
    EdgeId need = -1;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (count[e] < 2) {
        need = e;
        break;
      }
    }
    if (need == -1) return false;
    for (std::size_t i = 0; i < pms.size(); ++i) {
      if (!pms[i].contains(need)) continue;
      ++out.candidates_examined;
      const auto members = pms[i].edges.members();
      bool fits = true;
      for (EdgeId e : members) fits = fits && count[e] < 2;
      if (!fits) continue;
      for (EdgeId e : members) ++count[e];
      chosen.push_back(i);
      if (self(self)) return true;
      chosen.pop_back();
      for (EdgeId e : members) --count[e];
    }
    return false;
  };
  if (!pms.empty() && recurse(recurse)) {
    std::array<PerfectMatching, 6> cover;
    for (std::size_t i = 0; i < 6; ++i) cover[i] = pms[chosen[i]];
    out.found = cover;
  }
  return out;
}

}  // namespace cubicpm
