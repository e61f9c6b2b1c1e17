#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cubicpm/error.hpp"

namespace cubicpm {

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId a = 0;
  VertexId b = 0;

  VertexId other(VertexId v) const { return v == a ? b : a; }
  bool touches(VertexId v) const { return a == v || b == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Loopless multigraph. Edge ids are positions in the edge list and that
/// list order is the canonical iteration order everywhere in the library.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count) : incidence_(check_count(vertex_count)) {}
  Graph(int vertex_count, std::initializer_list<std::pair<VertexId, VertexId>> edges)
      : Graph(vertex_count) {
    for (auto [a, b] : edges) add_edge(a, b);
  }

  EdgeId add_edge(VertexId a, VertexId b) {
    if (!has_vertex(a) || !has_vertex(b)) {
      throw PreconditionError("edge endpoint out of range: " + std::to_string(a) + "-" +
                              std::to_string(b));
    }
    if (a == b) throw PreconditionError("loop at vertex " + std::to_string(a));
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({a, b});
    incidence_[a].push_back(id);
    incidence_[b].push_back(id);
    return id;
  }

  int vertex_count() const { return static_cast<int>(incidence_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool has_vertex(VertexId v) const { return v >= 0 && v < vertex_count(); }
  bool has_edge(EdgeId e) const { return e >= 0 && e < edge_count(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Incident edge ids of `v` in ascending id order. A parallel pair
  /// contributes two entries.
  const std::vector<EdgeId>& incident(VertexId v) const { return incidence_.at(v); }
  int degree(VertexId v) const { return static_cast<int>(incidence_.at(v).size()); }

  /// Edge ids joining `a` and `b`, ascending.
  std::vector<EdgeId> edges_between(VertexId a, VertexId b) const {
    std::vector<EdgeId> out;
    for (EdgeId e : incident(a)) {
      if (edges_[e].other(a) == b) out.push_back(e);
    }
    return out;
  }
  bool adjacent(VertexId a, VertexId b) const { return !edges_between(a, b).empty(); }

  std::vector<VertexId> neighbours(VertexId v) const {
    std::vector<VertexId> out;
    for (EdgeId e : incident(v)) out.push_back(edges_[e].other(v));
    return out;
  }

  // Optional labels; empty vectors mean "unlabelled".
  std::vector<std::string> vertex_labels;
  std::vector<std::string> edge_labels;

  friend bool operator==(const Graph& x, const Graph& y) {
    return x.vertex_count() == y.vertex_count() && x.edges_ == y.edges_;
  }

 private:
  static std::size_t check_count(int n) {
    if (n < 0) throw PreconditionError("negative vertex count");
    return static_cast<std::size_t>(n);
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// Subset of the edges of a graph with `universe` edges.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  EdgeSet(int universe, std::initializer_list<EdgeId> members) : EdgeSet(universe) {
    for (EdgeId e : members) insert(e);
  }
  template <class Range>
  static EdgeSet of(int universe, const Range& members) {
    EdgeSet s(universe);
    for (EdgeId e : members) s.insert(e);
    return s;
  }
  static EdgeSet all(int universe) {
    EdgeSet s(universe);
    for (EdgeId e = 0; e < universe; ++e) s.insert(e);
    return s;
  }

  int universe() const { return universe_; }

  void insert(EdgeId e) {
    check(e);
    words_[e >> 6] |= bit(e);
  }
  void erase(EdgeId e) {
    check(e);
    words_[e >> 6] &= ~bit(e);
  }
  bool contains(EdgeId e) const {
    return e >= 0 && e < universe_ && (words_[e >> 6] & bit(e)) != 0;
  }

  int size() const {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  /// Members in ascending id order.
  std::vector<EdgeId> members() const {
    std::vector<EdgeId> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w != 0) {
        out.push_back(static_cast<EdgeId>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  /// Lowest member, or -1 when empty.
  EdgeId first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] != 0) return static_cast<EdgeId>(i * 64 + std::countr_zero(words_[i]));
    }
    return -1;
  }

  EdgeSet& operator&=(const EdgeSet& o) { return combine(o, [](auto x, auto y) { return x & y; }); }
  EdgeSet& operator|=(const EdgeSet& o) { return combine(o, [](auto x, auto y) { return x | y; }); }
  EdgeSet& operator-=(const EdgeSet& o) { return combine(o, [](auto x, auto y) { return x & ~y; }); }
  friend EdgeSet operator&(EdgeSet x, const EdgeSet& y) { return x &= y; }
  friend EdgeSet operator|(EdgeSet x, const EdgeSet& y) { return x |= y; }
  friend EdgeSet operator-(EdgeSet x, const EdgeSet& y) { return x -= y; }

  EdgeSet complement() const { return all(universe_) - *this; }

  bool intersects(const EdgeSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & o.words_[i]) != 0) return true;
    }
    return false;
  }
  bool subset_of(const EdgeSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    }
    return true;
  }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend auto operator<=>(const EdgeSet&, const EdgeSet&) = default;

 private:
  static std::uint64_t bit(EdgeId e) { return std::uint64_t{1} << (e & 63); }
  void check(EdgeId e) const {
    if (e < 0 || e >= universe_) {
      throw PreconditionError("edge id " + std::to_string(e) + " outside edge set universe");
    }
  }
  void same_universe(const EdgeSet& o) const {
    if (o.universe_ != universe_) throw PreconditionError("edge sets over different graphs");
  }
  template <class Op>
  EdgeSet& combine(const EdgeSet& o, Op op) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = op(words_[i], o.words_[i]);
    return *this;
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace cubicpm
