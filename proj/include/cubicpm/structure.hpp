#pragma once

// Structural predicates, bridges and blocks, 2-colourability of edge
// subsets, vertex-set boundaries and odd cuts.

#include <algorithm>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "cubicpm/error.hpp"
#include "cubicpm/graph.hpp"

namespace cubicpm {

/// Connected-component labelling of a spanning subgraph. Labels are
/// assigned in order of each component's lowest vertex.
struct Components {
  std::vector<int> label;  // per vertex, -1 for excluded vertices
  int count = 0;

  std::vector<std::vector<VertexId>> groups() const {
    std::vector<std::vector<VertexId>> out(count);
    for (VertexId v = 0; v < static_cast<VertexId>(label.size()); ++v) {
      if (label[v] >= 0) out[label[v]].push_back(v);
    }
    return out;
  }
};

namespace detail {

// Components of the spanning subgraph on the edges for which `keep(e)` is
// true, restricted to vertices with `alive(v)`; dead vertices get label -1.
template <class KeepEdge, class AliveVertex>
Components components_if(const Graph& g, KeepEdge keep, AliveVertex alive) {
  Components c;
  c.label.assign(g.vertex_count(), -1);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (c.label[s] != -1 || !alive(s)) continue;
    c.label[s] = c.count;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        if (!keep(e)) continue;
        VertexId u = g.edge(e).other(v);
        if (c.label[u] == -1 && alive(u)) {
          c.label[u] = c.count;
          stack.push_back(u);
        }
      }
    }
    ++c.count;
  }
  return c;
}

}  // namespace detail

inline Components components(const Graph& g) {
  return detail::components_if(g, [](EdgeId) { return true; }, [](VertexId) { return true; });
}

/// Components of `g` with the edges of `removed` deleted.
inline Components components_without(const Graph& g, const EdgeSet& removed) {
  return detail::components_if(g, [&](EdgeId e) { return !removed.contains(e); }, [](VertexId) { return true; });
}

/// Components of the spanning subgraph whose edge set is `kept`.
inline Components components_of(const Graph& g, const EdgeSet& kept) {
  return detail::components_if(g, [&](EdgeId e) { return kept.contains(e); }, [](VertexId) { return true; });
}

inline bool is_connected(const Graph& g) { return components(g).count <= 1; }

namespace detail {

// Bridges of every component (Tarjan low-link, iterative). Parallel edges
// are handled by skipping only the tree edge's own id.
inline EdgeSet all_bridges(const Graph& g) {
  const int n = g.vertex_count();
  EdgeSet out(g.edge_count());
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  int timer = 0;
  struct Frame {
    VertexId v;
    EdgeId via;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = g.incident(f.v);
      if (f.next < inc.size()) {
        EdgeId e = inc[f.next++];
        if (e == f.via) continue;
        VertexId u = g.edge(e).other(f.v);
        if (disc[u] == -1) {
          disc[u] = low[u] = timer++;
          stack.push_back({u, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[u]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          VertexId parent = stack.back().v;
          low[parent] = std::min(low[parent], low[done.v]);
          if (low[done.v] > disc[parent]) out.insert(done.via);
        }
      }
    }
  }
  return out;
}

}  // namespace detail

struct ValidationRequest {
  bool connected = true;
  bool cubic = true;
  bool bridgeless = true;
  bool simple = true;
};

struct ValidationReport {
  bool connected = true;
  bool cubic = true;
  bool bridgeless = true;
  bool simple = true;
  std::optional<VertexId> unreachable_vertex;   // witness for !connected
  std::optional<VertexId> bad_degree_vertex;    // witness for !cubic
  std::optional<EdgeId> bridge;                 // witness for !bridgeless
  std::optional<std::pair<EdgeId, EdgeId>> parallel_pair;  // witness for !simple

  bool ok() const { return connected && cubic && bridgeless && simple; }
};

/// Checks the requested properties; unrequested ones are reported as true.
inline ValidationReport validate(const Graph& g, ValidationRequest req = {}) {
  ValidationReport r;
  if (req.connected) {
    auto c = components(g);
    if (c.count > 1) {
      r.connected = false;
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (c.label[v] != 0) {
          r.unreachable_vertex = v;
          break;
        }
      }
    }
  }
  if (req.cubic) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) != 3) {
        r.cubic = false;
        r.bad_degree_vertex = v;
        break;
      }
    }
  }
  if (req.bridgeless) {
    auto b = detail::all_bridges(g);
    if (!b.empty()) {
      r.bridgeless = false;
      r.bridge = b.first();
    }
  }
  if (req.simple) {
    for (VertexId v = 0; v < g.vertex_count() && r.simple; ++v) {
      const auto& inc = g.incident(v);
      for (std::size_t i = 0; i < inc.size() && r.simple; ++i) {
        for (std::size_t j = i + 1; j < inc.size(); ++j) {
          if (g.edge(inc[i]).other(v) == g.edge(inc[j]).other(v)) {
            r.simple = false;
            r.parallel_pair = {inc[i], inc[j]};
            break;
          }
        }
      }
    }
  }
  return r;
}

/// Edges whose deletion disconnects `g`. Requires a connected graph.
inline EdgeSet bridges(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("bridges: graph is disconnected");
  return detail::all_bridges(g);
}

/// The 2-edge-connected pieces left after deleting every bridge, plus the
/// bridges. When the bridges lie on one path, `blocks` and `bridges` are in
/// path order: bridge i joins blocks i and i+1.
struct BlockDecomposition {
  std::vector<std::vector<VertexId>> blocks;
  std::vector<EdgeId> bridges;
  bool path_flag = true;
};

inline BlockDecomposition block_decomposition(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("block_decomposition: graph is disconnected");
  BlockDecomposition out;
  const EdgeSet br = detail::all_bridges(g);
  const Components comp = components_without(g, br);
  auto groups = comp.groups();
  const auto bridge_ids = br.members();

  // The bridge tree: one node per block, one edge per bridge.
  std::vector<std::vector<std::pair<int, EdgeId>>> tree(comp.count);
  for (EdgeId e : bridge_ids) {
    int x = comp.label[g.edge(e).a];
    int y = comp.label[g.edge(e).b];
    tree[x].push_back({y, e});
    tree[y].push_back({x, e});
  }
  out.path_flag = std::all_of(tree.begin(), tree.end(), [](const auto& t) { return t.size() <= 2; });

  if (!out.path_flag || comp.count == 1) {
    out.blocks = std::move(groups);
    out.bridges = bridge_ids;
    return out;
  }
  // Walk the path from the end block holding the lowest vertex.
  int start = -1;
  for (int b = 0; b < comp.count && start == -1; ++b) {
    if (tree[b].size() == 1) start = b;
  }
  int prev = -1;
  for (int cur = start; cur != -1;) {
    out.blocks.push_back(groups[cur]);
    int next = -1;
    for (auto [to, e] : tree[cur]) {
      if (to != prev) {
        next = to;
        out.bridges.push_back(e);
        break;
      }
    }
    prev = cur;
    cur = next;
  }
  return out;
}

/// Result of 2-colouring the spanning subgraph on an edge subset.
struct BipartiteCheck {
  bool bipartite = true;
  std::vector<VertexId> odd_cycle;       // closed walk order, first vertex not repeated
  std::vector<EdgeId> odd_cycle_edges;   // odd_cycle_edges[i] joins odd_cycle[i] and odd_cycle[i+1 mod L]
};

inline BipartiteCheck bipartite_or_odd_cycle(const Graph& g, const EdgeSet& sub) {
  const int n = g.vertex_count();
  std::vector<int> colour(n, -1);
  std::vector<int> depth(n, 0);
  std::vector<EdgeId> parent_edge(n, -1);
  for (VertexId root = 0; root < n; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    std::queue<VertexId> q;
    q.push(root);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (EdgeId e : g.incident(v)) {
        if (!sub.contains(e) || e == parent_edge[v]) continue;
        VertexId u = g.edge(e).other(v);
        if (colour[u] == -1) {
          colour[u] = 1 - colour[v];
          depth[u] = depth[v] + 1;
          parent_edge[u] = e;
          q.push(u);
        } else if (colour[u] == colour[v]) {
          // Climb both ends to their lowest common ancestor.
          BipartiteCheck r;
          r.bipartite = false;
          std::vector<VertexId> left{v};
          std::vector<EdgeId> left_edges;
          std::vector<VertexId> right{u};
          std::vector<EdgeId> right_edges;
          VertexId x = v;
          VertexId y = u;
          while (x != y) {
            if (depth[x] >= depth[y]) {
              left_edges.push_back(parent_edge[x]);
              x = g.edge(parent_edge[x]).other(x);
              left.push_back(x);
            } else {
              right_edges.push_back(parent_edge[y]);
              y = g.edge(parent_edge[y]).other(y);
              right.push_back(y);
            }
          }
          // Cycle: lca ... v (reverse of left), then u ... up to just below lca.
          r.odd_cycle.assign(left.rbegin(), left.rend());
          r.odd_cycle_edges.assign(left_edges.rbegin(), left_edges.rend());
          r.odd_cycle_edges.push_back(e);
          for (std::size_t i = 0; i + 1 < right.size(); ++i) {
            r.odd_cycle.push_back(right[i]);
            r.odd_cycle_edges.push_back(right_edges[i]);
          }
          return r;
        }
      }
    }
  }
  return {};
}

/// Boundary of a vertex set together with its cut and parity flags.
struct CutWitness {
  std::vector<VertexId> side;  // ascending
  EdgeSet boundary;
  bool odd = false;            // |side| odd
  bool is_cut = false;         // boundary is an inclusion-minimal disconnecting set
};

/// True when deleting `x` increases the component count and deleting any
/// proper subset of `x` does not.
inline bool is_cut(const Graph& g, const EdgeSet& x) {
  const int base = components(g).count;
  if (components_without(g, x).count <= base) return false;
  // Deleting fewer edges never yields more components, so it suffices to
  // check the maximal proper subsets.
  for (EdgeId e : x.members()) {
    EdgeSet smaller = x;
    smaller.erase(e);
    if (components_without(g, smaller).count > base) return false;
  }
  return true;
}

inline EdgeSet boundary_edges(const Graph& g, const std::vector<bool>& in_side) {
  EdgeSet out(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (in_side[g.edge(e).a] != in_side[g.edge(e).b]) out.insert(e);
  }
  return out;
}

inline CutWitness boundary(const Graph& g, const std::vector<VertexId>& w) {
  std::vector<bool> in(g.vertex_count(), false);
  int count = 0;
  for (VertexId v : w) {
    if (!g.has_vertex(v)) throw PreconditionError("boundary: vertex out of range");
    if (!in[v]) ++count;
    in[v] = true;
  }
  if (count == 0 || count == g.vertex_count()) throw PreconditionError("boundary: side must be a nonempty proper subset");
  CutWitness c;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (in[v]) c.side.push_back(v);
  }
  c.boundary = boundary_edges(g, in);
  c.odd = count % 2 == 1;
  c.is_cut = is_cut(g, c.boundary);
  return c;
}

/// Finds an odd cut contained in `f`, if any.
///
/// A cut inside `f` is the boundary of a union of components of `g - f`.
/// For a connected piece C of `g`: if `C - f` has a component K of odd
/// order, the components D_1..D_r of `C - V(K)` each have boundary [K, D_j]
/// inside `f` and this boundary is a minimal cut; their orders sum to
/// |C| - |K|, so when |C| is even one of them is odd. If every component
/// of `C - f` is even, no union is odd.
inline std::optional<CutWitness> odd_cut_within(const Graph& g, const EdgeSet& f) {
  const Components whole = components(g);
  const auto pieces = whole.groups();
  const Components split = components_without(g, f);
  auto split_groups = split.groups();

  for (int pc = 0; pc < whole.count; ++pc) {
    const auto& piece = pieces[pc];
    // Parity can be fixed by absorbing another odd piece of g into W.
    int odd_other = -1;
    for (int q = 0; q < whole.count; ++q) {
      if (q != pc && pieces[q].size() % 2 == 1) {
        odd_other = q;
        break;
      }
    }
    std::vector<int> piece_components;
    for (int k = 0; k < split.count; ++k) {
      if (whole.label[split_groups[k].front()] == pc) piece_components.push_back(k);
    }
    if (piece_components.size() < 2) continue;

    auto make_witness = [&](const std::vector<bool>& in_d) -> CutWitness {
      // in_d marks D inside the piece; pick an odd W among D, piece - D,
      // each possibly joined with an odd other piece.
      std::vector<bool> in(g.vertex_count(), false);
      int d_size = 0;
      for (VertexId v : piece) {
        if (in_d[v]) {
          in[v] = true;
          ++d_size;
        }
      }
      if (d_size % 2 == 0) {
        const int rest = static_cast<int>(piece.size()) - d_size;
        if (rest % 2 == 1) {
          for (VertexId v : piece) in[v] = !in_d[v];
        } else {
          for (VertexId v : pieces[odd_other]) in[v] = true;
        }
      }
      CutWitness c;
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (in[v]) c.side.push_back(v);
      }
      c.boundary = boundary_edges(g, in);
      c.odd = c.side.size() % 2 == 1;
      c.is_cut = true;
      return c;
    };

    std::optional<int> odd_k;
    for (int k : piece_components) {
      if (split_groups[k].size() % 2 == 1) {
        odd_k = k;
        break;
      }
    }
    const bool any_cut_is_odd = piece.size() % 2 == 1 || odd_other != -1;
    if (!odd_k && !any_cut_is_odd) continue;
    const int k = odd_k.value_or(piece_components.front());

    std::vector<bool> in_k(g.vertex_count(), false);
    for (VertexId v : split_groups[k]) in_k[v] = true;
    const Components rest = detail::components_if(
        g, [](EdgeId) { return true; }, [&](VertexId v) { return whole.label[v] == pc && !in_k[v]; });
    for (const auto& d : rest.groups()) {
      if (d.empty() || whole.label[d.front()] != pc) continue;
      if (any_cut_is_odd || d.size() % 2 == 1) {
        std::vector<bool> in_d(g.vertex_count(), false);
        for (VertexId v : d) in_d[v] = true;
        return make_witness(in_d);
      }
    }
  }
  return std::nullopt;
}

}  // namespace cubicpm
