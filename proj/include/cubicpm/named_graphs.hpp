#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cubicpm/colouring.hpp"
#include "cubicpm/error.hpp"
#include "cubicpm/graph.hpp"

namespace cubicpm {

/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5-7-9-6-8.
/// Edge ids: outer (0,1),(1,2),(2,3),(3,4),(0,4) = 0..4, spokes 5..9,
/// inner (5,7),(7,9),(6,9),(6,8),(5,8) = 10..14.
inline Graph petersen() {
  return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                    {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                    {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
}

/// Edges (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).
inline Graph k4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

/// Sides {0,1,2} and {3,4,5}.
inline Graph k33() {
  Graph g(6);
  for (VertexId a = 0; a < 3; ++a) {
    for (VertexId b = 3; b < 6; ++b) g.add_edge(a, b);
  }
  return g;
}

/// Triangles 0-1-2 and 3-4-5 joined by i -- i+3.
inline Graph prism() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}); }

/// The 3-cube on 0..7, i ~ j when they differ in one bit.
inline Graph cube() {
  Graph g(8);
  for (VertexId i = 0; i < 8; ++i) {
    for (int bit = 1; bit < 8; bit <<= 1) {
      if ((i & bit) == 0) g.add_edge(i, i | bit);
    }
  }
  return g;
}

/// Two vertices joined by three parallel edges.
inline Graph c23() { return Graph(2, {{0, 1}, {0, 1}, {0, 1}}); }

inline const std::vector<std::string>& named_graph_names() {
  static const std::vector<std::string> names{"petersen", "k4", "k33", "prism", "cube", "c23", "s4"};
  return names;
}

inline Graph named_graph(std::string_view name) {
  if (name == "petersen") return petersen();
  if (name == "k4") return k4();
  if (name == "k33") return k33();
  if (name == "prism") return prism();
  if (name == "cube") return cube();
  if (name == "c23") return c23();
  if (name == "s4") return s4_host();
  throw PreconditionError("unknown graph name: " + std::string(name));
}

}  // namespace cubicpm
