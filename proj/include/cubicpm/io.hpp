#pragma once

// graph6 (simple graphs, McKay's encoding) and a plain edge-list format
// for multigraphs.

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cubicpm/error.hpp"
#include "cubicpm/graph.hpp"

namespace cubicpm {

namespace detail {

inline constexpr int kG6Bias = 63;
inline constexpr char kG6Header[] = ">>graph6<<";

inline int g6_value(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6: unexpected end of input", pos);
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", pos);
  return c - kG6Bias;
}

}  // namespace detail

/// Decodes one graph6 line. A trailing newline and the optional
/// ">>graph6<<" header are accepted. Edges come out in bit order, i.e.
/// (i, j) with i < j sorted by j then i.
inline Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  std::size_t pos = 0;
  const std::string_view header = detail::kG6Header;
  if (text.substr(0, header.size()) == header) pos = header.size();
  if (pos < text.size() && text[pos] == ':') throw ParseError("graph6: sparse6 input not supported", pos);
  if (pos < text.size() && text[pos] == '&') throw ParseError("graph6: digraph6 input not supported", pos);

  std::uint64_t n = 0;
  int first = detail::g6_value(text, pos);
  if (first < 63) {
    n = static_cast<std::uint64_t>(first);
    pos += 1;
  } else if (detail::g6_value(text, pos + 1) < 63) {
    for (int k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::uint64_t>(detail::g6_value(text, pos + k));
    pos += 4;
  } else {
    for (int k = 2; k <= 7; ++k) n = (n << 6) | static_cast<std::uint64_t>(detail::g6_value(text, pos + k));
    pos += 8;
  }
  if (n > (1u << 20)) throw ParseError("graph6: vertex count too large", pos);

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw ParseError("graph6: expected " + std::to_string(bytes) + " adjacency bytes, found " +
                         std::to_string(text.size() - pos),
                     text.size() < pos + bytes ? text.size() : pos + bytes);
  }

  Graph g(static_cast<int>(n));
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      const int value = detail::g6_value(text, pos + k / 6);
      if ((value >> (5 - k % 6)) & 1) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
    }
  }
  // Padding bits must be zero.
  if (bits % 6 != 0) {
    const std::size_t last = pos + bytes - 1;
    const int value = detail::g6_value(text, last);
    const int pad = static_cast<int>(6 - bits % 6);
    if ((value & ((1 << pad) - 1)) != 0) throw ParseError("graph6: nonzero padding bits", last);
  }
  return g;
}

/// Encodes a simple graph as graph6 without header or newline.
inline std::string serialize_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.vertex_count());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + detail::kG6Bias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + detail::kG6Bias));
  } else {
    out.append(2, static_cast<char>(126));
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + detail::kG6Bias));
  }

  std::vector<bool> adj(n * n, false);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.edge(e);
    auto&& cell = adj[static_cast<std::uint64_t>(a) * n + static_cast<std::uint64_t>(b)];
    if (cell) throw PreconditionError("graph6 cannot encode parallel edges");
    cell = true;
    adj[static_cast<std::uint64_t>(b) * n + static_cast<std::uint64_t>(a)] = true;
  }

  int acc = 0;
  int used = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (adj[i * n + j] ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + detail::kG6Bias));
        acc = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + detail::kG6Bias));
  return out;
}

/// Parses the edge-list format:
///
///     # comment
///     n m
///     u v      (m lines, 0-based vertex ids)
///
/// '#' starts a comment anywhere on a line; blank lines are skipped. Edge
/// order in the file is the edge-id order of the result.
inline Graph parse_edgelist(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  Graph g;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    long long x = 0;
    long long y = 0;
    if (!(fields >> x)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) throw ParseError("edgelist: expected integers", line_no);
      continue;
    }
    if (!(fields >> y)) throw ParseError("edgelist: expected two integers", line_no);
    std::string rest;
    if (fields >> rest) throw ParseError("edgelist: trailing data", line_no);

    if (!have_header) {
      if (x < 0 || y < 0 || x > (1 << 24)) throw ParseError("edgelist: bad header", line_no);
      n = x;
      m = y;
      g = Graph(static_cast<int>(n));
      have_header = true;
      continue;
    }
    if (g.edge_count() == m) throw ParseError("edgelist: more edges than declared", line_no);
    if (x < 0 || y < 0 || x >= n || y >= n) throw ParseError("edgelist: vertex id out of range", line_no);
    if (x == y) throw ParseError("edgelist: loop at vertex " + std::to_string(x), line_no);
    g.add_edge(static_cast<VertexId>(x), static_cast<VertexId>(y));
  }
  if (!have_header) throw ParseError("edgelist: missing \"n m\" header", line_no);
  if (g.edge_count() != m) {
    throw ParseError("edgelist: declared " + std::to_string(m) + " edges, found " + std::to_string(g.edge_count()),
                     line_no);
  }
  return g;
}

inline std::string serialize_edgelist(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.a) + " " + std::to_string(e.b) + "\n";
  return out;
}

}  // namespace cubicpm
