#pragma once

// JSON encodings of certificates and reports (nlohmann::json), and
// re-verification of a serialized certificate against its graph.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cubicpm/colouring.hpp"
#include "cubicpm/conjectures.hpp"
#include "cubicpm/constructions.hpp"
#include "cubicpm/graph.hpp"
#include "cubicpm/matching.hpp"
#include "cubicpm/structure.hpp"

namespace cubicpm {

using json = nlohmann::json;

inline json to_json(const EdgeSet& s) { return s.members(); }
inline json to_json(const PerfectMatching& m) { return to_json(m.edges); }

inline json to_json(const std::vector<PerfectMatching>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

inline EdgeSet edge_set_from_json(const Graph& g, const json& ids) {
  EdgeSet s(g.edge_count());
  for (const auto& x : ids) {
    const auto e = x.get<EdgeId>();
    if (!g.has_edge(e)) throw PreconditionError("certificate names unknown edge " + std::to_string(e));
    s.insert(e);
  }
  return s;
}

inline std::vector<PerfectMatching> matchings_from_json(const Graph& g, const json& lists) {
  std::vector<PerfectMatching> out;
  for (const auto& l : lists) out.push_back({edge_set_from_json(g, l)});
  return out;
}

inline json to_json(const ValidationReport& r, const Graph& g) {
  json out{{"vertices", g.vertex_count()},
           {"edges", g.edge_count()},
           {"connected", r.connected},
           {"cubic", r.cubic},
           {"bridgeless", r.bridgeless},
           {"simple", r.simple}};
  if (r.unreachable_vertex) out["unreachable_vertex"] = *r.unreachable_vertex;
  if (r.bad_degree_vertex) out["bad_degree_vertex"] = *r.bad_degree_vertex;
  if (r.bridge) out["bridge"] = *r.bridge;
  if (r.parallel_pair) out["parallel_pair"] = {r.parallel_pair->first, r.parallel_pair->second};
  return out;
}

inline json to_json(const OddnessCertificate& c) {
  return {{"value", c.oddness},
          {"witness", to_json(c.witness)},
          {"exhaustive", c.exhaustive},
          {"matchings_examined", c.matchings_examined}};
}

inline json to_json(const Rational& r) { return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator()); }

inline const char* colour_name(EdgeId c) {
  static const char* names[] = {"g0", "g1", "g2", "g3", "g4"};
  return names[c];
}

inline EdgeId colour_from_name(const std::string& s) {
  for (EdgeId c = 0; c < 5; ++c) {
    if (s == colour_name(c)) return c;
  }
  throw PreconditionError("unknown S4 colour " + s);
}

/// Correspondence sidecar of a construction; removed items map to null.
inline json to_json(const GadgetResult& r) {
  json out{{"vertices", r.graph.vertex_count()}, {"edges", r.graph.edge_count()}, {"new_edges", r.new_edges}};
  json copies = json::array();
  for (std::size_t i = 0; i < r.vertex_map.size(); ++i) {
    json vm = json::array();
    json em = json::array();
    for (const auto& v : r.vertex_map[i]) vm.push_back(v ? json(*v) : json(nullptr));
    for (const auto& e : r.edge_map[i]) em.push_back(e ? json(*e) : json(nullptr));
    copies.push_back({{"vertex_map", vm}, {"edge_map", em}});
  }
  out["copies"] = copies;
  out["anchors"] = r.anchors;
  return out;
}

/// One entry of a report's "results" object.
struct CheckResult {
  std::string status;  // ok | counterexample-candidate | none | skipped
  json certificate;
  std::uint64_t candidates_examined = 0;
  double wall_time_ms = 0;
  std::string note;

  json to_json() const {
    json out{{"status", status}, {"candidates_examined", candidates_examined}, {"wall_time_ms", wall_time_ms}};
    if (!certificate.is_null()) out["certificate"] = certificate;
    if (!note.empty()) out["note"] = note;
    return out;
  }
};

/// Re-verifies the certificate of result `name` from a report. Returns an
/// empty string when it checks out, else the reason it does not. Results
/// without a certificate are accepted as-is.
inline std::string recheck(const Graph& g, const std::string& name, const json& result,
                           const FrequencyConstraints& constraints = {}) {
  if (!result.contains("certificate")) return {};
  const json& cert = result.at("certificate");
  try {
    if (name == "s4-colouring") {
      S4Colouring f;
      for (const auto& c : cert.at("colouring")) f.push_back(colour_from_name(c.get<std::string>()));
      if (auto bad = verify_h_colouring(g, s4_host(), f)) return "colouring fails at vertex " + std::to_string(bad->vertex);
      pair_from_s4_colouring(g, f);
      return {};
    }
    const auto ms = matchings_from_json(g, cert.at("matchings"));
    for (const auto& m : ms) {
      if (!is_perfect_matching(g, m.edges)) return "certificate holds a non-perfect matching";
    }
    if (!meets(ms, constraints) && (name == "fr" || name == "s4")) return "prescribed frequencies not met";
    if (name == "fr") {
      if (ms.size() != 3) return "expected three matchings";
      if (verify_fr({{ms[0], ms[1], ms[2]}})) return "matchings share an edge";
    } else if (name == "s4" || name == "oddness2-path" || name == "fractional" || name == "bridge-path") {
      if (ms.size() != 2) return "expected two matchings";
      if (!verify_s4(g, {ms[0], ms[1]}).bipartite) return "complement of the union has an odd cycle";
    } else if (name == "oddcut") {
      if (ms.size() != 2) return "expected two matchings";
      if (verify_oddcut_pair(g, {ms[0], ms[1]})) return "intersection contains an odd cut";
    } else if (name == "bf") {
      if (ms.size() != 6) return "expected six matchings";
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (frequency(ms, e) != 2) return "edge " + std::to_string(e) + " not covered exactly twice";
      }
    } else if (name == "k-cover") {
      EdgeSet all(g.edge_count());
      for (const auto& m : ms) all |= m.edges;
      if (!bipartite_or_odd_cycle(g, all.complement()).bipartite) return "complement of the union has an odd cycle";
    } else {
      return "unknown result name " + name;
    }
  } catch (const std::exception& ex) {
    return std::string("malformed certificate: ") + ex.what();
  }
  return {};
}

}  // namespace cubicpm
