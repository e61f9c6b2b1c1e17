// cubicpm: batch checker for perfect-matching properties of cubic graphs.
//
//   cubicpm analyze   [inputs...]            structure + oddness per graph
//   cubicpm check     [inputs...] --which    FR / S4 / odd-cut / BF searches
//   cubicpm construct [inputs...] --method   constructive S4-pairs and covers
//   cubicpm gadget NAME [input]   --out      gadget graphs with a .map.json sidecar
//
// Reports are JSON lines on stdout, one per input graph, in input order.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "cubicpm/cubicpm.hpp"
#include "cubicpm/report.hpp"

namespace {

using namespace cubicpm;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCounterexample = 2;

struct Options {
  std::vector<std::string> inputs;
  std::string format = "graph6";
  int max_vertices = -1;  // -1: each operation's own default
  std::uint64_t max_pms = 0;
  double time_budget = 0;  // seconds per graph, 0 = none
  bool recheck = false;
  unsigned jobs = 1;

  std::string which = "fr,s4,oddcut,bf,s4-colouring";
  std::optional<std::string> spec_edge;
  std::optional<std::string> spec_vertex;

  std::string method = "oddness2-path";
  int k = 2;
};

struct Item {
  std::string id;
  std::optional<Graph> graph;
  std::string error;
};

struct Outcome {
  json report;
  bool counterexample = false;
  bool succeeded = false;
};

std::string read_stream(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

std::vector<Item> load(const Options& opt) {
  std::vector<std::string> sources = opt.inputs.empty() ? std::vector<std::string>{"-"} : opt.inputs;
  std::vector<Item> out;
  for (const auto& src : sources) {
    std::string text;
    if (src == "-") {
      text = read_stream(std::cin);
    } else {
      std::ifstream f(src, std::ios::binary);
      if (!f) throw std::runtime_error("cannot read " + src);
      text = read_stream(f);
    }
    const std::string name = src == "-" ? "stdin" : src;
    if (opt.format == "edgelist") {
      if (text.find_first_not_of(" \t\r\n") == std::string::npos) continue;
      Item it{name, std::nullopt, {}};
      try {
        it.graph = parse_edgelist(text);
      } catch (const Error& e) {
        it.error = e.what();
      }
      out.push_back(std::move(it));
      continue;
    }
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
      ++line_no;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (line.empty()) continue;
      Item it{name + ":" + std::to_string(line_no), std::nullopt, {}};
      try {
        it.graph = parse_graph6(line);
      } catch (const Error& e) {
        it.error = e.what();
      }
      out.push_back(std::move(it));
    }
  }
  return out;
}

Limits limits_for(const Options& opt, int default_max_vertices = Limits{}.max_vertices) {
  Limits l;
  l.max_vertices = opt.max_vertices >= 0 ? opt.max_vertices : default_max_vertices;
  l.max_pms = opt.max_pms;
  if (opt.time_budget > 0) {
    l.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(opt.time_budget));
  }
  return l;
}

double ms_since(Clock::time_point t0) { return std::chrono::duration<double, std::milli>(Clock::now() - t0).count(); }

json matchings_json(const std::vector<PerfectMatching>& ms) { return json{{"matchings", to_json(ms)}}; }

/// Runs `body`, turning cap refusals and precondition failures into a
/// skipped result and proof-step violations into a failed one.
CheckResult guarded(const std::function<CheckResult()>& body) {
  const auto t0 = Clock::now();
  CheckResult r;
  try {
    r = body();
  } catch (const CapExceeded& e) {
    r = CheckResult{"skipped", nullptr, 0, 0, e.what()};
  } catch (const PreconditionError& e) {
    r = CheckResult{"skipped", nullptr, 0, 0, e.what()};
  } catch (const ProofStepViolation& e) {
    r = CheckResult{"failed", nullptr, 0, 0, std::string("proof step violated: ") + e.what()};
  }
  r.wall_time_ms = ms_since(t0);
  return r;
}

json oddness_entry(const Graph& g, const ValidationReport& v, const Options& opt) {
  if (!v.cubic) return json{{"skipped", "input is not cubic"}};
  try {
    return to_json(oddness(g, limits_for(opt)));
  } catch (const Error& e) {
    return json{{"skipped", e.what()}};
  }
}

json base_report(const Item& it, const ValidationReport& v, const Options& opt) {
  return json{{"graph_id", it.id}, {"structural", to_json(v, *it.graph)}, {"oddness", oddness_entry(*it.graph, v, opt)}};
}

std::optional<FrequencySpec> parse_spec(const Options& opt) {
  if (opt.spec_edge) {
    const auto eq = opt.spec_edge->find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--spec-edge", "expected E=i");
    return FrequencySpec::edge(std::stoi(opt.spec_edge->substr(0, eq)), std::stoi(opt.spec_edge->substr(eq + 1)));
  }
  if (opt.spec_vertex) {
    const auto eq = opt.spec_vertex->find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--spec-vertex", "expected V=i,j,k");
    std::vector<int> f;
    std::stringstream rest(opt.spec_vertex->substr(eq + 1));
    std::string part;
    while (std::getline(rest, part, ',')) f.push_back(std::stoi(part));
    if (f.size() != 3) throw CLI::ValidationError("--spec-vertex", "expected three frequencies");
    return FrequencySpec::vertex(std::stoi(opt.spec_vertex->substr(0, eq)), f[0], f[1], f[2]);
  }
  return std::nullopt;
}

std::vector<std::string> split_which(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty()) continue;
    if (part != "fr" && part != "s4" && part != "oddcut" && part != "bf" && part != "s4-colouring") {
      throw CLI::ValidationError("--which", "unknown check " + part);
    }
    out.push_back(part);
  }
  return out;
}

/// Adds the outcome of a re-verification of every result's certificate.
void attach_recheck(const Graph& g, json& report, const std::map<std::string, FrequencyConstraints>& constraints) {
  const json round_trip = json::parse(report.dump());
  for (auto& [name, result] : report["results"].items()) {
    auto it = constraints.find(name);
    const std::string why = recheck(g, name, round_trip.at("results").at(name), it == constraints.end() ? FrequencyConstraints{} : it->second);
    result["recheck"] = why.empty() ? json("pass") : json(why);
  }
}

Outcome run_check(const Item& it, const Options& opt, const std::vector<std::string>& which,
                  const std::optional<FrequencySpec>& spec) {
  const Graph& g = *it.graph;
  const auto v = validate(g);
  const bool bridgeless_cubic = v.connected && v.cubic && v.bridgeless;
  Outcome out;
  out.report = base_report(it, v, opt);
  out.report["results"] = json::object();
  std::map<std::string, FrequencyConstraints> used;

  auto conclude = [&](const std::string& name, CheckResult r, bool found) {
    if (r.status.empty()) {
      if (found) {
        r.status = "ok";
      } else if (bridgeless_cubic) {
        r.status = "counterexample-candidate";
        if (name == "fr" || name == "s4") out.counterexample = true;
      } else {
        r.status = "none";
        r.note = "exhaustive search found no certificate; precondition \"bridgeless cubic\" unmet";
      }
    }
    out.report["results"][name] = r.to_json();
  };

  for (const auto& name : which) {
    bool found = false;
    CheckResult r = guarded([&] {
      CheckResult c;
      if (name == "fr") {
        const auto cs = spec ? spec->constraints(g, FrequencyTarget::fr_triple) : FrequencyConstraints{};
        used[name] = cs;
        const auto s = find_fr_triple(g, cs, limits_for(opt));
        c.candidates_examined = s.candidates_examined;
        if (s.found) c.certificate = matchings_json({s.found->m[0], s.found->m[1], s.found->m[2]});
        found = s.found.has_value();
      } else if (name == "s4") {
        const auto cs = spec ? spec->constraints(g, FrequencyTarget::s4_pair) : FrequencyConstraints{};
        used[name] = cs;
        const auto s = find_s4_pair(g, cs, std::nullopt, limits_for(opt));
        c.candidates_examined = s.candidates_examined;
        if (s.found) c.certificate = matchings_json({s.found->first, s.found->second});
        found = s.found.has_value();
      } else if (name == "oddcut") {
        const auto s = find_oddcut_pair(g, limits_for(opt));
        c.candidates_examined = s.candidates_examined;
        if (s.found) c.certificate = matchings_json({s.found->first, s.found->second});
        found = s.found.has_value();
      } else if (name == "bf") {
        const auto s = find_bf_cover(g, limits_for(opt, bf_cover_limits().max_vertices));
        c.candidates_examined = s.candidates_examined;
        if (s.found) c.certificate = matchings_json({s.found->begin(), s.found->end()});
        found = s.found.has_value();
      } else {
        const auto s = find_s4_pair(g, FrequencyConstraints{}, std::nullopt, limits_for(opt));
        c.candidates_examined = s.candidates_examined;
        if (s.found) {
          json names = json::array();
          for (EdgeId col : s4_colouring_from_pair(g, *s.found)) names.push_back(colour_name(col));
          c.certificate = matchings_json({s.found->first, s.found->second});
          c.certificate["colouring"] = names;
        }
        found = s.found.has_value();
      }
      return c;
    });
    conclude(name, r, found);
  }
  if (opt.recheck) attach_recheck(g, out.report, used);
  out.succeeded = true;
  return out;
}

Outcome run_construct(const Item& it, const Options& opt) {
  const Graph& g = *it.graph;
  const auto v = validate(g);
  Outcome out;
  out.report = base_report(it, v, opt);
  out.report["results"] = json::object();
  CheckResult r = guarded([&] {
    CheckResult c;
    const Limits limits = limits_for(opt);
    if (opt.method == "oddness2-path") {
      detail::require_bridgeless_cubic(g, "oddness2-path");
      const auto res = construct_s4_oddness2_path(g, limits);
      c.certificate = matchings_json({res.pair.first, res.pair.second});
      c.certificate["path"] = res.path;
    } else if (opt.method == "fractional") {
      detail::require_bridgeless_cubic(g, "fractional");
      const auto res = construct_s4_fractional(g, limits);
      c.certificate = matchings_json({res.pair.first, res.pair.second});
      c.certificate["achieved"] = to_json(res.step.achieved);
      c.certificate["bound"] = to_json(res.step.bound);
      if (res.step.hitting) c.certificate["hitting"] = to_json(*res.step.hitting);
    } else if (opt.method == "k-cover") {
      detail::require_bridgeless_cubic(g, "k-cover");
      const auto ms = k_cover_bipartite(g, opt.k, limits);
      c.certificate = matchings_json(ms);
      c.certificate["k"] = opt.k;
    } else {
      const auto res = bridge_path_s4(g, limits);
      c.candidates_examined = res.candidates_examined;
      if (!res.pair) {
        c.status = v.ok() ? "counterexample-candidate" : "none";
        return c;
      }
      c.certificate = matchings_json({res.pair->first, res.pair->second});
      c.certificate["blocks"] = static_cast<int>(res.blocks.size());
    }
    c.status = "ok";
    return c;
  });
  if (r.status == "ok") {
    r.certificate["verified"] = recheck(g, opt.method, json{{"certificate", r.certificate}}).empty();
  }
  out.report["results"][opt.method] = r.to_json();
  if (opt.recheck) attach_recheck(g, out.report, {});
  out.succeeded = true;
  return out;
}

/// Processes items on `jobs` workers; lines are printed in input order.
int run_batch(const std::vector<Item>& items, unsigned jobs, const std::function<Outcome(const Item&)>& work) {
  std::vector<Outcome> results(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      const Item& it = items[i];
      if (!it.graph) {
        results[i].report = json{{"graph_id", it.id}, {"error", it.error}};
        continue;
      }
      try {
        results[i] = work(it);
      } catch (const std::exception& e) {
        results[i].report = json{{"graph_id", it.id}, {"error", e.what()}};
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  bool any_ok = false;
  bool counterexample = false;
  for (const auto& r : results) {
    std::cout << r.report.dump() << '\n';
    any_ok = any_ok || r.succeeded;
    counterexample = counterexample || r.counterexample;
  }
  std::cout.flush();
  if (counterexample) return kExitCounterexample;
  if (!items.empty() && !any_ok) return kExitUsage;
  return kExitOk;
}

Outcome run_analyze(const Item& it, const Options& opt) {
  const auto v = validate(*it.graph);
  Outcome out{base_report(it, v, opt), false, true};
  return out;
}

struct GadgetOptions {
  std::string name;
  std::string input;
  std::string named;
  int vertex = 0;
  int edge = 0;
  int t = 3;
  bool force = false;
  std::string out;
};

int run_gadget(const GadgetOptions& go, const Options& opt) {
  static const std::vector<std::string> names{"k4star", "pstar", "gwpv", "k4prime", "h", "no-s4"};
  if (std::find(names.begin(), names.end(), go.name) == names.end()) {
    std::cerr << "cubicpm gadget: unknown gadget '" << go.name << "' (expected one of k4star, pstar, gwpv, k4prime, h, no-s4)\n";
    return kExitUsage;
  }
  GadgetResult res;
  if (go.name == "no-s4") {
    res.graph = no_s4_family(go.t);
  } else {
    Graph base;
    if (!go.named.empty()) {
      base = named_graph(go.named);
    } else {
      Options single = opt;
      single.inputs = go.input.empty() ? std::vector<std::string>{} : std::vector<std::string>{go.input};
      const auto items = load(single);
      if (items.empty()) throw PreconditionError("gadget: no base graph in input");
      if (!items.front().graph) throw PreconditionError("gadget: " + items.front().error);
      base = *items.front().graph;
    }
    if (go.name == "k4star") res = gadget_k4star(base, go.vertex);
    if (go.name == "pstar") res = gadget_pstar(base, go.vertex);
    if (go.name == "gwpv") res = gadget_gwpv(base, go.vertex);
    if (go.name == "k4prime") res = gadget_k4prime(base, go.edge);
    if (go.name == "h") res = gadget_h(base, go.edge, opt.max_vertices >= 0 ? opt.max_vertices : 512, go.force);
  }
  json summary{{"gadget", go.name}, {"vertices", res.graph.vertex_count()}, {"edges", res.graph.edge_count()},
               {"anchors", res.anchors}};
  if (go.out.empty()) {
    std::cout << serialize_edgelist(res.graph);
    return kExitOk;
  }
  std::ofstream edges(go.out);
  std::ofstream sidecar(go.out + ".map.json");
  if (!edges || !sidecar) throw std::runtime_error("cannot write " + go.out);
  edges << serialize_edgelist(res.graph);
  sidecar << to_json(res).dump(2) << '\n';
  summary["out"] = go.out;
  summary["map"] = go.out + ".map.json";
  std::cout << summary.dump() << '\n';
  return kExitOk;
}

void add_common(CLI::App* sub, Options& opt) {
  sub->add_option("inputs", opt.inputs, "Input files ('-' or none for standard input)");
  sub->add_option("--format", opt.format, "Input format")->check(CLI::IsMember({"graph6", "edgelist"}));
  sub->add_option("--max-vertices", opt.max_vertices, "Vertex cap for exhaustive searches");
  sub->add_option("--max-pms", opt.max_pms, "Perfect matching cap (0 = unlimited)");
  sub->add_option("--time-budget", opt.time_budget, "Seconds allowed per graph (0 = unlimited)");
  sub->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfect matching checks and constructions for cubic graphs"};
  app.require_subcommand(1);
  Options opt;
  GadgetOptions go;

  auto* analyze = app.add_subcommand("analyze", "Structural report and oddness per graph");
  add_common(analyze, opt);

  auto* check = app.add_subcommand("check", "Search for FR-triples, S4-pairs, odd-cut-free pairs, BF covers");
  add_common(check, opt);
  check->add_option("--which", opt.which, "Comma list of fr,s4,oddcut,bf,s4-colouring");
  auto* se = check->add_option("--spec-edge", opt.spec_edge, "Prescribed frequency E=i for fr and s4");
  check->add_option("--spec-vertex", opt.spec_vertex, "Prescribed frequencies V=i,j,k for fr and s4")->excludes(se);
  check->add_flag("--recheck", opt.recheck, "Re-verify every certificate from its JSON form");

  auto* construct = app.add_subcommand("construct", "Constructive S4-pairs and odd cycle covers");
  add_common(construct, opt);
  construct->add_option("--method", opt.method, "Construction")
      ->check(CLI::IsMember({"oddness2-path", "fractional", "k-cover", "bridge-path"}));
  construct->add_option("--k", opt.k, "Number of matchings for k-cover")->check(CLI::Range(1, 27));
  construct->add_flag("--recheck", opt.recheck, "Re-verify every certificate from its JSON form");

  auto* gadget = app.add_subcommand("gadget", "Build a gadget graph around a base graph");
  gadget->add_option("name", go.name, "k4star | pstar | gwpv | k4prime | h | no-s4")->required();
  gadget->add_option("input", go.input, "Base graph file (default: standard input)");
  gadget->add_option("--format", opt.format, "Input format")->check(CLI::IsMember({"graph6", "edgelist"}));
  gadget->add_option("--named", go.named, "Use a built-in base graph")->check(CLI::IsMember(named_graph_names()));
  gadget->add_option("--vertex", go.vertex, "Base vertex w");
  gadget->add_option("--edge", go.edge, "Base edge a");
  gadget->add_option("--t", go.t, "Cycle length for no-s4");
  gadget->add_option("--max-vertices", opt.max_vertices, "Size cap for gadget h");
  gadget->add_flag("--force", go.force, "Build gadget h beyond the size cap");
  gadget->add_option("--out", go.out, "Edge-list output path; the sidecar goes to PATH.map.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gadget->parsed()) return run_gadget(go, opt);
    std::optional<FrequencySpec> spec;
    std::vector<std::string> which;
    if (check->parsed()) {
      which = split_which(opt.which);
      spec = parse_spec(opt);
      if (spec) {
        for (int f : spec->freq) {
          if (f < 0 || f > 2) {
            std::cerr << "cubicpm check: frequencies must be 0, 1 or 2\n";
            return kExitUsage;
          }
        }
      }
      if (spec && spec->kind == FrequencySpec::Kind::vertex) {
        const int sum = spec->freq[0] + spec->freq[1] + spec->freq[2];
        for (const auto& w : which) {
          if ((w == "fr" && sum != 3) || (w == "s4" && sum != 2)) {
            std::cerr << "cubicpm check: vertex frequencies for " << w << " must sum to " << (w == "fr" ? 3 : 2) << '\n';
            return kExitUsage;
          }
        }
      }
    }
    const auto items = load(opt);
    if (analyze->parsed()) return run_batch(items, opt.jobs, [&](const Item& it) { return run_analyze(it, opt); });
    if (check->parsed()) return run_batch(items, opt.jobs, [&](const Item& it) { return run_check(it, opt, which, spec); });
    return run_batch(items, opt.jobs, [&](const Item& it) { return run_construct(it, opt); });
  } catch (const CLI::ValidationError& e) {
    std::cerr << "cubicpm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "cubicpm: malformed number in arguments\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "cubicpm: " << e.what() << '\n';
    return kExitUsage;
  }
}
