// bht: workbench for Brualdi-Hoffman-Turan style spectral extremal checks.
// Subcommands: gen, lambda, free, core, eta, decompose, search, verify,
// trace-ineq, selftest. Exit codes: 0 ok, 1 usage/format error, 2 a verified
// bound came back violated, 3 an exact computation hit its capability cap.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bht/core_eta.hpp"
#include "bht/families.hpp"
#include "bht/json_io.hpp"
#include "bht/oracles.hpp"
#include "bht/patterns.hpp"
#include "bht/search.hpp"
#include "bht/selftest.hpp"
#include "bht/spectral.hpp"

using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolated = 2;
constexpr int kExitCapability = 3;

// All numeric output carries 12 significant digits.
double sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

struct GraphInputs {
  std::vector<std::string> g6;
  std::string file;
  bool use_stdin = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--g6", g6, "graph6 string (repeatable)");
    cmd->add_option("--file", file, "file of graph6 lines or edge-list JSON");
    cmd->add_flag("--stdin", use_stdin, "read graph6 lines from stdin");
  }

  std::vector<bht::Graph> load() const {
    std::vector<bht::Graph> out;
    for (const std::string& s : g6) out.push_back(bht::graph6_decode(s));
    auto load_stream = [&](std::istream& in) {
      std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      size_t first = content.find_first_not_of(" \t\r\n");
      if (first != std::string::npos && (content[first] == '{' || content[first] == '[')) {
        json j = json::parse(content);
        if (j.is_array())
          for (const auto& item : j) out.push_back(bht::graph_from_edge_json(item));
        else
          out.push_back(bht::graph_from_edge_json(j));
        return;
      }
      std::istringstream lines(content);
      std::string line;
      while (std::getline(lines, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) out.push_back(bht::graph6_decode(line));
      }
    };
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw std::invalid_argument("cannot open file: " + file);
      load_stream(in);
    }
    if (use_stdin) load_stream(std::cin);
    if (out.empty()) throw std::invalid_argument("no input graph; pass --g6, --file or --stdin");
    return out;
  }
};

json report_shell(const std::string& command, std::uint64_t seed) {
  json j;
  j["tool"] = "bht";
  j["version"] = kVersion;
  j["schema"] = 1;
  j["command"] = command;
  j["seed"] = seed;
  return j;
}

json vertex_list(bht::VertexSet s) {
  json a = json::array();
  for (int v : s) a.push_back(v);
  return a;
}

json spectral_json(const bht::SpectralResult& sr, bool full, const bht::Graph& g) {
  json r;
  r["lambda1"] = sig12(sr.lambda1);
  if (sr.lambda2) r["lambda2"] = sig12(*sr.lambda2);
  r["residual"] = sig12(sr.residual);
  r["iterations"] = sr.iterations;
  r["u_star"] = sr.u_star;
  json perron = json::array();
  for (double x : sr.perron) perron.push_back(sig12(x));
  r["perron"] = perron;
  if (full) {
    json spec = json::array();
    for (double lam : bht::full_spectrum(g)) spec.push_back(sig12(lam));
    r["spectrum"] = spec;
  }
  return r;
}

json search_report_json(const bht::SearchReport& rep) {
  json r;
  r["best_lambda"] = sig12(rep.best_lambda);
  r["argmax"] = rep.argmax;
  r["census"] = {{"generated", rep.census.generated},
                 {"passed", rep.census.passed},
                 {"pattern_pruned", rep.census.pattern_pruned}};
  r["n_max_effective"] = rep.n_max_effective;
  if (rep.moves > 0) r["moves"] = rep.moves;
  if (rep.bound) {
    r["bound"] = {{"value", sig12(rep.bound->value)},
                  {"gap", sig12(rep.bound->gap)},
                  {"violated", rep.bound->violated}};
    if (rep.bound->violated)
      r["bound"]["note"] =
          "violation at desk scale is a finding to inspect, not a refutation of the "
          "large-m statement";
  }
  return r;
}

bht::Graph gen_family(const std::string& family, const std::vector<int>& p) {
  auto need = [&](size_t k) {
    if (p.size() != k)
      throw std::invalid_argument("family " + family + " expects " + std::to_string(k) +
                                  " parameter(s)");
  };
  if (family == "path") return need(1), bht::path(p[0]);
  if (family == "cycle") return need(1), bht::cycle(p[0]);
  if (family == "complete") return need(1), bht::complete(p[0]);
  if (family == "bipartite") return need(2), bht::complete_bipartite(p[0], p[1]);
  if (family == "empty") return need(1), bht::empty_graph(p[0]);
  if (family == "fan") return need(1), bht::fan(p[0]).graph;
  if (family == "friendship") return need(1), bht::friendship(p[0]).graph;
  if (family == "theta") return need(3), bht::theta(p[0], p[1], p[2]);
  if (family == "book") return need(1), bht::book(p[0]);
  if (family == "snk") return need(2), bht::split_like(p[0], p[1]).graph;
  if (family == "splus") return need(2), bht::s_plus(p[0], p[1]).graph;
  if (family == "extremal") return need(2), bht::extremal(p[0], p[1]).graph;
  if (family == "matching") return need(1), bht::matching_graph(p[0]);
  if (family == "sk") return need(1), bht::subdivided_kb(p[0]);
  if (family == "rk") return need(1), bht::rk(p[0]);
  if (family == "bh") return need(2), bht::bh_graph(p[0], p[1]);
  throw std::invalid_argument("unknown family: " + family);
}

bht::BoundKind parse_bound(const std::string& text, int& k_out) {
  k_out = 0;
  if (text == "nosal") return bht::BoundKind::nosal;
  if (text == "lnw") return bht::BoundKind::lnw;
  if (text == "f23") return bht::BoundKind::friendship_f23;
  if (text == "bh") return bht::BoundKind::brualdi_hoffman;
  if (text.rfind("fan:", 0) == 0) {
    k_out = std::stoi(text.substr(4));
    return bht::BoundKind::fan_theorem;
  }
  throw std::invalid_argument("unknown bound: " + text + " (nosal|lnw|f23|bh|fan:K)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral extremal graph workbench"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for randomized batteries")->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "construct a named family member");
  std::string family;
  std::vector<int> params;
  bool gen_json = false, gen_g6 = false;
  gen->add_option("family", family,
                  "path|cycle|complete|bipartite|empty|fan|friendship|theta|book|snk|splus|"
                  "extremal|matching|sk|rk|bh")
      ->required();
  gen->add_option("params", params, "family parameters");
  gen->add_flag("--json", gen_json, "emit edge-list JSON");
  gen->add_flag("--g6", gen_g6, "emit graph6 (default)");

  // lambda
  auto* lambda = app.add_subcommand("lambda", "spectral radius and Perron vector");
  GraphInputs lambda_in;
  lambda_in.attach(lambda);
  bool lambda_full = false, lambda_json = false;
  lambda->add_flag("--full", lambda_full, "include the full spectrum");
  lambda->add_flag("--json", lambda_json, "full JSON report (default prints lambda1 lines)");

  // free
  auto* free_cmd = app.add_subcommand("free", "forbidden-subgraph check");
  GraphInputs free_in;
  free_in.attach(free_cmd);
  std::string pattern_text;
  free_cmd->add_option("--pattern", pattern_text, "fan:k|fr:k|theta:t,p,q|book:r|cycle:t|clique:r|oddfree:k|g6:S")
      ->required();

  // core
  auto* core_cmd = app.add_subcommand("core", "k-core with peel certificate");
  GraphInputs core_in;
  core_in.attach(core_cmd);
  int core_k = 0;
  core_cmd->add_option("--k", core_k, "core order")->required();

  // eta
  auto* eta_cmd = app.add_subcommand("eta", "eta(L) against the core of G[L]");
  GraphInputs eta_in;
  eta_in.attach(eta_cmd);
  int eta_k = 0;
  std::string eta_set;
  eta_cmd->add_option("--k", eta_k, "forbidden-fan parameter k")->required();
  eta_cmd->add_option("--set", eta_set, "comma-separated vertices of L (subset of R)")->required();

  // decompose
  auto* dec_cmd = app.add_subcommand("decompose", "extremal-vertex decomposition");
  GraphInputs dec_in;
  dec_in.attach(dec_cmd);
  int dec_k = 0;
  dec_cmd->add_option("--k", dec_k, "forbidden-fan parameter k")->required();

  // search
  auto* search_cmd = app.add_subcommand("search", "extremal search over graphs of size m");
  long long search_m = 0;
  std::string search_pattern, search_mode = "exhaustive", search_start;
  int search_nmin = 0, search_nmax = 0, search_workers = 0;
  long long search_budget = 10000;
  bool search_disconnected = false, search_json = false, search_no_prune = false;
  search_cmd->add_option("--m", search_m, "edge count")->required();
  search_cmd->add_option("--pattern", search_pattern, "forbidden pattern");
  search_cmd->add_option("--mode", search_mode, "exhaustive|hill_climb");
  search_cmd->add_option("--start", search_start, "hill-climb start graph (graph6)");
  search_cmd->add_option("--nmin", search_nmin, "minimum order");
  search_cmd->add_option("--nmax", search_nmax, "maximum order");
  search_cmd->add_option("--workers", search_workers, "worker threads (0 = auto)");
  search_cmd->add_option("--budget", search_budget, "hill-climb move budget");
  search_cmd->add_flag("--disconnected", search_disconnected, "include disconnected graphs");
  search_cmd->add_flag("--no-prune", search_no_prune, "disable mid-level pattern pruning");
  search_cmd->add_flag("--json", search_json, "JSON report");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "exhaustive check of a closed-form bound");
  std::string verify_bound_text;
  long long verify_m = 0;
  int verify_nmax = 0, verify_workers = 0;
  verify_cmd->add_option("--bound", verify_bound_text, "nosal|lnw|f23|bh|fan:K")->required();
  verify_cmd->add_option("--m", verify_m, "edge count")->required();
  verify_cmd->add_option("--nmax", verify_nmax, "maximum order");
  verify_cmd->add_option("--workers", verify_workers, "worker threads (0 = auto)");

  // trace-ineq
  auto* trace_cmd = app.add_subcommand("trace-ineq", "power-trace inequality check");
  GraphInputs trace_in;
  trace_in.attach(trace_cmd);
  int trace_k = 0;
  trace_cmd->add_option("--k", trace_k, "odd cycles C_3..C_{2k+1} must be absent")->required();

  // selftest
  auto* selftest_cmd = app.add_subcommand("selftest", "run the oracle-equivalence battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      bht::Graph g = gen_family(family, params);
      if (gen_json) {
        json j = bht::graph_to_edge_json(g);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << bht::graph6_encode(g) << "\n";
      }
      return kExitOk;
    }

    if (*lambda) {
      json rep = report_shell("lambda", seed);
      json inputs = json::array(), results = json::array();
      for (const bht::Graph& g : lambda_in.load()) {
        inputs.push_back({{"g6", bht::graph6_encode(g)},
                          {"canonical", bht::canonical_form(g).bytes}});
        bht::SpectralResult sr = bht::spectral_radius(g);
        results.push_back(spectral_json(sr, lambda_full, g));
        if (!lambda_json) std::cout << sig12(sr.lambda1) << "\n";
      }
      if (lambda_json) {
        rep["inputs"] = inputs;
        rep["results"] = results;
        std::cout << rep.dump(2) << "\n";
      }
      return kExitOk;
    }

    if (*free_cmd) {
      bht::PatternSpec pat = bht::parse_pattern(pattern_text);
      json rep = report_shell("free", seed);
      json inputs = json::array(), results = json::array();
      for (const bht::Graph& g : free_in.load()) {
        inputs.push_back({{"g6", bht::graph6_encode(g)},
                          {"canonical", bht::canonical_form(g).bytes}});
        auto w = bht::contains(g, pat);
        json r;
        r["pattern"] = pat.to_string();
        r["contains"] = w.has_value();
        if (w) r["witness"] = w->map;
        results.push_back(r);
      }
      rep["inputs"] = inputs;
      rep["results"] = results;
      std::cout << rep.dump(2) << "\n";
      return kExitOk;
    }

    if (*core_cmd) {
      json rep = report_shell("core", seed);
      json inputs = json::array(), results = json::array();
      for (const bht::Graph& g : core_in.load()) {
        inputs.push_back({{"g6", bht::graph6_encode(g)},
                          {"canonical", bht::canonical_form(g).bytes}});
        bht::CoreResult cr = bht::k_core(g, core_k);
        json r;
        r["k"] = core_k;
        r["core"] = vertex_list(cr.core);
        json peel = json::array();
        for (auto [v, d] : cr.peel_order) peel.push_back({v, d});
        r["peel_order"] = peel;
        results.push_back(r);
      }
      rep["inputs"] = inputs;
      rep["results"] = results;
      std::cout << rep.dump(2) << "\n";
      return kExitOk;
    }

    if (*eta_cmd) {
      json rep = report_shell("eta", seed);
      json inputs = json::array(), results = json::array();
      bht::VertexSet l;
      std::stringstream ss(eta_set);
      std::string tok;
      while (std::getline(ss, tok, ',')) l = l.with(std::stoi(tok));
      for (const bht::Graph& g : eta_in.load()) {
        inputs.push_back({{"g6", bht::graph6_encode(g)},
                          {"canonical", bht::canonical_form(g).bytes}});
        bht::CoreEtaContext ctx = bht::decompose(g, eta_k);
        bht::EtaCoreReport er = bht::eta_core_inequality(ctx, l);
        json r;
        r["k"] = eta_k;
        r["set"] = vertex_list(l);
        r["eta"] = sig12(er.eta_l);
        r["eta_core"] = sig12(er.eta_core);
        r["core"] = vertex_list(er.core);
        r["holds"] = er.holds;
        r["equal_sets"] = er.equal_sets;
        results.push_back(r);
      }
      rep["inputs"] = inputs;
      rep["results"] = results;
      std::cout << rep.dump(2) << "\n";
      return kExitOk;
    }

    if (*dec_cmd) {
      json rep = report_shell("decompose", seed);
      json inputs = json::array(), results = json::array();
      for (const bht::Graph& g : dec_in.load()) {
        inputs.push_back({{"g6", bht::graph6_encode(g)},
                          {"canonical", bht::canonical_form(g).bytes}});
        bht::CoreEtaContext ctx = bht::decompose(g, dec_k);
        bht::SlackReport sl = bht::slack_report(ctx);
        json r;
        r["k"] = ctx.k;
        r["lambda"] = sig12(ctx.lambda);
        r["u_star"] = ctx.u_star;
        r["R"] = vertex_list(ctx.R);
        r["S"] = vertex_list(ctx.S);
        r["S0"] = vertex_list(ctx.S0);
        r["S1"] = vertex_list(ctx.S1);
        r["gamma"] = sig12(ctx.gamma);
        json x = json::array();
        for (double xi : ctx.x) x.push_back(sig12(xi));
        r["x"] = x;
        r["slacks"] = {{"identity_residual", sig12(sl.identity_residual)},
                       {"quadratic_slack", sig12(sl.quadratic_slack)},
                       {"eta_r", sig12(sl.eta_r)},
                       {"e_s", sl.e_s},
                       {"eta_slack", sig12(sl.eta_slack)},
                       {"eta_gamma_slack", sig12(sl.eta_gamma_slack)}};
        json comps = json::array();
        for (const bht::ComponentClass& cc : bht::classify_components(ctx)) {
          const char* names[] = {"J1", "J2", "J3", "J4", "J5"};
          json c;
          c["vertices"] = vertex_list(cc.component);
          c["class"] = names[static_cast<int>(cc.kind)];
          c["order"] = cc.order;
          if (cc.circumference >= 0) c["circumference"] = cc.circumference;
          if (cc.t_missing) c["t_missing"] = *cc.t_missing;
          c["eta"] = sig12(cc.eta);
          comps.push_back(c);
        }
        r["components"] = comps;
        results.push_back(r);
      }
      rep["inputs"] = inputs;
      rep["results"] = results;
      std::cout << rep.dump(2) << "\n";
      return kExitOk;
    }

    if (*search_cmd) {
      bht::SearchConfig cfg;
      cfg.m = search_m;
      cfg.n_min = search_nmin;
      cfg.n_max = search_nmax;
      cfg.connected_only = !search_disconnected;
      cfg.prune_by_pattern = !search_no_prune;
      cfg.seed = seed;
      cfg.budget = search_budget;
      cfg.workers = search_workers;
      if (!search_pattern.empty()) cfg.pattern = bht::parse_pattern(search_pattern);
      bht::SearchReport sr;
      if (search_mode == "hill_climb") {
        cfg.mode = bht::SearchMode::hill_climb;
        if (search_start.empty())
          throw std::invalid_argument("hill_climb needs --start <graph6>");
        sr = bht::hill_climb(cfg, bht::graph6_decode(search_start));
      } else if (search_mode == "exhaustive") {
        sr = bht::extremal_search(cfg);
      } else {
        throw std::invalid_argument("unknown mode: " + search_mode);
      }
      json rep = report_shell("search", seed);
      rep["results"] = search_report_json(sr);
      if (search_json) {
        std::cout << rep.dump(2) << "\n";
      } else {
        std::cout << "best_lambda " << sig12(sr.best_lambda) << "\n";
        for (const std::string& c : sr.argmax) std::cout << "argmax " << c << "\n";
        std::cout << "census " << sr.census.generated << " generated, " << sr.census.passed
                  << " passed\n";
      }
      return kExitOk;
    }

    if (*verify_cmd) {
      int k = 0;
      bht::BoundKind kind = parse_bound(verify_bound_text, k);
      bht::SearchConfig cfg;
      cfg.m = verify_m;
      cfg.n_max = verify_nmax;
      cfg.workers = verify_workers;
      cfg.seed = seed;
      bht::SearchReport sr = bht::verify_bound(kind, k, cfg);
      json rep = report_shell("verify", seed);
      rep["results"] = search_report_json(sr);
      std::cout << rep.dump(2) << "\n";
      return sr.bound && sr.bound->violated ? kExitViolated : kExitOk;
    }

    if (*trace_cmd) {
      json rep = report_shell("trace-ineq", seed);
      json inputs = json::array(), results = json::array();
      for (const bht::Graph& g : trace_in.load()) {
        inputs.push_back({{"g6", bht::graph6_encode(g)},
                          {"canonical", bht::canonical_form(g).bytes}});
        bool applicable = bht::odd_girth_check(g, trace_k);
        bht::TraceInequalityReport tr = bht::trace_inequality(g, trace_k);
        json r;
        r["k"] = trace_k;
        r["applicable"] = applicable;
        r["lhs"] = sig12(tr.lhs);
        r["half_trace"] = sig12(tr.half_trace);
        r["holds"] = tr.holds;
        r["trace_walks"] = sig12(bht::power_trace_walks(g, 2 * trace_k));
        r["trace_spectrum"] = sig12(bht::power_trace_spectrum(g, 2 * trace_k));
        results.push_back(r);
      }
      rep["inputs"] = inputs;
      rep["results"] = results;
      std::cout << rep.dump(2) << "\n";
      return kExitOk;
    }

    if (*selftest_cmd) {
      return bht::selftest(std::cout, seed) ? kExitOk : kExitUsage;
    }
  } catch (const bht::capability_error& e) {
    std::cerr << "capability: " << e.what() << "\n";
    return kExitCapability;
  } catch (const bht::format_error& e) {
    std::cerr << "format: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
