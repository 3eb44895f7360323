#include "bht/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "bht/core_eta.hpp"
#include "bht/families.hpp"
#include "bht/oracles.hpp"
#include "bht/patterns.hpp"
#include "bht/random.hpp"
#include "bht/search.hpp"
#include "bht/spectral.hpp"

namespace bht {

namespace {

struct Section {
  std::ostream& os;
  const char* name;
  bool ok = true;
  ~Section() { os << (ok ? "[ ok ] " : "[FAIL] ") << name << "\n"; }
  void expect(bool cond) { ok = ok && cond; }
};

std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

bool selftest(std::ostream& os, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  bool all_ok = true;
  auto run = [&](const char* name, auto&& body) {
    Section s{os, name};
    body(s);
    all_ok = all_ok && s.ok;
  };

  run("graph6 golden vectors and round trips", [&](Section& s) {
    s.expect(graph6_encode(complete(3)) == "Bw");
    s.expect(graph6_encode(path(3)) == "Bg");
    s.expect(graph6_encode(Graph(0)) == "?");
    s.expect(graph6_decode("Bw") == complete(3));
    for (int i = 0; i < 100; ++i) {
      Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 10), 0.4);
      s.expect(graph6_decode(graph6_encode(g)) == g);
    }
  });

  run("canonical labeling vs permutation isomorphism", [&](Section& s) {
    for (int i = 0; i < 60; ++i) {
      int n = 2 + static_cast<int>(rng() % 5);
      Graph a = random_graph(rng, n, 0.5);
      Graph b =
          (i % 2 == 0) ? relabeled(a, random_permutation(rng, n)) : random_graph(rng, n, 0.5);
      s.expect((canonical_form(a) == canonical_form(b)) == isomorphic_bruteforce(a, b));
    }
  });

  run("pattern detectors vs generic oracle (all graphs on 6 vertices)", [&](Section& s) {
    std::vector<PatternSpec> pats;
    for (int k = 4; k <= 7; ++k) pats.push_back(PatternSpec::fan(k));
    for (int k = 1; k <= 2; ++k) pats.push_back(PatternSpec::friendship(k));
    for (int r = 0; r <= 2; ++r) pats.push_back(PatternSpec::book(r));
    for (int t = 3; t <= 6; ++t) pats.push_back(PatternSpec::cycle(t));
    pats.push_back(PatternSpec::theta(1, 2, 2));
    pats.push_back(PatternSpec::theta(1, 2, 3));
    pats.push_back(PatternSpec::theta(2, 2, 2));
    for (const Graph& g : all_graphs_on(6))
      for (const PatternSpec& p : pats) {
        auto spec = contains(g, p);
        auto gen = generic_subiso(g, p.realize());
        s.expect(spec.has_value() == gen.has_value());
        if (spec) s.expect(validate_witness(g, *spec));
      }
  });

  run("k-core peeling vs subset oracle", [&](Section& s) {
    for (int i = 0; i < 50; ++i) {
      int n = 3 + static_cast<int>(rng() % 6);
      Graph g = random_graph(rng, n, 0.45);
      int k = 1 + static_cast<int>(rng() % 3);
      s.expect(k_core(g, k).core == k_core_bruteforce(g, k));
      s.expect(k_core(g, k, random_permutation(rng, n)).core == k_core(g, k).core);
    }
  });

  run("eta core inequality and eigen identity", [&](Section& s) {
    for (int i = 0; i < 50; ++i) {
      int n = 5 + static_cast<int>(rng() % 6);
      Graph g = random_connected_graph(rng, n, 0.4);
      CoreEtaContext ctx = decompose(g, 3);
      s.expect(slack_report(ctx).identity_residual <= 1e-6);
      for (int j = 0; j < 5; ++j) {
        VertexSet l{rng() & ctx.R.bits};
        s.expect(eta_core_inequality(ctx, l).holds);
      }
    }
  });

  run("matching: blossom vs branching oracle", [&](Section& s) {
    for (int i = 0; i < 50; ++i) {
      int n = 2 + static_cast<int>(rng() % 11);
      Graph g = random_graph(rng, n, 0.35);
      s.expect(max_matching(g, nullptr) == max_matching_bruteforce(g));
    }
  });

  run("enumeration census vs edge-subset oracle", [&](Section& s) {
    for (int m = 1; m <= 5; ++m) {
      SearchConfig cfg;
      cfg.m = m;
      cfg.n_max = 6;
      cfg.connected_only = false;
      long long count = 0;
      enumerate(cfg, [&](const Graph&) { ++count; });
      auto brute = all_graphs_bruteforce(6, m);
      std::erase_if(brute, [&](const Graph& g) { return g.order() > 6; });
      s.expect(count == static_cast<long long>(brute.size()));
    }
  });

  run("spectral radius vs full spectrum", [&](Section& s) {
    for (int i = 0; i < 40; ++i) {
      int n = 2 + static_cast<int>(rng() % 9);
      Graph g = random_graph(rng, n, 0.5);
      double a = spectral_radius(g).lambda1;
      double b = full_spectrum(g)[0];
      s.expect(std::fabs(a - b) <= 1e-8);
    }
  });

  return all_ok;
}

}  // namespace bht
