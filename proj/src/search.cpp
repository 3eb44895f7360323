#include "bht/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <thread>

namespace bht {

namespace {

constexpr double kTieTol = 1e-8;

struct EnumParams {
  long long m = 0;
  int n_max = 0;
  bool allow_new_component = false;
  bool connected_mode = false;
  const PatternSpec* prune_pattern = nullptr;
};

// Canonical edge restricted to edges whose deletion (after stripping isolated
// vertices) keeps the graph connected. Every connected graph with >= 2 edges
// has one: a cycle edge, or a leaf edge of a tree. Keeping the parent
// connected lets the connected-only enumeration stay within connected graphs.
std::pair<int, int> canonical_min_edge_connected(const Graph& h) {
  std::vector<int> p = canonical_permutation(h);
  for (int j = 1; j < h.order(); ++j)
    for (int i = 0; i < j; ++i) {
      if (!h.has_edge(p[i], p[j])) continue;
      if (is_connected(strip_isolated(delete_edge(h, p[i], p[j])))) return {p[i], p[j]};
    }
  throw std::logic_error("connected graph without a connectivity-preserving edge");
}

int derived_n_min(long long m) {
  // smallest n with C(n,2) >= m
  int n = 0;
  while (static_cast<long long>(n) * (n - 1) / 2 < m) ++n;
  return std::max(n, m > 0 ? 2 : 0);
}

// Children of one parent in the canonical-deletion tree: extend by one edge
// (within the graph, to one new vertex, or as a fresh K_2), keep a child iff
// deleting its canonical edge reproduces the parent, dedup children by
// canonical form.
std::vector<Graph> children_of(const Graph& parent, const std::string& parent_canon,
                               const EnumParams& P) {
  std::vector<Graph> out;
  std::set<std::string> seen;
  const int n = parent.order();
  std::vector<Graph> cands;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!parent.has_edge(u, v)) cands.push_back(add_edge(parent, u, v));
  if (n + 1 <= P.n_max) {
    Graph grown = disjoint_union(parent, Graph(1));
    for (int u = 0; u < n; ++u) cands.push_back(add_edge(grown, u, n));
  }
  if (P.allow_new_component && n + 2 <= P.n_max) {
    Graph grown = disjoint_union(parent, Graph(2));
    cands.push_back(add_edge(grown, n, n + 1));
  }
  for (const Graph& h : cands) {
    if (P.prune_pattern && contains(h, *P.prune_pattern)) continue;
    auto [eu, ev] = P.connected_mode ? canonical_min_edge_connected(h) : canonical_min_edge(h);
    Graph back = strip_isolated(delete_edge(h, eu, ev));
    if (canonical_form(back).bytes != parent_canon) continue;
    std::string hc = canonical_form(h).bytes;
    if (seen.insert(hc).second) out.push_back(h);
  }
  return out;
}

void check_rails(const SearchConfig& cfg, int n_max_effective) {
  if (cfg.m < 1) throw std::invalid_argument("search needs m >= 1");
  bool small_m = cfg.m <= 14 && n_max_effective <= 11;
  bool small_n = n_max_effective <= 9 &&
                 cfg.m <= static_cast<long long>(n_max_effective) * (n_max_effective - 1) / 2;
  if (!small_m && !small_n)
    throw std::invalid_argument(
        "exhaustive search guard rails: m <= 14 with n_max <= 11, or n_max <= 9");
}

int effective_n_max(const SearchConfig& cfg) {
  long long cap = cfg.n_max > 0 ? cfg.n_max : std::min<long long>(cfg.m + 1, 11);
  return static_cast<int>(std::min<long long>(cap, kMaxVertices));
}

struct FinalFilter {
  const SearchConfig& cfg;
  int n_min;

  // structural constraints define census.generated
  bool structural(const Graph& g) const {
    if (g.order() < n_min) return false;
    if (cfg.connected_only && !is_connected(g)) return false;
    return true;
  }
  // family constraints define census.passed
  bool family(const Graph& g) const {
    if (cfg.require_nonbipartite && odd_girth(g) == 0) return false;
    if (cfg.pattern && contains(g, *cfg.pattern)) return false;
    return true;
  }
};

struct Accumulator {
  double best = -1.0;
  std::vector<std::pair<std::string, double>> near_best;
  long long generated = 0, passed = 0;

  void add(const Graph& g, const FinalFilter& f) {
    if (!f.structural(g)) return;
    ++generated;
    if (!f.family(g)) return;
    ++passed;
    double lam = spectral_radius(g).lambda1;
    if (lam > best) best = lam;
    if (lam >= best - kTieTol) {
      near_best.push_back({canonical_form(g).bytes, lam});
      if (near_best.size() > 4096) compact();
    }
  }
  void compact() {
    std::erase_if(near_best, [&](const auto& e) { return e.second < best - kTieTol; });
  }
  void merge(const Accumulator& o) {
    generated += o.generated;
    passed += o.passed;
    best = std::max(best, o.best);
    near_best.insert(near_best.end(), o.near_best.begin(), o.near_best.end());
  }
};

int worker_count(const SearchConfig& cfg) {
  if (cfg.workers > 0) return cfg.workers;
  if (const char* env = std::getenv("BHT_WORKERS")) {
    int w = std::atoi(env);
    if (w > 0) return w;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

// Expands one subtree root level by level up to depth m.
void run_subtree(const Graph& root, long long root_m, const EnumParams& P, long long target_m,
                 const std::function<void(const Graph&)>& yield) {
  if (root_m == target_m) {
    yield(root);
    return;
  }
  std::vector<Graph> level{root};
  for (long long cur = root_m; cur < target_m; ++cur) {
    std::vector<Graph> next;
    for (const Graph& g : level) {
      std::string canon = canonical_form(g).bytes;
      for (Graph& child : children_of(g, canon, P)) next.push_back(std::move(child));
    }
    level = std::move(next);
  }
  for (const Graph& g : level) yield(g);
}

std::vector<Graph> levels_to_depth(const EnumParams& P, long long depth) {
  std::vector<Graph> level{Graph::from_edges(2, {{0, 1}})};
  if (P.prune_pattern) {
    std::erase_if(level, [&](const Graph& g) { return contains(g, *P.prune_pattern).has_value(); });
  }
  for (long long cur = 1; cur < depth; ++cur) {
    std::vector<Graph> next;
    for (const Graph& g : level) {
      std::string canon = canonical_form(g).bytes;
      for (Graph& child : children_of(g, canon, P)) next.push_back(std::move(child));
    }
    level = std::move(next);
  }
  return level;
}

EnumParams make_params(const SearchConfig& cfg, int n_max_eff) {
  EnumParams P;
  P.m = cfg.m;
  P.n_max = n_max_eff;
  P.allow_new_component = !cfg.connected_only;
  P.connected_mode = cfg.connected_only;
  P.prune_pattern = (cfg.pattern && cfg.prune_by_pattern) ? &*cfg.pattern : nullptr;
  return P;
}

}  // namespace

void enumerate(const SearchConfig& cfg, const std::function<void(const Graph&)>& yield) {
  int n_max_eff = effective_n_max(cfg);
  check_rails(cfg, n_max_eff);
  EnumParams P = make_params(cfg, n_max_eff);
  FinalFilter filter{cfg, cfg.n_min > 0 ? cfg.n_min : derived_n_min(cfg.m)};
  for (const Graph& root : levels_to_depth(P, 1))
    run_subtree(root, 1, P, cfg.m, [&](const Graph& g) {
      if (filter.structural(g) && filter.family(g)) yield(g);
    });
}

SearchReport extremal_search(const SearchConfig& cfg) {
  if (cfg.mode == SearchMode::hill_climb)
    throw std::invalid_argument("hill_climb mode needs a start graph; call hill_climb()");
  int n_max_eff = effective_n_max(cfg);
  check_rails(cfg, n_max_eff);
  EnumParams P = make_params(cfg, n_max_eff);
  FinalFilter filter{cfg, cfg.n_min > 0 ? cfg.n_min : derived_n_min(cfg.m)};

  // The canonical-deletion subtrees are independent; workers pull roots from
  // a shared index and the merged report is order-independent.
  long long split_depth = std::min<long long>(4, std::max<long long>(1, cfg.m - 1));
  std::vector<Graph> roots = levels_to_depth(P, split_depth);

  int nworkers = std::min<int>(worker_count(cfg), std::max<size_t>(roots.size(), 1));
  std::vector<Accumulator> accs(nworkers);
  std::atomic<size_t> next_root{0};
  auto work = [&](int wi) {
    for (;;) {
      size_t i = next_root.fetch_add(1);
      if (i >= roots.size()) break;
      run_subtree(roots[i], split_depth, P, cfg.m,
                  [&](const Graph& g) { accs[wi].add(g, filter); });
    }
  };
  if (nworkers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int wi = 0; wi < nworkers; ++wi) threads.emplace_back(work, wi);
    for (auto& t : threads) t.join();
  }

  Accumulator total;
  for (const Accumulator& a : accs) total.merge(a);
  total.compact();

  SearchReport rep;
  rep.n_max_effective = n_max_eff;
  rep.census.generated = total.generated;
  rep.census.passed = total.passed;
  rep.census.pattern_pruned = P.prune_pattern != nullptr;
  if (total.passed > 0) {
    rep.best_lambda = total.best;
    std::set<std::string> canons;
    for (const auto& [canon, lam] : total.near_best)
      if (lam >= total.best - kTieTol) canons.insert(canon);
    rep.argmax.assign(canons.begin(), canons.end());
  }
  return rep;
}

SearchReport verify_bound(BoundKind kind, int k, const SearchConfig& cfg_in) {
  SearchConfig cfg = cfg_in;
  BoundSpec spec{kind, k, cfg.m};
  switch (kind) {
    case BoundKind::nosal:
      cfg.pattern = PatternSpec::clique(3);
      break;
    case BoundKind::lnw:
      cfg.pattern = PatternSpec::clique(3);
      cfg.require_nonbipartite = true;
      break;
    case BoundKind::fan_theorem:
      cfg.pattern = PatternSpec::fan(2 * k + 2);
      break;
    case BoundKind::friendship_f23:
      cfg.pattern = PatternSpec::friendship(2);
      break;
    case BoundKind::brualdi_hoffman:
      cfg.pattern.reset();
      cfg.connected_only = false;
      break;
  }
  SearchReport rep = extremal_search(cfg);
  BoundReport br;
  br.kind = kind;
  br.value = bound_value(spec);
  br.gap = br.value - rep.best_lambda;
  br.violated = rep.census.passed > 0 && rep.best_lambda > br.value + kTieTol;
  rep.bound = br;
  return rep;
}

SearchReport hill_climb(const SearchConfig& cfg, const Graph& start) {
  if (start.edge_count() != cfg.m) throw std::invalid_argument("start graph has the wrong size");
  FinalFilter filter{cfg, 0};
  if (!filter.family(start)) throw std::invalid_argument("start graph fails the pattern filter");
  std::mt19937_64 rng(cfg.seed);
  Graph g = start;
  double lam = spectral_radius(g).lambda1;
  SearchReport rep;
  long long steps = 0;
  bool improved = true;
  while (improved && steps < cfg.budget) {
    improved = false;
    // rotations: delete uv, add uw
    struct Move {
      int u, v, w;
    };
    std::vector<Move> moves;
    for (auto [u, v] : g.edges())
      for (int piv : {u, v}) {
        int other = piv == u ? v : u;
        for (int w = 0; w < g.order(); ++w)
          if (w != piv && w != other && !g.has_edge(piv, w)) moves.push_back({piv, other, w});
      }
    std::shuffle(moves.begin(), moves.end(), rng);
    for (const Move& mv : moves) {
      ++rep.moves;
      Graph h = add_edge(delete_edge(g, mv.u, mv.v), mv.u, mv.w);
      if (cfg.connected_only && !is_connected(strip_isolated(h))) continue;
      if (!filter.family(h)) continue;
      double lh = spectral_radius(h).lambda1;
      if (lh > lam + 1e-10) {
        g = h;
        lam = lh;
        improved = true;
        ++steps;
        break;
      }
    }
  }
  rep.best_lambda = lam;
  rep.argmax = {canonical_form(strip_isolated(g)).bytes};
  rep.census.generated = rep.moves;
  rep.census.passed = 1;
  rep.n_max_effective = g.order();
  return rep;
}

}  // namespace bht
