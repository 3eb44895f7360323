#include "bht/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "bht/search.hpp"

namespace bht {

bool isomorphic_bruteforce(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  const int n = a.order();
  if (n > 9) throw capability_error("permutation isomorphism oracle capped at 9 vertices");
  auto degseq = [](const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degseq(a) != degseq(b)) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

void all_paths_dfs(const Graph& g, int cur, std::uint64_t used, int len, int& best) {
  best = std::max(best, len);
  for (int w : VertexSet{g.neighbors(cur) & ~used})
    all_paths_dfs(g, w, used | (std::uint64_t{1} << w), len + 1, best);
}

bool cycle_dfs(const Graph& g, int anchor, int cur, std::uint64_t used, int len, int target) {
  if (len == target) return g.has_edge(cur, anchor);
  for (int w : VertexSet{g.neighbors(cur) & ~used})
    if (w > anchor &&
        cycle_dfs(g, anchor, w, used | (std::uint64_t{1} << w), len + 1, target))
      return true;
  return false;
}

}  // namespace

int longest_path_bruteforce(const Graph& g) {
  if (g.order() > 12) throw capability_error("path oracle capped at 12 vertices");
  int best = 0;
  for (int v = 0; v < g.order(); ++v)
    all_paths_dfs(g, v, std::uint64_t{1} << v, 1, best);
  return best;
}

int longest_cycle_bruteforce(const Graph& g) {
  if (g.order() > 12) throw capability_error("cycle oracle capped at 12 vertices");
  for (int target = g.order(); target >= 3; --target)
    for (int anchor = 0; anchor < g.order(); ++anchor)
      if (cycle_dfs(g, anchor, anchor, std::uint64_t{1} << anchor, 1, target)) return target;
  return 0;
}

int max_matching_bruteforce(const Graph& g) {
  if (g.order() > 16) throw capability_error("matching oracle capped at 16 vertices");
  auto rec = [&](auto&& self, std::uint64_t alive) -> int {
    int u = -1;
    for (int v : VertexSet{alive})
      if (g.neighbors(v) & alive & ~(std::uint64_t{1} << v)) {
        u = v;
        break;
      }
    if (u < 0) return 0;
    std::uint64_t rest = alive & ~(std::uint64_t{1} << u);
    int best = self(self, rest);  // u unmatched
    for (int v : VertexSet{g.neighbors(u) & rest})
      best = std::max(best, 1 + self(self, rest & ~(std::uint64_t{1} << v)));
    return best;
  };
  return rec(rec, g.vertex_mask().bits);
}

VertexSet k_core_bruteforce(const Graph& g, int k) {
  if (g.order() > 16) throw capability_error("core oracle capped at 16 vertices");
  std::uint64_t result = 0;
  std::uint64_t full = g.vertex_mask().bits;
  for (std::uint64_t s = 0; s <= full; ++s) {
    bool ok = true;
    for (int v : VertexSet{s})
      if (std::popcount(g.neighbors(v) & s) < k) {
        ok = false;
        break;
      }
    if (ok) result |= s;
  }
  return {result};
}

std::vector<Graph> all_graphs_bruteforce(int n_max, int m) {
  if (n_max > 7) throw capability_error("edge-subset census oracle capped at 7 vertices");
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n_max; ++u)
    for (int v = u + 1; v < n_max; ++v) slots.push_back({u, v});
  const int ne = static_cast<int>(slots.size());
  std::map<std::string, Graph> reps;
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  if (m > ne) return {};
  if (m == 0) return {Graph(0)};
  for (;;) {
    std::vector<std::pair<int, int>> edges;
    for (int i : idx) edges.push_back(slots[i]);
    Graph g = strip_isolated(Graph::from_edges(n_max, edges));
    std::string c = canonical_form(g).bytes;
    reps.emplace(c, g);
    int i = m - 1;
    while (i >= 0 && idx[i] == ne - m + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::vector<Graph> out;
  for (auto& [c, g] : reps) out.push_back(g);
  return out;
}

long long count_graph_classes_bruteforce(int n) {
  if (n < 0 || n > 7) throw capability_error("orbit census oracle capped at 7 vertices");
  if (n <= 1) return 1;
  std::vector<std::pair<int, int>> slots;
  std::vector<std::vector<int>> slot_index(n, std::vector<int>(n, -1));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      slot_index[u][v] = slot_index[v][u] = static_cast<int>(slots.size());
      slots.push_back({u, v});
    }
  const int ne = static_cast<int>(slots.size());
  // action of each non-identity vertex permutation on the edge slots
  std::vector<std::vector<int>> actions;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<int> act(ne);
    for (int s = 0; s < ne; ++s) act[s] = slot_index[perm[slots[s].first]][perm[slots[s].second]];
    actions.push_back(std::move(act));
  }
  long long classes = 0;
  const std::uint32_t full = (1u << ne) - 1u;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    bool minimal = true;
    for (const std::vector<int>& act : actions) {
      std::uint32_t image = 0;
      std::uint32_t rest = mask;
      while (rest) {
        int s = std::countr_zero(rest);
        rest &= rest - 1;
        image |= 1u << act[s];
      }
      if (image < mask) {
        minimal = false;
        break;
      }
    }
    if (minimal) ++classes;
  }
  return classes;
}

std::vector<Graph> all_graphs_on(int n) {
  if (n < 0 || n > 7) throw capability_error("graph census helper capped at 7 vertices");
  const int slots = n * (n - 1) / 2;
  std::map<std::string, Graph> reps;
  auto pad_and_insert = [&](const Graph& g) {
    Graph padded = disjoint_union(g, Graph(n - g.order()));
    reps.emplace(canonical_form(padded).bytes, padded);
    Graph co = complement(padded);
    reps.emplace(canonical_form(co).bytes, co);
  };
  pad_and_insert(Graph(0));
  // classes with m > slots/2 arrive as complements of the generated ones
  for (int m = 1; m <= slots / 2; ++m) {
    SearchConfig cfg;
    cfg.m = m;
    cfg.n_max = n;
    cfg.connected_only = false;
    enumerate(cfg, [&](const Graph& g) { pad_and_insert(g); });
  }
  std::vector<Graph> out;
  for (auto& [c, g] : reps) out.push_back(g);
  return out;
}

}  // namespace bht
