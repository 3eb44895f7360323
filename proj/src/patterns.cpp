#include "bht/patterns.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

namespace bht {

namespace {

constexpr int kSubsetDpCap = 24;
constexpr std::uint64_t kDfsBudget = 50'000'000;

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// ---------------------------------------------------------------------------
// exact longest path / cycle by subset DP
// ---------------------------------------------------------------------------

int longest_path_dp(const Graph& g, std::vector<int>* out) {
  const int n = g.order();
  if (n == 0) return 0;
  if (n > kSubsetDpCap) throw capability_error("longest-path DP capped at 24 vertices");
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
  std::vector<std::uint32_t> ends(static_cast<size_t>(full) + 1, 0);
  for (int v = 0; v < n; ++v) ends[1u << v] = 1u << v;
  int best = 1;
  std::uint32_t best_mask = 1, best_end = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t e = ends[mask];
    if (!e) continue;
    int pc = std::popcount(mask);
    if (pc > best) {
      best = pc;
      best_mask = mask;
      best_end = static_cast<std::uint32_t>(std::countr_zero(e));
    }
    while (e) {
      int v = std::countr_zero(e);
      e &= e - 1;
      std::uint32_t ext = static_cast<std::uint32_t>(g.neighbors(v)) & ~mask;
      while (ext) {
        int w = std::countr_zero(ext);
        ext &= ext - 1;
        ends[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  if (out) {
    // walk the DP backwards from (best_mask, best_end)
    out->clear();
    std::uint32_t mask = best_mask;
    int v = static_cast<int>(best_end);
    // recover an endpoint actually recorded for best_mask
    for (int u = 0; u < n; ++u)
      if (ends[best_mask] >> u & 1) {
        v = u;
        break;
      }
    out->push_back(v);
    while (std::popcount(mask) > 1) {
      std::uint32_t prev_mask = mask & ~(1u << v);
      std::uint32_t cand = ends[prev_mask] & static_cast<std::uint32_t>(g.neighbors(v));
      int u = std::countr_zero(cand);
      out->push_back(u);
      mask = prev_mask;
      v = u;
    }
    std::reverse(out->begin(), out->end());
  }
  return best;
}

}  // namespace

int longest_path_order(const Graph& g) { return longest_path_dp(g, nullptr); }

int neighborhood_longest_path(const Graph& g, int u) {
  g.check_vertex(u);
  if (g.degree(u) > kSubsetDpCap)
    throw capability_error("neighborhood exceeds the 24-vertex longest-path DP cap");
  return longest_path_dp(induced(g, g.neighbor_set(u)).graph, nullptr);
}

int longest_cycle(const Graph& g) {
  const int n = g.order();
  if (n > kSubsetDpCap) throw capability_error("circumference DP capped at 24 vertices");
  if (n < 3 || g.edge_count() < 3) return 0;
  const std::uint32_t full = (1u << n) - 1u;
  // ends[mask]: endpoints of paths that start at the lowest vertex of mask
  std::vector<std::uint32_t> ends(static_cast<size_t>(full) + 1, 0);
  for (int v = 0; v < n; ++v) ends[1u << v] = 1u << v;
  int best = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t e = ends[mask];
    if (!e) continue;
    int anchor = std::countr_zero(mask);
    int pc = std::popcount(mask);
    if (pc >= 3 && pc > best &&
        (e & static_cast<std::uint32_t>(g.neighbors(anchor))))
      best = pc;
    while (e) {
      int v = std::countr_zero(e);
      e &= e - 1;
      std::uint32_t ext = static_cast<std::uint32_t>(g.neighbors(v)) & ~mask;
      // only extend with vertices above the anchor
      ext &= ~((1u << anchor) - 1u) & ~(1u << anchor);
      while (ext) {
        int w = std::countr_zero(ext);
        ext &= ext - 1;
        ends[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// twin-pruned DFS searches (no size cap)
// ---------------------------------------------------------------------------

namespace {

struct PathSearch {
  const Graph& g;
  std::vector<int> twin;
  int target = 0;
  std::uint64_t nodes = 0;
  std::vector<int> stack;

  explicit PathSearch(const Graph& gg) : g(gg), twin(twin_classes(gg)) {}

  bool dfs(int cur, std::uint64_t used, int len) {
    if (++nodes > kDfsBudget) throw capability_error("path search exceeded its node budget");
    if (len == target) return true;
    std::uint64_t cand = g.neighbors(cur) & ~used;
    std::uint64_t seen_class = 0;
    for (int w : VertexSet{cand}) {
      if (seen_class >> twin[w] & 1) continue;
      seen_class |= bit(twin[w]);
      stack.push_back(w);
      if (dfs(w, used | bit(w), len + 1)) return true;
      stack.pop_back();
    }
    return false;
  }

  bool run(std::vector<int>* out) {
    if (target <= 0) {
      if (out) out->clear();
      return true;
    }
    if (target > g.order()) return false;
    std::uint64_t seen_class = 0;
    for (int v = 0; v < g.order(); ++v) {
      if (seen_class >> twin[v] & 1) continue;
      seen_class |= bit(twin[v]);
      stack.assign(1, v);
      if (dfs(v, bit(v), 1)) {
        if (out) *out = stack;
        return true;
      }
    }
    return false;
  }
};

// Finds a cycle with exactly `len` vertices, if any.
struct CycleSearch {
  const Graph& g;
  std::vector<int> twin;
  int len = 0;
  int anchor = 0;
  std::uint64_t nodes = 0;
  std::vector<int> stack;

  explicit CycleSearch(const Graph& gg) : g(gg), twin(twin_classes(gg)) {}

  bool dfs(int cur, std::uint64_t used, int depth) {
    if (++nodes > kDfsBudget) throw capability_error("cycle search exceeded its node budget");
    if (depth == len) return g.has_edge(cur, anchor);
    std::uint64_t cand = g.neighbors(cur) & ~used & ~bit(anchor);
    std::uint64_t seen_class = 0;
    for (int w : VertexSet{cand}) {
      if (seen_class >> twin[w] & 1) continue;
      seen_class |= bit(twin[w]);
      stack.push_back(w);
      if (dfs(w, used | bit(w), depth + 1)) return true;
      stack.pop_back();
    }
    return false;
  }

  std::optional<std::vector<int>> run(int t) {
    len = t;
    if (t < 3 || t > g.order()) return std::nullopt;
    std::uint64_t seen_class = 0;
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) < 2) continue;
      if (seen_class >> twin[v] & 1) continue;
      seen_class |= bit(twin[v]);
      anchor = v;
      stack.assign(1, v);
      if (dfs(v, bit(v), 1)) return stack;
    }
    return std::nullopt;
  }
};

// Three internally disjoint a-b paths of prescribed edge lengths, searched as
// one DFS so that twin pruning stays sound across the whole embedding.
struct ThetaSearch {
  const Graph& g;
  std::vector<int> twin;
  int a = 0, b = 0;
  int lens[3] = {0, 0, 0};
  std::uint64_t nodes = 0;
  std::vector<int> internals[3];

  explicit ThetaSearch(const Graph& gg) : g(gg), twin(twin_classes(gg)) {}

  bool place(int pi, int cur, int steps_left, std::uint64_t used) {
    if (++nodes > kDfsBudget) throw capability_error("theta search exceeded its node budget");
    if (steps_left == 1) {
      if (!g.has_edge(cur, b)) return false;
      if (pi == 2) return true;
      return place(pi + 1, a, lens[pi + 1], used);
    }
    std::uint64_t cand = g.neighbors(cur) & ~used & ~bit(a) & ~bit(b);
    std::uint64_t seen_class = 0;
    for (int w : VertexSet{cand}) {
      if (seen_class >> twin[w] & 1) continue;
      seen_class |= bit(twin[w]);
      internals[pi].push_back(w);
      if (place(pi, w, steps_left - 1, used | bit(w))) return true;
      internals[pi].pop_back();
    }
    return false;
  }

  bool run(int va, int vb, int t, int p, int q) {
    a = va;
    b = vb;
    lens[0] = t;
    lens[1] = p;
    lens[2] = q;
    for (auto& v : internals) v.clear();
    return place(0, a, lens[0], bit(a) | bit(b));
  }
};

}  // namespace

bool has_path_of_order(const Graph& g, int q, std::vector<int>* out_path) {
  PathSearch ps(g);
  ps.target = q;
  return ps.run(out_path);
}

// ---------------------------------------------------------------------------
// maximum matching (Edmonds' blossom algorithm)
// ---------------------------------------------------------------------------

namespace {

struct Blossom {
  int n;
  const Graph& g;
  std::vector<int> match, parent, base;
  std::vector<char> used, in_blossom;

  explicit Blossom(const Graph& gg)
      : n(gg.order()), g(gg), match(n, -1), parent(n, -1), base(n), used(n), in_blossom(n) {}

  int lca(int a, int b) {
    std::vector<char> mark(n, 0);
    for (;;) {
      a = base[a];
      mark[a] = 1;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (mark[b]) return b;
      b = parent[match[b]];
    }
  }

  void mark_path(int v, int bse, int child) {
    while (base[v] != bse) {
      in_blossom[base[v]] = 1;
      in_blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  }

  int find_path(int root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    used[root] = 1;
    std::vector<int> queue{root};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int to : VertexSet{g.neighbors(v)}) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          int cur_base = lca(v, to);
          std::fill(in_blossom.begin(), in_blossom.end(), 0);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n; ++i)
            if (in_blossom[base[i]]) {
              base[i] = cur_base;
              if (!used[i]) {
                used[i] = 1;
                queue.push_back(i);
              }
            }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) return to;
          used[match[to]] = 1;
          queue.push_back(match[to]);
        }
      }
    }
    return -1;
  }

  int solve() {
    int res = 0;
    for (int v = 0; v < n; ++v)
      if (match[v] == -1) {
        int u = find_path(v);
        if (u == -1) continue;
        ++res;
        while (u != -1) {
          int pv = parent[u], ppv = match[pv];
          match[u] = pv;
          match[pv] = u;
          u = ppv;
        }
      }
    return res;
  }
};

}  // namespace

int max_matching(const Graph& g, std::vector<int>* mate) {
  Blossom bl(g);
  int size = bl.solve();
  if (mate) *mate = bl.match;
  return size;
}

int neighborhood_max_matching(const Graph& g, int u) {
  g.check_vertex(u);
  return max_matching(induced(g, g.neighbor_set(u)).graph, nullptr);
}

int book_width(const Graph& g) {
  int best = 0;
  for (auto [u, v] : g.edges())
    best = std::max(best, std::popcount(g.neighbors(u) & g.neighbors(v)));
  return best;
}

int odd_girth(const Graph& g) {
  const int n = g.order();
  int best = 0;
  std::vector<int> dist(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    std::vector<int> queue{root};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int w : VertexSet{g.neighbors(v)})
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
    }
    for (auto [u, v] : g.edges())
      if (dist[u] >= 0 && dist[u] == dist[v]) {
        int cand = 2 * dist[u] + 1;
        if (best == 0 || cand < best) best = cand;
      }
  }
  return best;
}

bool odd_girth_check(const Graph& g, int k) {
  int og = odd_girth(g);
  return og == 0 || og > 2 * k + 1;
}

// ---------------------------------------------------------------------------
// generic subgraph isomorphism (the validation oracle)
// ---------------------------------------------------------------------------

namespace {

struct SubIso {
  const Graph& host;
  const Graph& pat;
  std::vector<int> order;   // pattern vertices, most constrained first
  std::vector<int> where;   // pattern vertex -> host vertex
  std::vector<int> twin;
  std::uint64_t nodes = 0;

  SubIso(const Graph& h, const Graph& p) : host(h), pat(p), twin(twin_classes(h)) {
    const int np = pat.order();
    where.assign(np, -1);
    std::uint64_t placed = 0;
    for (int s = 0; s < np; ++s) {
      int pick = -1, pick_adj = -1, pick_deg = -1;
      for (int v = 0; v < np; ++v) {
        if (placed >> v & 1) continue;
        int adj = std::popcount(pat.neighbors(v) & placed);
        int deg = pat.degree(v);
        if (adj > pick_adj || (adj == pick_adj && deg > pick_deg)) {
          pick = v;
          pick_adj = adj;
          pick_deg = deg;
        }
      }
      order.push_back(pick);
      placed |= bit(pick);
    }
  }

  bool dfs(int idx, std::uint64_t used) {
    if (++nodes > 2 * kDfsBudget) throw capability_error("subgraph search exceeded its budget");
    if (idx == pat.order()) return true;
    int pv = order[idx];
    std::uint64_t cand = host.vertex_mask().bits & ~used;
    for (int pn : VertexSet{pat.neighbors(pv)})
      if (where[pn] >= 0) cand &= host.neighbors(where[pn]);
    std::uint64_t seen_class = 0;
    int need_deg = pat.degree(pv);
    for (int v : VertexSet{cand}) {
      if (host.degree(v) < need_deg) continue;
      if (seen_class >> twin[v] & 1) continue;
      seen_class |= bit(twin[v]);
      where[pv] = v;
      if (dfs(idx + 1, used | bit(v))) return true;
      where[pv] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<Witness> generic_subiso(const Graph& g, const Graph& pattern) {
  if (pattern.order() > g.order()) return std::nullopt;
  if (pattern.order() == 0) return Witness{pattern, {}};
  SubIso si(g, pattern);
  if (!si.dfs(0, 0)) return std::nullopt;
  return Witness{pattern, si.where};
}

// ---------------------------------------------------------------------------
// specialized detectors
// ---------------------------------------------------------------------------

namespace {

std::vector<int> by_descending_degree(const Graph& g) {
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  return order;
}

std::optional<Witness> contains_fan(const Graph& g, int k) {
  if (k > g.order()) return std::nullopt;
  for (int u : by_descending_degree(g)) {
    if (g.degree(u) < k - 1) break;
    Induced nb = induced(g, g.neighbor_set(u));
    std::vector<int> local;
    if (!has_path_of_order(nb.graph, k - 1, &local)) continue;
    Witness w{fan(k).graph, {}};
    w.map.resize(k);
    w.map[0] = u;
    for (int i = 0; i < k - 1; ++i) w.map[1 + i] = nb.vertices[local[i]];
    return w;
  }
  return std::nullopt;
}

std::optional<Witness> contains_friendship(const Graph& g, int k) {
  if (2 * k + 1 > g.order()) return std::nullopt;
  for (int u : by_descending_degree(g)) {
    if (g.degree(u) < 2 * k) break;
    Induced nb = induced(g, g.neighbor_set(u));
    std::vector<int> mate;
    if (max_matching(nb.graph, &mate) < k) continue;
    Witness w{friendship(k).graph, {}};
    w.map.resize(2 * k + 1);
    w.map[0] = u;
    int slot = 0;
    for (int v = 0; v < nb.graph.order() && slot < k; ++v)
      if (mate[v] > v) {
        w.map[1 + 2 * slot] = nb.vertices[v];
        w.map[2 + 2 * slot] = nb.vertices[mate[v]];
        ++slot;
      }
    return w;
  }
  return std::nullopt;
}

std::optional<Witness> contains_book(const Graph& g, int r) {
  for (auto [u, v] : g.edges()) {
    std::uint64_t common = g.neighbors(u) & g.neighbors(v);
    if (std::popcount(common) < r + 1) continue;
    Witness w{book(r), {}};
    w.map = {u, v};
    for (int x : VertexSet{common}) {
      w.map.push_back(x);
      if (static_cast<int>(w.map.size()) == r + 3) break;
    }
    return w;
  }
  return std::nullopt;
}

std::optional<Witness> contains_cycle(const Graph& g, int t) {
  CycleSearch cs(g);
  auto found = cs.run(t);
  if (!found) return std::nullopt;
  return Witness{cycle(t), *found};
}

std::optional<Witness> contains_clique(const Graph& g, int r) {
  if (r <= 0) return Witness{complete(0), {}};
  if (r == 1) {
    if (g.order() == 0) return std::nullopt;
    return Witness{complete(1), {0}};
  }
  // recursive bitset search with a size bound
  std::vector<int> current;
  std::vector<int> twin = twin_classes(g);
  std::uint64_t nodes = 0;
  auto rec = [&](auto&& self, std::uint64_t cand) -> bool {
    if (static_cast<int>(current.size()) == r) return true;
    if (static_cast<int>(current.size()) + std::popcount(cand) < r) return false;
    if (++nodes > kDfsBudget) throw capability_error("clique search exceeded its budget");
    std::uint64_t seen_class = 0;
    for (int v : VertexSet{cand}) {
      if (seen_class >> twin[v] & 1) continue;
      seen_class |= bit(twin[v]);
      current.push_back(v);
      if (self(self, cand & g.neighbors(v) & ~((bit(v) << 1) - 1))) return true;
      current.pop_back();
    }
    return false;
  };
  if (!rec(rec, g.vertex_mask().bits)) return std::nullopt;
  return Witness{complete(r), current};
}

std::optional<Witness> contains_theta(const Graph& g, int t, int p, int q) {
  if (t + p + q - 1 > g.order()) return std::nullopt;
  ThetaSearch ts(g);
  struct Key {
    int ca, cb, adj;
    int ra, rb;
  };
  std::vector<Key> seen;
  for (int a = 0; a < g.order(); ++a) {
    if (g.degree(a) < 3) continue;
    for (int b = a + 1; b < g.order(); ++b) {
      if (g.degree(b) < 3) continue;
      bool adj = g.has_edge(a, b);
      if (t == 1 && !adj) continue;
      // Skip (a,b) when twin transpositions map it onto a searched pair:
      // (a ra)(b rb) is an automorphism if the classes match and the swapped
      // pairs do not interlock.
      bool skip = false;
      for (const Key& key : seen) {
        if (key.adj != static_cast<int>(adj)) continue;
        if (key.ca == ts.twin[a] && key.cb == ts.twin[b] && key.rb != a && key.ra != b) {
          skip = true;
          break;
        }
        if (key.ca == ts.twin[b] && key.cb == ts.twin[a] && key.ra != a && key.rb != b) {
          skip = true;
          break;
        }
      }
      if (skip) continue;
      seen.push_back({ts.twin[a], ts.twin[b], static_cast<int>(adj), a, b});
      if (!ts.run(a, b, t, p, q)) continue;
      Witness w{theta(t, p, q), {}};
      w.map.resize(t + p + q - 1);
      w.map[0] = a;
      w.map[1] = b;
      int next = 2;
      for (int pi = 0; pi < 3; ++pi)
        for (int v : ts.internals[pi]) w.map[next++] = v;
      return w;
    }
  }
  return std::nullopt;
}

std::optional<Witness> contains_odd_cycle_upto(const Graph& g, int k) {
  int og = odd_girth(g);
  if (og == 0 || og > 2 * k + 1) return std::nullopt;
  return contains_cycle(g, og);
}

}  // namespace

Graph PatternSpec::realize() const {
  switch (kind) {
    case PatternKind::fan:
      return bht::fan(a).graph;
    case PatternKind::friendship:
      return bht::friendship(a).graph;
    case PatternKind::theta:
      return bht::theta(a, b, c);
    case PatternKind::book:
      return bht::book(a);
    case PatternKind::cycle:
      return bht::cycle(a);
    case PatternKind::clique:
      return bht::complete(a);
    case PatternKind::odd_cycles_upto:
      throw std::invalid_argument("odd-cycle family has no single pattern graph");
    case PatternKind::generic:
      return *graph;
  }
  throw std::logic_error("unknown pattern kind");
}

std::string PatternSpec::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case PatternKind::fan:
      os << "fan:" << a;
      break;
    case PatternKind::friendship:
      os << "fr:" << a;
      break;
    case PatternKind::theta:
      os << "theta:" << a << "," << b << "," << c;
      break;
    case PatternKind::book:
      os << "book:" << a;
      break;
    case PatternKind::cycle:
      os << "cycle:" << a;
      break;
    case PatternKind::clique:
      os << "clique:" << a;
      break;
    case PatternKind::odd_cycles_upto:
      os << "oddfree:" << a;
      break;
    case PatternKind::generic:
      os << "g6:" << graph6_encode(*graph);
      break;
  }
  return os.str();
}

PatternSpec parse_pattern(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("pattern needs the form kind:params");
  std::string kind = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);
  auto parse_ints = [&](size_t expect) {
    std::vector<int> vals;
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument("bad integer in pattern: " + tok);
      vals.push_back(v);
    }
    if (vals.size() != expect)
      throw std::invalid_argument("pattern " + kind + " expects " + std::to_string(expect) +
                                  " parameter(s)");
    return vals;
  };
  if (kind == "fan") return PatternSpec::fan(parse_ints(1)[0]);
  if (kind == "fr") return PatternSpec::friendship(parse_ints(1)[0]);
  if (kind == "theta") {
    auto v = parse_ints(3);
    return PatternSpec::theta(v[0], v[1], v[2]);
  }
  if (kind == "book") return PatternSpec::book(parse_ints(1)[0]);
  if (kind == "cycle") return PatternSpec::cycle(parse_ints(1)[0]);
  if (kind == "clique") return PatternSpec::clique(parse_ints(1)[0]);
  if (kind == "oddfree") return PatternSpec::odd_cycles_upto(parse_ints(1)[0]);
  if (kind == "g6") return PatternSpec::generic(graph6_decode(rest));
  throw std::invalid_argument("unknown pattern kind: " + kind);
}

bool validate_witness(const Graph& host, const Witness& w) {
  if (static_cast<int>(w.map.size()) != w.pattern.order()) return false;
  std::uint64_t used = 0;
  for (int v : w.map) {
    if (v < 0 || v >= host.order()) return false;
    if (used >> v & 1) return false;
    used |= bit(v);
  }
  for (auto [i, j] : w.pattern.edges())
    if (!host.has_edge(w.map[i], w.map[j])) return false;
  return true;
}

std::optional<Witness> contains(const Graph& g, const PatternSpec& p) {
  switch (p.kind) {
    case PatternKind::fan: {
      bht::fan(p.a);  // validates the parameter
      return contains_fan(g, p.a);
    }
    case PatternKind::friendship: {
      bht::friendship(p.a);
      return contains_friendship(g, p.a);
    }
    case PatternKind::theta: {
      bht::theta(p.a, p.b, p.c);
      return contains_theta(g, p.a, p.b, p.c);
    }
    case PatternKind::book:
      return contains_book(g, p.a);
    case PatternKind::cycle:
      return contains_cycle(g, p.a);
    case PatternKind::clique:
      return contains_clique(g, p.a);
    case PatternKind::odd_cycles_upto:
      return contains_odd_cycle_upto(g, p.a);
    case PatternKind::generic:
      return generic_subiso(g, *p.graph);
  }
  throw std::logic_error("unknown pattern kind");
}

}  // namespace bht
