#include "bht/families.hpp"

#include <set>
#include <stdexcept>

namespace bht {

Graph path(int n) {
  Graph g(n);
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return Graph::from_edges(n, e);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) e.push_back({v, (v + 1) % n});
  return Graph::from_edges(n, e);
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph::from_edges(n, e);
}

Graph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative part size");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.push_back({u, a + v});
  return Graph::from_edges(a + b, e);
}

Graph empty_graph(int n) { return Graph(n); }

FamilyInstance fan(int k) {
  if (k < 3) throw std::invalid_argument("fan needs k >= 3");
  FamilyInstance out{join(complete(1), path(k - 1)), {}};
  out.designated["central"] = VertexSet::single(0);
  return out;
}

FamilyInstance friendship(int k) {
  if (k < 1) throw std::invalid_argument("friendship needs k >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i) {
    e.push_back({0, 2 * i + 1});
    e.push_back({0, 2 * i + 2});
    e.push_back({2 * i + 1, 2 * i + 2});
  }
  FamilyInstance out{Graph::from_edges(2 * k + 1, e), {}};
  out.designated["hub"] = VertexSet::single(0);
  return out;
}

Graph theta(int t, int p, int q) {
  if (!(1 <= t && t <= p && p <= q) || p < 2)
    throw std::invalid_argument("theta needs 1 <= t <= p <= q with p >= 2");
  int n = t + p + q - 1;
  std::vector<std::pair<int, int>> e;
  int next = 2;
  auto add_path = [&](int len) {
    int prev = 0;
    for (int i = 0; i + 1 < len; ++i) {
      e.push_back({prev, next});
      prev = next++;
    }
    e.push_back({prev, 1});
  };
  add_path(t);
  add_path(p);
  add_path(q);
  return Graph::from_edges(n, e);
}

Graph book(int r) {
  if (r < 0) throw std::invalid_argument("book needs r >= 0");
  std::vector<std::pair<int, int>> e{{0, 1}};
  for (int i = 0; i < r + 1; ++i) {
    e.push_back({0, 2 + i});
    e.push_back({1, 2 + i});
  }
  return Graph::from_edges(r + 3, e);
}

FamilyInstance split_like(int n, int k) {
  if (!(n > k && k >= 1)) throw std::invalid_argument("split graph needs n > k >= 1");
  FamilyInstance out{join(complete(k), Graph(n - k)), {}};
  out.designated["dominating"] = VertexSet::first_n(k);
  return out;
}

FamilyInstance s_plus(int n, int k) {
  if (n < k + 2) throw std::invalid_argument("s_plus needs n >= k + 2");
  FamilyInstance out = split_like(n, k);
  out.graph = add_edge(out.graph, k, k + 1);
  return out;
}

FamilyInstance extremal(int k, int t) {
  if (k < 1 || t < 1) throw std::invalid_argument("extremal graph needs k >= 1, t >= 1");
  return split_like(k + t, k);
}

Graph matching_graph(int t) {
  if (t < 0) throw std::invalid_argument("negative order");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < t; i += 2) e.push_back({i, i + 1});
  return Graph::from_edges(t, e);
}

Graph subdivided_kb(int q) {
  if (q < 1) throw std::invalid_argument("subdivided_kb needs q >= 1");
  // parts {0,1} and {2..q+1}; edge (0,2) subdivided through vertex q+2
  Graph g = complete_bipartite(2, q);
  g = disjoint_union(g, Graph(1));
  g = delete_edge(g, 0, 2);
  g = add_edge(g, 0, q + 2);
  g = add_edge(g, q + 2, 2);
  return g;
}

Graph rk(int q) {
  if (q < 1) throw std::invalid_argument("rk needs q >= 1");
  // edge (0,2) of K_{2,q} replaced by the path 0 - a - b - c - 2
  Graph g = complete_bipartite(2, q);
  g = disjoint_union(g, Graph(3));
  g = delete_edge(g, 0, 2);
  int a = q + 2, b = q + 3, c = q + 4;
  g = add_edge(g, 0, a);
  g = add_edge(g, a, b);
  g = add_edge(g, b, c);
  g = add_edge(g, c, 2);
  return g;
}

Graph bh_graph(int a, int b) {
  if (!(0 <= b && b < a)) throw std::invalid_argument("bh_graph needs 0 <= b < a");
  return join(complete(b), disjoint_union(complete(a - b), Graph(1)));
}

std::vector<Graph> l_family(int n, int k) {
  Graph base = s_plus(n, k).graph;
  std::set<std::string> seen;
  std::vector<Graph> out;
  for (auto [u, v] : base.edges()) {
    Graph g = delete_edge(base, u, v);
    if (seen.insert(canonical_form(g).bytes).second) out.push_back(g);
  }
  return out;
}

}  // namespace bht
