#include "bht/graph.hpp"

#include <algorithm>

namespace bht {

Graph add_edge(const Graph& g, int u, int v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (g.has_edge(u, v)) throw std::invalid_argument("edge already present");
  Graph out = g;
  out.set_edge(u, v);
  out.m_ = g.m_ + 1;
  return out;
}

Graph delete_edge(const Graph& g, int u, int v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (!g.has_edge(u, v)) throw std::invalid_argument("edge not present");
  Graph out = g;
  out.clear_edge(u, v);
  out.m_ = g.m_ - 1;
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  int n = g.order() + h.order();
  if (n > kMaxVertices) throw capacity_error("join exceeds 62-vertex capacity");
  Graph out(n);
  int off = g.order();
  for (int v = 0; v < g.order(); ++v) out.rows_[v] = g.neighbors(v);
  std::uint64_t left = VertexSet::first_n(off).bits;
  for (int v = 0; v < h.order(); ++v) out.rows_[off + v] = (h.neighbors(v) << off) | left;
  std::uint64_t right = VertexSet{VertexSet::first_n(n).bits & ~left}.bits;
  for (int v = 0; v < off; ++v) out.rows_[v] |= right;
  out.recount();
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  int n = g.order() + h.order();
  if (n > kMaxVertices) throw capacity_error("union exceeds 62-vertex capacity");
  Graph out(n);
  int off = g.order();
  for (int v = 0; v < g.order(); ++v) out.rows_[v] = g.neighbors(v);
  for (int v = 0; v < h.order(); ++v) out.rows_[off + v] = h.neighbors(v) << off;
  out.m_ = g.edge_count() + h.edge_count();
  return out;
}

Induced induced(const Graph& g, VertexSet s) {
  g.check_subset(s);
  std::vector<int> verts = s.to_vector();  // ascending original order
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (g.has_edge(verts[i], verts[j]))
        edges.push_back({static_cast<int>(i), static_cast<int>(j)});
  return {Graph::from_edges(static_cast<int>(verts.size()), edges), std::move(verts)};
}

Graph induced_graph(const Graph& g, VertexSet s) { return induced(g, s).graph; }

Graph complement(const Graph& g) {
  Graph out(g.order());
  std::uint64_t all = g.vertex_mask().bits;
  for (int v = 0; v < g.order(); ++v)
    out.rows_[v] = all & ~g.neighbors(v) & ~(std::uint64_t{1} << v);
  out.recount();
  return out;
}

Graph relabeled(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw std::invalid_argument("permutation size mismatch");
  Graph out(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (g.has_edge(perm[i], perm[j])) out.set_edge(i, j);
  out.recount();
  return out;
}

Graph strip_isolated(const Graph& g) {
  VertexSet keep;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0) keep = keep.with(v);
  return induced(g, keep).graph;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::uint64_t seen = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (seen >> v & 1) continue;
    std::uint64_t comp = std::uint64_t{1} << v;
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      for (int u : VertexSet{frontier}) next |= g.neighbors(u);
      frontier = next & ~comp;
      comp |= frontier;
    }
    seen |= comp;
    out.push_back({comp});
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return components(g).size() == 1;
}

std::vector<int> twin_classes(const Graph& g) {
  int n = g.order();
  std::vector<int> cls(n, -1);
  std::vector<int> reps;
  for (int v = 0; v < n; ++v) {
    for (size_t c = 0; c < reps.size(); ++c) {
      int r = reps[c];
      std::uint64_t excl = ~((std::uint64_t{1} << v) | (std::uint64_t{1} << r));
      if ((g.neighbors(v) & excl) == (g.neighbors(r) & excl)) {
        cls[v] = static_cast<int>(c);
        break;
      }
    }
    if (cls[v] < 0) {
      cls[v] = static_cast<int>(reps.size());
      reps.push_back(v);
    }
  }
  return cls;
}

namespace {

// Canonical labeling: depth-first placement of vertices, minimizing the
// column-major upper-triangle adjacency string. Branches are cut by
// (a) one representative per twin class among the unplaced vertices and
// (b) lexicographic comparison against the best string found so far.
struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<int> twin;
  std::vector<int> perm, best_perm;
  std::vector<std::uint64_t> cols, best;  // cols[d]: bit for row i packed at (62 - i)
  bool have_best = false;

  explicit CanonSearch(const Graph& gg) : g(gg), n(gg.order()), twin(twin_classes(gg)) {
    perm.resize(n);
    best_perm.resize(n);
    cols.assign(n, 0);
    best.assign(n, 0);
  }

  bool prefix_equals_best(int depth) const {
    for (int i = 0; i < depth; ++i)
      if (cols[i] != best[i]) return false;
    return true;
  }

  void dfs(int depth, std::uint64_t used) {
    if (depth == n) {
      if (!have_best || !prefix_equals_best(n)) {
        best = cols;
        best_perm = perm;
        have_best = true;
      }
      return;
    }
    struct Cand {
      int v;
      std::uint64_t col;
    };
    std::vector<Cand> cands;
    cands.reserve(n - depth);
    std::uint64_t seen_class = 0;
    for (int v = 0; v < n; ++v) {
      if (used >> v & 1) continue;
      if (seen_class >> twin[v] & 1) continue;
      seen_class |= std::uint64_t{1} << twin[v];
      std::uint64_t col = 0;
      for (int i = 0; i < depth; ++i)
        col |= std::uint64_t{g.has_edge(perm[i], v)} << (62 - i);
      cands.push_back({v, col});
    }
    std::sort(cands.begin(), cands.end(), [&](const Cand& a, const Cand& b) {
      if (a.col != b.col) return a.col < b.col;
      return g.degree(a.v) > g.degree(b.v);
    });
    for (const Cand& c : cands) {
      if (have_best && prefix_equals_best(depth)) {
        if (c.col > best[depth]) break;  // candidates are sorted; the rest are worse
      }
      perm[depth] = c.v;
      cols[depth] = c.col;
      dfs(depth + 1, used | (std::uint64_t{1} << c.v));
    }
  }
};

}  // namespace

std::vector<int> canonical_permutation(const Graph& g) {
  int n = g.order();
  if (n <= 1) return std::vector<int>(n, 0);
  CanonSearch cs(g);
  cs.dfs(0, 0);
  return cs.best_perm;
}

CanonicalForm canonical_form(const Graph& g) {
  return {graph6_encode(relabeled(g, canonical_permutation(g)))};
}

std::pair<int, int> canonical_min_edge(const Graph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("graph has no edges");
  std::vector<int> p = canonical_permutation(g);
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i)
      if (g.has_edge(p[i], p[j])) return {p[i], p[j]};
  throw std::logic_error("unreachable: edge count positive but no edge found");
}

std::string graph6_encode(const Graph& g) {
  int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph graph6_decode(const std::string& s) {
  if (s.empty()) throw format_error("empty graph6 string");
  int header = static_cast<unsigned char>(s[0]) - 63;
  if (static_cast<unsigned char>(s[0]) == 126)
    throw format_error("long-form graph6 (n >= 63) is not supported");
  if (header < 0 || header > kMaxVertices) throw format_error("graph6 header byte out of range");
  int n = header;
  int nbits = n * (n - 1) / 2;
  size_t expect = 1 + (nbits + 5) / 6;
  if (s.size() != expect) throw format_error("graph6 string has wrong length");
  std::vector<int> bits;
  bits.reserve(6 * (s.size() - 1));
  for (size_t idx = 1; idx < s.size(); ++idx) {
    int c = static_cast<unsigned char>(s[idx]) - 63;
    if (c < 0 || c > 63) throw format_error("graph6 byte out of range");
    for (int b = 5; b >= 0; --b) bits.push_back(c >> b & 1);
  }
  for (size_t b = nbits; b < bits.size(); ++b)
    if (bits[b]) throw format_error("nonzero padding bits in graph6 string");
  std::vector<std::pair<int, int>> edges;
  int cursor = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (bits[cursor++]) edges.push_back({i, j});
  return Graph::from_edges(n, edges);
}

}  // namespace bht
