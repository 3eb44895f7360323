#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bht {

inline constexpr int kMaxVertices = 62;

// A construction would exceed the 62-vertex capacity.
struct capacity_error : std::length_error {
  using std::length_error::length_error;
};

// Malformed graph6 (or edge-list) input.
struct format_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exact computation exceeded its size cap or node budget.
struct capability_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Subset of {0..61} stored as a bitmask.
struct VertexSet {
  std::uint64_t bits = 0;

  static VertexSet single(int v) { return {std::uint64_t{1} << v}; }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.bits |= std::uint64_t{1} << v;
    return s;
  }
  static VertexSet first_n(int n) {
    return {n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  bool contains(int v) const { return bits >> v & 1; }
  int count() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
  int lowest() const { return std::countr_zero(bits); }
  VertexSet with(int v) const { return {bits | std::uint64_t{1} << v}; }
  VertexSet without(int v) const { return {bits & ~(std::uint64_t{1} << v)}; }

  friend VertexSet operator|(VertexSet a, VertexSet b) { return {a.bits | b.bits}; }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return {a.bits & b.bits}; }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return {a.bits & ~b.bits}; }
  friend bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
  friend bool operator!=(VertexSet a, VertexSet b) { return a.bits != b.bits; }

  struct iterator {
    std::uint64_t rest;
    int operator*() const { return std::countr_zero(rest); }
    iterator& operator++() {
      rest &= rest - 1;
      return *this;
    }
    bool operator!=(const iterator& o) const { return rest != o.rest; }
  };
  iterator begin() const { return {bits}; }
  iterator end() const { return {0}; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int v : *this) out.push_back(v);
    return out;
  }
};

// Immutable simple undirected graph on at most 62 vertices.
// One 64-bit adjacency row per vertex; every "mutator" returns a new value,
// so graphs are safe to share across threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) { reset(n); }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.set_edge(u, v);
    g.recount();
    return g;
  }

  int order() const { return n_; }
  int edge_count() const { return m_; }
  bool has_edge(int u, int v) const { return rows_[u] >> v & 1; }
  int degree(int v) const { return std::popcount(rows_[v]); }
  std::uint64_t neighbors(int v) const { return rows_[v]; }
  VertexSet neighbor_set(int v) const { return {rows_[v]}; }
  VertexSet vertex_mask() const { return VertexSet::first_n(n_); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
      for (int v : VertexSet{rows_[u] & high_mask(u)}) out.push_back({u, v});
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
  }
  void check_subset(VertexSet s) const {
    if (!s.subset_of(vertex_mask())) throw std::invalid_argument("vertex set not within graph");
  }

 private:
  friend Graph add_edge(const Graph&, int, int);
  friend Graph delete_edge(const Graph&, int, int);
  friend Graph join(const Graph&, const Graph&);
  friend Graph disjoint_union(const Graph&, const Graph&);
  friend Graph relabeled(const Graph&, const std::vector<int>&);
  friend Graph complement(const Graph&);

  void reset(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n > kMaxVertices) throw capacity_error("graph exceeds 62-vertex capacity");
    n_ = n;
    m_ = 0;
    rows_.assign(n, 0);
  }
  void set_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
  }
  void clear_edge(int u, int v) {
    rows_[u] &= ~(std::uint64_t{1} << v);
    rows_[v] &= ~(std::uint64_t{1} << u);
  }
  void recount() {
    int d = 0;
    for (int v = 0; v < n_; ++v) d += degree(v);
    m_ = d / 2;
  }
  static std::uint64_t high_mask(int v) { return ~((std::uint64_t{1} << (v + 1)) - 1); }

  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> rows_;
};

// Isomorphism-invariant key: graph6 bytes of the canonically relabeled graph.
struct CanonicalForm {
  std::string bytes;
  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.bytes == b.bytes;
  }
  friend bool operator!=(const CanonicalForm& a, const CanonicalForm& b) {
    return a.bytes != b.bytes;
  }
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    return a.bytes < b.bytes;
  }
};

struct Induced {
  Graph graph;
  std::vector<int> vertices;  // vertices[i] = original index of new vertex i
};

Graph add_edge(const Graph& g, int u, int v);
Graph delete_edge(const Graph& g, int u, int v);
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Induced induced(const Graph& g, VertexSet s);
Graph induced_graph(const Graph& g, VertexSet s);
Graph complement(const Graph& g);
Graph relabeled(const Graph& g, const std::vector<int>& perm);  // new i = old perm[i]
Graph strip_isolated(const Graph& g);

bool is_connected(const Graph& g);
std::vector<VertexSet> components(const Graph& g);

// Partition of the vertices into "twin" classes: u and w are twins when their
// adjacency rows agree outside {u, w}. Swapping two twins is an automorphism,
// which the canonical and subgraph searches use to cut symmetric branches.
std::vector<int> twin_classes(const Graph& g);

std::vector<int> canonical_permutation(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
// Host endpoints of the first edge of the canonical adjacency string.
std::pair<int, int> canonical_min_edge(const Graph& g);

std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& s);

}  // namespace bht
