#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bht/families.hpp"
#include "bht/graph.hpp"

namespace bht {

enum class PatternKind {
  fan,
  friendship,
  theta,
  book,
  cycle,
  clique,
  odd_cycles_upto,
  generic,
};

// A forbidden-subgraph description. Containment is always in the
// not-necessarily-induced sense.
struct PatternSpec {
  PatternKind kind = PatternKind::generic;
  int a = 0, b = 0, c = 0;  // per-kind parameters
  std::optional<Graph> graph;

  static PatternSpec fan(int k) { return {PatternKind::fan, k, 0, 0, std::nullopt}; }
  static PatternSpec friendship(int k) { return {PatternKind::friendship, k, 0, 0, std::nullopt}; }
  static PatternSpec theta(int t, int p, int q) { return {PatternKind::theta, t, p, q, std::nullopt}; }
  static PatternSpec book(int r) { return {PatternKind::book, r, 0, 0, std::nullopt}; }
  static PatternSpec cycle(int t) { return {PatternKind::cycle, t, 0, 0, std::nullopt}; }
  static PatternSpec clique(int r) { return {PatternKind::clique, r, 0, 0, std::nullopt}; }
  static PatternSpec odd_cycles_upto(int k) {
    return {PatternKind::odd_cycles_upto, k, 0, 0, std::nullopt};
  }
  static PatternSpec generic(Graph g) { return {PatternKind::generic, 0, 0, 0, std::move(g)}; }

  // The pattern as a concrete graph. For odd_cycles_upto there is no single
  // pattern graph; realize() is invalid for that kind.
  Graph realize() const;
  std::string to_string() const;
};

// fan:k | fr:k | theta:t,p,q | book:r | cycle:t | clique:r | oddfree:k | g6:<string>
PatternSpec parse_pattern(const std::string& text);

// An embedding of a pattern graph into a host: map[i] is the host vertex for
// pattern vertex i. Always injective and edge-preserving.
struct Witness {
  Graph pattern;
  std::vector<int> map;
};

bool validate_witness(const Graph& host, const Witness& w);

// Containment test; returns an embedding when one exists.
std::optional<Witness> contains(const Graph& g, const PatternSpec& p);

// Order of a longest path in G[N(u)] (exact subset DP; neighborhood size <= 24).
int neighborhood_longest_path(const Graph& g, int u);

// Maximum matching size of G[N(u)] (augmenting paths with blossom contraction).
int neighborhood_max_matching(const Graph& g, int u);

// max over edges uv of |N(u) n N(v)|; 0 when there is no edge.
int book_width(const Graph& g);

// Circumference (exact subset DP; order <= 24). 0 for forests.
int longest_cycle(const Graph& g);

// Order of a longest path anywhere in g (exact subset DP; order <= 24).
int longest_path_order(const Graph& g);

// Length of a shortest odd cycle; 0 when g is bipartite.
int odd_girth(const Graph& g);

// True iff g has no odd cycle of length <= 2k+1.
bool odd_girth_check(const Graph& g, int k);

// Exhaustive backtracking oracle; the specialized checkers are validated
// against it.
std::optional<Witness> generic_subiso(const Graph& g, const Graph& pattern);

// Maximum matching of an arbitrary graph (Edmonds). Exposed for tests.
int max_matching(const Graph& g, std::vector<int>* mate = nullptr);

// True iff g has a path on at least q vertices; exact. Uses twin-class
// pruned DFS, so it has no size cap (budget-guarded instead).
bool has_path_of_order(const Graph& g, int q, std::vector<int>* out_path = nullptr);

}  // namespace bht
