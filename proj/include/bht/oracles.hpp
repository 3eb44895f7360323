#pragma once

// Reference oracles: small brute-force routines that the tests and the CLI
// selftest check the production implementations against. Everything here is
// exhaustive and independent of the code paths it validates.

#include <vector>

#include "bht/graph.hpp"

namespace bht {

// Isomorphism by trying all vertex permutations (n <= 9).
bool isomorphic_bruteforce(const Graph& a, const Graph& b);

// Longest path order by enumerating all simple paths (n <= 12).
int longest_path_bruteforce(const Graph& g);

// Circumference by enumerating all simple cycles (n <= 12). 0 for forests.
int longest_cycle_bruteforce(const Graph& g);

// Maximum matching size by branching on the lowest covered vertex (n <= 16).
int max_matching_bruteforce(const Graph& g);

// The k-core as the union of all subsets with internal minimum degree >= k
// (n <= 16).
VertexSet k_core_bruteforce(const Graph& g, int k);

// One representative per isomorphism class of graphs with exactly m edges on
// at most n_max vertices and no isolated vertices, by brute-force edge-subset
// enumeration plus canonical dedup (small sizes only).
std::vector<Graph> all_graphs_bruteforce(int n_max, int m);

// All 1044 isomorphism classes of graphs on exactly `n` vertices (n <= 7),
// built from the orderly generator plus complementation.
std::vector<Graph> all_graphs_on(int n);

// Number of isomorphism classes of graphs on exactly n labeled vertices,
// counted by keeping the lexicographically minimal edge mask of every
// permutation orbit (n <= 7). Independent of canonical_form and enumerate.
long long count_graph_classes_bruteforce(int n);

}  // namespace bht
