#pragma once

#include <map>
#include <string>
#include <vector>

#include "bht/graph.hpp"

namespace bht {

// A constructed family member together with its named special vertices
// (hub of a fan, dominating set of a split graph, ...).
struct FamilyInstance {
  Graph graph;
  std::map<std::string, VertexSet> designated;
};

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph empty_graph(int n);

// Fan F_k: one hub joined to a path on k-1 vertices. Hub is vertex 0.
FamilyInstance fan(int k);
// Friendship graph F_{k,3}: k triangles sharing vertex 0.
FamilyInstance friendship(int k);
// Theta graph: two branch vertices (0 and 1) linked by three internally
// disjoint paths of lengths t <= p <= q, with p >= 2.
Graph theta(int t, int p, int q);
// Book B_{r+1}: r+1 triangles sharing the edge {0,1}.
Graph book(int r);
// Split-like S_{n,k}: K_k joined to n-k isolated vertices. Clique is {0..k-1}.
FamilyInstance split_like(int n, int k);
// S+_{n,k}: S_{n,k} plus one edge inside the independent set.
FamilyInstance s_plus(int n, int k);
// K_k v tK_1, the equality graph of the fan/friendship bounds.
FamilyInstance extremal(int k, int t);
// M_t: floor(t/2) disjoint edges, plus one extra vertex when t is odd.
Graph matching_graph(int t);
// SK_{2,q}: K_{2,q} with one edge subdivided.
Graph subdivided_kb(int q);
// RK_{2,q}: K_{2,q} with one edge replaced by a path on five vertices.
Graph rk(int q);
// K_b v (K_{a-b} u K_1), the Brualdi-Hoffman extremal graph for m = C(a,2)+b.
Graph bh_graph(int a, int b);

// All pairwise non-isomorphic graphs obtained from S+_{n,k} by deleting one
// edge (deduplicated by canonical form).
std::vector<Graph> l_family(int n, int k);

}  // namespace bht
