#include <doctest.h>

#include <algorithm>

#include "bht/families.hpp"
#include "bht/graph.hpp"

using namespace bht;

namespace {

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.rbegin(), d.rend());
  return d;
}

}  // namespace

TEST_CASE("elementary constructors") {
  CHECK(complete(5).edge_count() == 10);
  CHECK(cycle(5).edge_count() == 5);
  CHECK(path(1).edge_count() == 0);
  CHECK(path(0).order() == 0);
  CHECK(degree_sequence(complete_bipartite(2, 3)) == std::vector<int>{3, 3, 2, 2, 2});
  CHECK(empty_graph(4).edge_count() == 0);
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
}

TEST_CASE("fan structure") {
  FamilyInstance f4 = fan(4);
  CHECK(f4.graph.order() == 4);
  CHECK(f4.graph.edge_count() == 5);
  CHECK(f4.designated.at("central") == VertexSet::single(0));
  CHECK(f4.graph.degree(0) == 3);

  CHECK(degree_sequence(fan(6).graph) == std::vector<int>{5, 3, 3, 3, 2, 2});
  for (int k = 3; k <= 12; ++k) {
    const Graph& g = fan(k).graph;
    CHECK(g.order() == k);
    CHECK(g.edge_count() == (k - 1) + (k - 2));
    CHECK(g.degree(0) == k - 1);
  }
  CHECK_THROWS_AS(fan(2), std::invalid_argument);
}

TEST_CASE("friendship structure") {
  CHECK(canonical_form(friendship(1).graph) == canonical_form(complete(3)));
  FamilyInstance f2 = friendship(2);
  CHECK(f2.graph.order() == 5);
  CHECK(f2.graph.edge_count() == 6);
  for (int k = 1; k <= 8; ++k) {
    const Graph& g = friendship(k).graph;
    CHECK(g.order() == 2 * k + 1);
    CHECK(g.edge_count() == 3 * k);
    CHECK(g.degree(0) == 2 * k);
  }
}

TEST_CASE("theta structure") {
  CHECK(canonical_form(theta(1, 2, 2)) == canonical_form(delete_edge(complete(4), 0, 1)));
  CHECK(canonical_form(theta(2, 2, 2)) == canonical_form(complete_bipartite(2, 3)));
  Graph t134 = theta(1, 3, 4);
  CHECK(t134.order() == 7);
  CHECK(t134.edge_count() == 8);
  auto d = degree_sequence(t134);
  CHECK(d[0] == 3);
  CHECK(d[1] == 3);
  CHECK(d[2] == 2);
  CHECK_THROWS_AS(theta(1, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(theta(2, 1, 5), std::invalid_argument);
  for (int t = 1; t <= 3; ++t)
    for (int p = std::max(t, 2); p <= 4; ++p)
      for (int q = p; q <= 5; ++q) {
        Graph th = theta(t, p, q);
        CHECK(th.order() == t + p + q - 1);
        CHECK(th.edge_count() == t + p + q);
      }
}

TEST_CASE("book structure") {
  CHECK(canonical_form(book(0)) == canonical_form(complete(3)));
  CHECK(canonical_form(book(1)) == canonical_form(theta(1, 2, 2)));
  CHECK(book(3).order() == 6);
  CHECK(book(3).edge_count() == 9);
  for (int r = 0; r <= 6; ++r) {
    CHECK(book(r).order() == r + 3);
    CHECK(book(r).edge_count() == 2 * (r + 1) + 1);
  }
}

TEST_CASE("split-like graphs and the equality graph") {
  FamilyInstance s52 = split_like(5, 2);
  CHECK(s52.graph.edge_count() == 7);
  CHECK(s52.designated.at("dominating") == VertexSet::first_n(2));

  CHECK(s_plus(5, 2).graph.edge_count() == 8);
  // exactly one edge inside the independent set
  Graph sp = s_plus(5, 2).graph;
  int inside = induced_graph(sp, sp.vertex_mask() - VertexSet::first_n(2)).edge_count();
  CHECK(inside == 1);

  CHECK(extremal(3, 4).graph.edge_count() == 15);
  for (int k = 1; k <= 5; ++k)
    for (int t = 1; t <= 6; ++t) {
      const Graph& g = extremal(k, t).graph;
      CHECK(g.order() == k + t);
      CHECK(g.edge_count() == k * (k - 1) / 2 + k * t);
    }
  CHECK_THROWS_AS(split_like(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(s_plus(3, 2), std::invalid_argument);
}

TEST_CASE("matching, subdivided and replaced complete bipartite graphs") {
  Graph m5 = matching_graph(5);
  CHECK(m5.order() == 5);
  CHECK(m5.edge_count() == 2);
  CHECK(matching_graph(0).order() == 0);

  for (int q = 1; q <= 8; ++q) {
    CHECK(subdivided_kb(q).edge_count() == 2 * q + 1);
    CHECK(subdivided_kb(q).order() == q + 3);
    CHECK(rk(q).edge_count() == 2 * q + 3);
    CHECK(rk(q).order() == q + 5);
  }
  // subdividing K_{2,(m-1)/2} gives size m for odd m
  for (int m = 5; m <= 13; m += 2) CHECK(subdivided_kb((m - 1) / 2).edge_count() == m);
}

TEST_CASE("brualdi-hoffman extremal graph") {
  CHECK(canonical_form(bh_graph(5, 0)) ==
        canonical_form(disjoint_union(complete(5), Graph(1))));
  for (int a = 2; a <= 8; ++a)
    for (int b = 0; b < a; ++b)
      CHECK(bh_graph(a, b).edge_count() == a * (a - 1) / 2 + b);
  CHECK_THROWS_AS(bh_graph(3, 3), std::invalid_argument);
}

TEST_CASE("family of one-edge deletions from s_plus") {
  for (int n : {6, 8, 9})
    for (int k : {2, 3}) {
      if (n < k + 2) continue;
      const int base_edges = split_like(n, k).graph.edge_count();
      std::vector<Graph> fam = l_family(n, k);
      CHECK(!fam.empty());
      for (const Graph& g : fam) CHECK(g.edge_count() == base_edges);
      // pairwise non-isomorphic by construction
      for (size_t i = 0; i < fam.size(); ++i)
        for (size_t j = i + 1; j < fam.size(); ++j)
          CHECK(canonical_form(fam[i]) != canonical_form(fam[j]));
    }
}
