#include <doctest.h>

#include <random>

#include "bht/families.hpp"
#include "bht/oracles.hpp"
#include "bht/patterns.hpp"
#include "bht/random.hpp"

using namespace bht;

TEST_CASE("fan containment") {
  CHECK(contains(join(complete(1), cycle(6)), PatternSpec::fan(6)).has_value());
  CHECK_FALSE(contains(extremal(3, 4).graph, PatternSpec::fan(8)).has_value());
  CHECK(contains(fan(8).graph, PatternSpec::fan(8)).has_value());
  auto w = contains(join(complete(1), cycle(6)), PatternSpec::fan(6));
  REQUIRE(w.has_value());
  CHECK(validate_witness(join(complete(1), cycle(6)), *w));
}

TEST_CASE("friendship containment") {
  CHECK(contains(complete(7), PatternSpec::friendship(3)).has_value());
  CHECK_FALSE(contains(complete(6), PatternSpec::friendship(3)).has_value());
  CHECK(contains(friendship(4).graph, PatternSpec::friendship(4)).has_value());
  CHECK_FALSE(contains(extremal(4, 6).graph, PatternSpec::friendship(4)).has_value());
}

TEST_CASE("neighborhood path and matching statistics") {
  // hub of a friendship graph: neighborhood is a perfect matching
  CHECK(neighborhood_longest_path(friendship(3).graph, 0) == 2);
  CHECK(neighborhood_max_matching(friendship(3).graph, 0) == 3);
  // any vertex of C_5 sees two isolated neighbors
  CHECK(neighborhood_longest_path(cycle(5), 0) == 1);
  // dominating vertex of the equality graph
  for (int k : {3, 4})
    for (int t : {4, 6}) {
      Graph g = extremal(k, t).graph;
      CHECK(neighborhood_longest_path(g, 0) == 2 * k - 1);
      CHECK(neighborhood_max_matching(g, 0) == k - 1);
    }
  CHECK_THROWS_AS(neighborhood_longest_path(extremal(3, 30).graph, 0), capability_error);
}

TEST_CASE("book width") {
  CHECK(book_width(complete(4)) == 2);
  CHECK(book_width(cycle(5)) == 0);
  CHECK(book_width(path(4)) == 0);
  for (int r = 0; r <= 5; ++r) CHECK(book_width(book(r)) == r + 1);
  CHECK(contains(book(3), PatternSpec::book(3)).has_value());
  CHECK_FALSE(contains(book(3), PatternSpec::book(4)).has_value());
}

TEST_CASE("longest cycle") {
  CHECK(longest_cycle(path(6)) == 0);
  CHECK(longest_cycle(theta(1, 3, 4)) == 7);
  CHECK(longest_cycle(complete(5)) == 5);
  CHECK(longest_cycle(extremal(3, 4).graph) == 6);
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 7), 0.45);
    CHECK(longest_cycle(g) == longest_cycle_bruteforce(g));
  }
}

TEST_CASE("longest path against the exhaustive oracle") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 40; ++i) {
    Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 8), 0.45);
    CHECK(longest_path_order(g) == longest_path_bruteforce(g));
    std::vector<int> found;
    bool has = has_path_of_order(g, longest_path_bruteforce(g), &found);
    CHECK(has);
    CHECK_FALSE(has_path_of_order(g, longest_path_bruteforce(g) + 1, nullptr));
  }
}

TEST_CASE("odd girth") {
  CHECK(odd_girth(complete_bipartite(3, 4)) == 0);
  CHECK(odd_girth(cycle(7)) == 7);
  CHECK(odd_girth_check(cycle(7), 2));
  CHECK_FALSE(odd_girth_check(cycle(7), 3));
  CHECK_FALSE(odd_girth_check(friendship(2).graph, 1));
  CHECK(odd_girth_check(complete_bipartite(3, 3), 5));
}

TEST_CASE("theta containment") {
  CHECK(contains(complete(4), PatternSpec::theta(1, 2, 2)).has_value());
  CHECK(contains(theta(1, 3, 4), PatternSpec::theta(1, 3, 4)).has_value());
  CHECK_FALSE(contains(cycle(8), PatternSpec::theta(1, 3, 4)).has_value());
  CHECK_FALSE(contains(extremal(3, 5).graph, PatternSpec::theta(1, 3, 4)).has_value());
  auto w = contains(complete(6), PatternSpec::theta(2, 2, 3));
  REQUIRE(w.has_value());
  CHECK(validate_witness(complete(6), *w));
  auto w5 = contains(complete(5), PatternSpec::theta(1, 2, 3));
  REQUIRE(w5.has_value());
  CHECK(validate_witness(complete(5), *w5));
}

TEST_CASE("cycle and clique containment") {
  CHECK(contains(cycle(5), PatternSpec::cycle(5)).has_value());
  CHECK_FALSE(contains(cycle(5), PatternSpec::cycle(3)).has_value());
  CHECK_FALSE(contains(cycle(5), PatternSpec::cycle(4)).has_value());
  CHECK(contains(complete(5), PatternSpec::clique(5)).has_value());
  CHECK_FALSE(contains(complete(5), PatternSpec::clique(6)).has_value());
  CHECK(contains(cycle(5), PatternSpec::generic(path(5))).has_value());
  CHECK_FALSE(contains(cycle(5), PatternSpec::generic(complete(3))).has_value());
}

TEST_CASE("odd-cycle family containment") {
  CHECK(contains(friendship(2).graph, PatternSpec::odd_cycles_upto(1)).has_value());
  CHECK_FALSE(contains(cycle(7), PatternSpec::odd_cycles_upto(2)).has_value());
  CHECK(contains(cycle(7), PatternSpec::odd_cycles_upto(3)).has_value());
  CHECK_FALSE(contains(complete_bipartite(4, 4), PatternSpec::odd_cycles_upto(3)).has_value());
}

TEST_CASE("matching: blossom against the branching oracle") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 80; ++i) {
    Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 12), 0.35);
    CHECK(max_matching(g, nullptr) == max_matching_bruteforce(g));
  }
  // blossom-heavy cases: odd cycles and friendship graphs
  for (int n : {5, 7, 9}) CHECK(max_matching(cycle(n), nullptr) == n / 2);
  CHECK(max_matching(friendship(3).graph, nullptr) == 3);
}

TEST_CASE("specialized detectors agree with the generic oracle on random graphs") {
  std::mt19937_64 rng(34);
  std::vector<PatternSpec> pats;
  for (int k = 4; k <= 8; ++k) pats.push_back(PatternSpec::fan(k));
  for (int k = 1; k <= 3; ++k) pats.push_back(PatternSpec::friendship(k));
  for (int r = 0; r <= 3; ++r) pats.push_back(PatternSpec::book(r));
  for (int t = 3; t <= 7; ++t) pats.push_back(PatternSpec::cycle(t));
  pats.push_back(PatternSpec::theta(1, 2, 2));
  pats.push_back(PatternSpec::theta(1, 2, 4));
  pats.push_back(PatternSpec::theta(2, 3, 3));
  pats.push_back(PatternSpec::theta(2, 2, 2));
  for (int i = 0; i < 60; ++i) {
    Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 7), 0.45);
    for (const PatternSpec& p : pats) {
      auto spec = contains(g, p);
      auto gen = generic_subiso(g, p.realize());
      CHECK(spec.has_value() == gen.has_value());
      if (spec) CHECK(validate_witness(g, *spec));
      if (gen) CHECK(validate_witness(g, *gen));
    }
  }
}

TEST_CASE("fan containment equals the neighborhood path criterion") {
  std::mt19937_64 rng(35);
  for (int i = 0; i < 50; ++i) {
    Graph g = random_graph(rng, 5 + static_cast<int>(rng() % 6), 0.5);
    for (int k = 2; k <= 4; ++k) {
      bool by_detector = contains(g, PatternSpec::fan(2 * k + 2)).has_value();
      bool by_neighborhood = false;
      for (int u = 0; u < g.order() && !by_neighborhood; ++u)
        by_neighborhood = neighborhood_longest_path(g, u) >= 2 * k + 1;
      bool by_oracle = generic_subiso(g, fan(2 * k + 2).graph).has_value();
      CHECK(by_detector == by_neighborhood);
      CHECK(by_detector == by_oracle);
    }
  }
}

TEST_CASE("friendship containment equals the neighborhood matching criterion") {
  std::mt19937_64 rng(36);
  for (int i = 0; i < 50; ++i) {
    Graph g = random_graph(rng, 5 + static_cast<int>(rng() % 5), 0.5);
    for (int k = 1; k <= 3; ++k) {
      bool by_detector = contains(g, PatternSpec::friendship(k)).has_value();
      bool by_neighborhood = false;
      for (int u = 0; u < g.order() && !by_neighborhood; ++u)
        by_neighborhood = neighborhood_max_matching(g, u) >= k;
      bool by_oracle = generic_subiso(g, friendship(k).graph).has_value();
      CHECK(by_detector == by_neighborhood);
      CHECK(by_detector == by_oracle);
    }
  }
}

TEST_CASE("containment is monotone under edge addition") {
  std::mt19937_64 rng(37);
  std::vector<PatternSpec> pats{PatternSpec::fan(5), PatternSpec::friendship(2),
                                PatternSpec::book(1), PatternSpec::cycle(4),
                                PatternSpec::theta(1, 2, 3)};
  int done = 0;
  while (done < 30) {
    Graph g = random_graph(rng, 6 + static_cast<int>(rng() % 4), 0.4);
    int u = static_cast<int>(rng() % g.order()), v = static_cast<int>(rng() % g.order());
    if (u == v || g.has_edge(u, v)) continue;
    Graph h = add_edge(g, u, v);
    for (const PatternSpec& p : pats)
      if (contains(g, p)) CHECK(contains(h, p).has_value());
    ++done;
  }
}

TEST_CASE("pattern grammar") {
  CHECK(parse_pattern("fan:8").kind == PatternKind::fan);
  CHECK(parse_pattern("fan:8").a == 8);
  CHECK(parse_pattern("theta:1,3,4").c == 4);
  CHECK(parse_pattern("g6:Bw").realize() == graph6_decode("Bw"));
  CHECK(parse_pattern("oddfree:2").kind == PatternKind::odd_cycles_upto);
  CHECK_THROWS_AS(parse_pattern("fan"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pattern("nope:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pattern("theta:1,2"), std::invalid_argument);
  CHECK(parse_pattern("fr:2").to_string() == "fr:2");
}

TEST_CASE("detectors handle the large structured hosts") {
  // neighborhoods here exceed the DP cap; containment must still resolve
  Graph g = extremal(5, 30).graph;
  CHECK_FALSE(contains(g, PatternSpec::fan(12)).has_value());
  CHECK_FALSE(contains(g, PatternSpec::friendship(5)).has_value());
  CHECK_FALSE(contains(g, PatternSpec::theta(1, 5, 6)).has_value());
  CHECK(contains(g, PatternSpec::fan(10)).has_value());  // P_9 alternates through K_4 v 30K_1
}
