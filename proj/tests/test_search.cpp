#include <doctest.h>

#include <cmath>
#include <set>

#include "bht/families.hpp"
#include "bht/oracles.hpp"
#include "bht/search.hpp"

using namespace bht;

namespace {

SearchConfig base_config(long long m) {
  SearchConfig cfg;
  cfg.m = m;
  return cfg;
}

}  // namespace

TEST_CASE("enumeration of small sizes") {
  SearchConfig cfg = base_config(1);
  std::vector<Graph> got;
  enumerate(cfg, [&](const Graph& g) { got.push_back(g); });
  REQUIRE(got.size() == 1);
  CHECK(canonical_form(got[0]) == canonical_form(complete(2)));

  cfg = base_config(3);  // connected classes: P_4, K_3, K_{1,3}
  std::set<std::string> canons;
  enumerate(cfg, [&](const Graph& g) { canons.insert(canonical_form(g).bytes); });
  CHECK(canons.size() == 3);
  CHECK(canons.count(canonical_form(path(4)).bytes) == 1);
  CHECK(canons.count(canonical_form(complete(3)).bytes) == 1);
  CHECK(canons.count(canonical_form(complete_bipartite(1, 3)).bytes) == 1);
}

TEST_CASE("connected census by edge count") {
  // counts of connected graphs with m edges
  const std::vector<long long> want{1, 1, 3, 5, 12, 30, 79, 227, 710};
  for (size_t m = 1; m <= want.size(); ++m) {
    SearchConfig cfg = base_config(static_cast<long long>(m));
    long long count = 0;
    enumerate(cfg, [&](const Graph& g) {
      CHECK(is_connected(g));
      ++count;
    });
    CHECK(count == want[m - 1]);
  }
}

TEST_CASE("enumeration census matches the edge-subset oracle") {
  for (int m = 1; m <= 6; ++m) {
    SearchConfig cfg = base_config(m);
    cfg.connected_only = false;
    cfg.n_max = 7;
    std::set<std::string> canons;
    enumerate(cfg, [&](const Graph& g) {
      CHECK(g.edge_count() == m);
      canons.insert(canonical_form(g).bytes);
    });
    std::set<std::string> brute;
    for (const Graph& g : all_graphs_bruteforce(7, m))
      brute.insert(canonical_form(g).bytes);
    CHECK(canons == brute);
  }
}

TEST_CASE("guard rails") {
  CHECK_THROWS_AS(extremal_search(base_config(15)), std::invalid_argument);
  SearchConfig wide = base_config(5);
  wide.n_max = 12;
  CHECK_THROWS_AS(extremal_search(wide), std::invalid_argument);
  CHECK_THROWS_AS(extremal_search(base_config(0)), std::invalid_argument);
}

TEST_CASE("unrestricted search finds the complete graph") {
  SearchConfig cfg = base_config(10);
  SearchReport rep = extremal_search(cfg);
  CHECK(rep.best_lambda == doctest::Approx(4.0).epsilon(1e-9));
  REQUIRE(rep.argmax.size() == 1);
  CHECK(rep.argmax[0] == canonical_form(complete(5)).bytes);
}

TEST_CASE("search at m = 7 finds the brualdi-hoffman graph") {
  SearchConfig cfg = base_config(7);
  cfg.connected_only = false;
  SearchReport rep = extremal_search(cfg);
  REQUIRE(rep.argmax.size() == 1);
  CHECK(rep.argmax[0] == canonical_form(bh_graph(4, 1)).bytes);
  CHECK(std::fabs(rep.best_lambda - full_spectrum(graph6_decode(rep.argmax[0]))[0]) <= 1e-8);
}

TEST_CASE("triangle-free search at m = 5") {
  SearchConfig cfg = base_config(5);
  cfg.pattern = PatternSpec::clique(3);
  SearchReport rep = extremal_search(cfg);
  CHECK(rep.best_lambda <= std::sqrt(5.0) + 1e-8);
  // C_5 sits strictly below sqrt(m) but attains sqrt(m-1)
  cfg.require_nonbipartite = true;
  SearchReport nb = extremal_search(cfg);
  CHECK(nb.best_lambda == doctest::Approx(2.0).epsilon(1e-9));
  REQUIRE(nb.argmax.size() == 1);
  CHECK(nb.argmax[0] == canonical_form(cycle(5)).bytes);
}

TEST_CASE("filter soundness: emitted graphs are pattern-free") {
  SearchConfig cfg = base_config(6);
  cfg.pattern = PatternSpec::clique(3);
  cfg.connected_only = false;
  enumerate(cfg, [&](const Graph& g) {
    CHECK_FALSE(generic_subiso(g, complete(3)).has_value());
  });
}

TEST_CASE("verify_bound reports gaps and flags") {
  SearchConfig cfg = base_config(8);
  SearchReport rep = verify_bound(BoundKind::nosal, 0, cfg);
  REQUIRE(rep.bound.has_value());
  CHECK_FALSE(rep.bound->violated);
  CHECK(rep.bound->value == doctest::Approx(std::sqrt(8.0)));
  // complete bipartite graphs attain sqrt(m), so the gap closes
  CHECK(std::fabs(rep.bound->gap) <= 1e-8);
  std::string star = canonical_form(complete_bipartite(1, 8)).bytes;
  CHECK(std::find(rep.argmax.begin(), rep.argmax.end(), star) != rep.argmax.end());

  // the friendship bound is attained at m = 9 by K_2 v 4K_1
  SearchConfig cfg9 = base_config(9);
  cfg9.n_max = 8;
  SearchReport fr = verify_bound(BoundKind::friendship_f23, 0, cfg9);
  REQUIRE(fr.bound.has_value());
  CHECK_FALSE(fr.bound->violated);
  CHECK(std::fabs(fr.bound->gap) <= 1e-8);
  std::string expected = canonical_form(extremal(2, 4).graph).bytes;
  CHECK(std::find(fr.argmax.begin(), fr.argmax.end(), expected) != fr.argmax.end());
}

TEST_CASE("workers do not change the report") {
  SearchConfig cfg = base_config(8);
  cfg.workers = 1;
  SearchReport a = extremal_search(cfg);
  cfg.workers = 4;
  SearchReport b = extremal_search(cfg);
  CHECK(a.best_lambda == b.best_lambda);
  CHECK(a.argmax == b.argmax);
  CHECK(a.census.generated == b.census.generated);
  CHECK(a.census.passed == b.census.passed);
}

TEST_CASE("hill climb") {
  // no improving rotation from the equality graph under its own fan filter
  SearchConfig cfg = base_config(15);
  cfg.pattern = PatternSpec::fan(8);
  SearchReport stay = hill_climb(cfg, extremal(3, 4).graph);
  CHECK(stay.argmax[0] == canonical_form(extremal(3, 4).graph).bytes);

  // an unconstrained climb from a path strictly improves, preserving size
  SearchConfig free_cfg = base_config(10);
  Graph start = path(11);
  SearchReport up = hill_climb(free_cfg, start);
  CHECK(up.best_lambda > full_spectrum(start)[0] + 1e-6);
  CHECK(graph6_decode(up.argmax[0]).edge_count() == 10);

  // with a filter, the climb result still passes it
  SearchConfig filt = base_config(15);
  filt.pattern = PatternSpec::fan(8);
  SearchReport fr = hill_climb(filt, extremal(3, 4).graph);
  Graph end = graph6_decode(fr.argmax[0]);
  CHECK(end.edge_count() == 15);
  CHECK_FALSE(contains(end, PatternSpec::fan(8)).has_value());

  // determinism for a fixed seed
  SearchReport up2 = hill_climb(free_cfg, start);
  CHECK(up.best_lambda == up2.best_lambda);
  CHECK(up.argmax == up2.argmax);
  CHECK(up.moves == up2.moves);

  CHECK_THROWS_AS(hill_climb(free_cfg, path(5)), std::invalid_argument);
}
