#include <doctest.h>

#include <cmath>
#include <random>

#include "bht/families.hpp"
#include "bht/random.hpp"
#include "bht/spectral.hpp"

using namespace bht;

TEST_CASE("spectral radius of standard graphs") {
  CHECK(spectral_radius(cycle(5)).lambda1 == doctest::Approx(2.0).epsilon(1e-10));
  for (int n = 2; n <= 8; ++n)
    CHECK(spectral_radius(complete(n)).lambda1 == doctest::Approx(n - 1.0).epsilon(1e-10));
  CHECK(spectral_radius(extremal(3, 4).graph).lambda1 ==
        doctest::Approx((2.0 + std::sqrt(52.0)) / 2.0).epsilon(1e-10));
  CHECK_THROWS_AS(spectral_radius(Graph(0)), std::invalid_argument);
}

TEST_CASE("perron vector properties") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 40; ++i) {
    int n = 2 + static_cast<int>(rng() % 11);
    Graph g = random_connected_graph(rng, n, 0.4);
    SpectralResult sr = spectral_radius(g);
    double mx = 0;
    for (double x : sr.perron) {
      CHECK(x > 0.0);
      mx = std::max(mx, x);
    }
    CHECK(mx == doctest::Approx(1.0));
    CHECK(sr.residual <= 1e-12);
    // Rayleigh quotient of any nonnegative test vector stays below lambda1
    std::vector<double> y(n);
    for (double& v : y) v = static_cast<double>(rng() % 100) / 100.0 + 0.01;
    double yay = 0, yy = 0;
    for (int u = 0; u < n; ++u) {
      yy += y[u] * y[u];
      for (int v : VertexSet{g.neighbors(u)}) yay += y[u] * y[v];
    }
    CHECK(yay / yy <= sr.lambda1 + 1e-8);
  }
}

TEST_CASE("disconnected graphs take the maximizing component") {
  Graph g = disjoint_union(complete(4), cycle(5));  // lambda 3 vs 2
  SpectralResult sr = spectral_radius(g);
  CHECK(sr.lambda1 == doctest::Approx(3.0));
  CHECK(sr.u_star < 4);
  for (int v = 4; v < 9; ++v) CHECK(sr.perron[v] == 0.0);
  // tie: two isomorphic components, the first one wins
  Graph tie = disjoint_union(complete(3), complete(3));
  CHECK(spectral_radius(tie).u_star == 0);
}

TEST_CASE("full spectrum of small graphs") {
  auto close = [](const std::vector<double>& got, const std::vector<double>& want) {
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-9));
  };
  close(full_spectrum(path(2)), {1.0, -1.0});
  close(full_spectrum(cycle(4)), {2.0, 0.0, 0.0, -2.0});
  close(full_spectrum(complete_bipartite(2, 3)),
        {std::sqrt(6.0), 0.0, 0.0, 0.0, -std::sqrt(6.0)});
}

TEST_CASE("spectrum sums and agreement with power iteration") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 40; ++i) {
    int n = 2 + static_cast<int>(rng() % 11);
    Graph g = random_connected_graph(rng, n, 0.4);
    std::vector<double> spec = full_spectrum(g);
    double s1 = 0, s2 = 0;
    for (double l : spec) {
      s1 += l;
      s2 += l * l;
    }
    CHECK(std::fabs(s1) <= 1e-8);
    CHECK(s2 == doctest::Approx(2.0 * g.edge_count()).epsilon(1e-9));
    CHECK(std::fabs(spectral_radius(g).lambda1 - spec[0]) <= 1e-8);
  }
}

TEST_CASE("adding an edge to a connected graph increases lambda1") {
  std::mt19937_64 rng(23);
  int done = 0;
  while (done < 25) {
    int n = 3 + static_cast<int>(rng() % 8);
    Graph g = random_connected_graph(rng, n, 0.4);
    int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
    if (u == v || g.has_edge(u, v)) continue;
    CHECK(spectral_radius(add_edge(g, u, v)).lambda1 > spectral_radius(g).lambda1 + 1e-10);
    ++done;
  }
}

TEST_CASE("closed-form bound values") {
  CHECK(bound_value({BoundKind::fan_theorem, 3, 15}) ==
        doctest::Approx((2.0 + std::sqrt(52.0)) / 2.0));
  for (long long m : {4, 9, 25})
    CHECK(bound_value({BoundKind::fan_theorem, 1, m}) ==
          doctest::Approx(std::sqrt(static_cast<double>(m))));
  CHECK(bound_value({BoundKind::friendship_f23, 0, 9}) ==
        doctest::Approx((1.0 + std::sqrt(33.0)) / 2.0));
  CHECK(bound_value({BoundKind::nosal, 0, 9}) == doctest::Approx(3.0));
  CHECK(bound_value({BoundKind::lnw, 0, 5}) == doctest::Approx(2.0));
  CHECK_THROWS_AS(bound_value({BoundKind::fan_theorem, 5, 2}), std::invalid_argument);
}

TEST_CASE("brualdi-hoffman bound equals the spectral radius of its graph") {
  for (long long m = 1; m <= 21; ++m) {
    long long a = 1;
    while ((a + 1) * a / 2 <= m) ++a;
    long long b = m - a * (a - 1) / 2;
    double want = spectral_radius(bh_graph(static_cast<int>(a), static_cast<int>(b))).lambda1;
    CHECK(bound_value({BoundKind::brualdi_hoffman, 0, m}) ==
          doctest::Approx(want).epsilon(1e-9));
  }
}

TEST_CASE("equality of the fan bound on the equality graph") {
  EqualityReport r34 = equality_check(3, 4);
  CHECK(r34.ok);
  CHECK(std::fabs(r34.gap) <= 1e-8);

  EqualityReport r25 = equality_check(2, 5);  // m = 11
  CHECK(r25.ok);
  CHECK(r25.lambda == doctest::Approx((1.0 + std::sqrt(41.0)) / 2.0));
  CHECK(r25.bound == doctest::Approx(bound_value({BoundKind::friendship_f23, 0, 11})));

  EqualityReport star = equality_check(1, 9);  // K_{1,9}
  CHECK(star.ok);
  CHECK(star.lambda == doctest::Approx(3.0));
}

TEST_CASE("power traces along two routes") {
  CHECK(power_trace(cycle(4), 4) == doctest::Approx(32.0));
  std::mt19937_64 rng(24);
  for (int i = 0; i < 30; ++i) {
    int n = 2 + static_cast<int>(rng() % 11);
    Graph g = random_graph(rng, n, 0.5);
    CHECK(power_trace_walks(g, 2) == doctest::Approx(2.0 * g.edge_count()));
    for (int p : {4, 6})
      CHECK(power_trace_walks(g, p) ==
            doctest::Approx(power_trace_spectrum(g, p)).epsilon(1e-9));
  }
  CHECK_THROWS_AS(power_trace(complete(3), 3), std::invalid_argument);
  CHECK_THROWS_AS(power_trace(complete(3), 14), std::invalid_argument);
}

TEST_CASE("trace inequality on odd-cycle-free graphs") {
  TraceInequalityReport c7 = trace_inequality(cycle(7), 2);
  CHECK(c7.holds);
  CHECK(c7.half_trace == doctest::Approx(21.0));
}
