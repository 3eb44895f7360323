#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bht/graph.hpp"
#include "bht/spectral.hpp"

namespace bht {

struct CoreResult {
  VertexSet core;
  std::vector<std::pair<int, int>> peel_order;  // (vertex, degree at removal)
};

// The k-core of g: unique maximal induced subgraph of minimum degree >= k.
// `priority` optionally biases which removable vertex is peeled first; the
// resulting core never depends on it.
CoreResult k_core(const Graph& g, int k);
CoreResult k_core(const Graph& g, int k, const std::vector<int>& priority);

// Decomposition of a connected graph around its extremal vertex u*:
// x is the Perron vector scaled so x_{u*} = 1, R = N(u*), S = V \ N[u*],
// S0 the S-vertices with no neighbor in S, gamma = -k(k-1)/2.
struct CoreEtaContext {
  int k = 0;
  Graph host;
  double lambda = 0.0;
  std::vector<double> x;
  int u_star = 0;
  VertexSet R, S, S0, S1;
  double gamma = 0.0;
};

CoreEtaContext decompose(const Graph& g, int k);

// eta(L) = sum_{u in L} (d_L(u) - k + 1) x_u - e(L), for L a subset of R.
// The template form lets tests run it in exact rational arithmetic.
template <typename Scalar>
Scalar eta_value(const Graph& host, int k, VertexSet l, const std::vector<Scalar>& x) {
  host.check_subset(l);
  Scalar acc{0};
  int twice_edges = 0;
  for (int u : l) {
    int dl = std::popcount(host.neighbors(u) & l.bits);
    acc += Scalar(dl - k + 1) * x[u];
    twice_edges += dl;
  }
  return acc - Scalar(twice_edges / 2);
}

double eta(const CoreEtaContext& ctx, VertexSet l);

struct EtaCoreReport {
  double eta_l = 0.0;
  double eta_core = 0.0;
  VertexSet core;       // (k-1)-core of G[L]
  bool holds = false;   // eta(L) <= eta(L^c) + 1e-9
  bool equal_values = false;
  bool equal_sets = false;
};

// Evaluates eta(L) against eta of the (k-1)-core of G[L].
EtaCoreReport eta_core_inequality(const CoreEtaContext& ctx, VertexSet l);

enum class ComponentKind { J1, J2, J3, J4, J5 };

struct ComponentClass {
  VertexSet component;  // host vertex set of one component of the core of G[R]
  ComponentKind kind = ComponentKind::J1;
  int order = 0;
  int circumference = -1;          // computed for components of order <= 2k
  std::optional<int> t_missing;    // edges missing from K_{2k}; J4/J5 only
  double eta = 0.0;
};

// Components of the (k-1)-core of G[R], classified by order and circumference:
// J1: order >= 2k+1; J2: circumference <= 2k-2; J3: circumference 2k-1;
// J4: circumference 2k; J5: the J4 members with eta > 0.
std::vector<ComponentClass> classify_components(const CoreEtaContext& ctx);

struct SlackReport {
  double lambda = 0.0;
  long long m = 0;
  double gamma = 0.0;
  // lambda^2 - (k-1)lambda = d(u*) + sum_R (d_R(u)-k+1)x_u + sum_S d_R(w)x_w
  // holds for every connected graph; the residual measures eigenpair error.
  double identity_lhs = 0.0;
  double identity_rhs = 0.0;
  double identity_residual = 0.0;
  // lambda^2 - (k-1)lambda - (m + gamma); nonnegative on spectrally extremal hosts
  double quadratic_slack = 0.0;
  double eta_r = 0.0;
  int e_s = 0;
  double eta_slack = 0.0;        // eta(R) - e(S) - gamma
  double eta_gamma_slack = 0.0;  // eta(R) - gamma
};

SlackReport slack_report(const CoreEtaContext& ctx);

struct PathLemmaReport {
  bool holds = false;
  int checked = 0;  // number of (deleted-edge-set, start-vertex) cases
  std::optional<Graph> counterexample;
  int counterexample_vertex = -1;
};

// For every way of deleting s edges from K_{2s-1} and every vertex v of the
// result H, K_1 v H must contain a path on 2s vertices starting at v.
// Exhaustive for s in {2, 3}.
PathLemmaReport verify_path_lemma(int s);

}  // namespace bht
