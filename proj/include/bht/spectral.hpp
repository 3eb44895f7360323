#pragma once

#include <optional>
#include <vector>

#include "bht/graph.hpp"

namespace bht {

// Power iteration failed to reach the residual tolerance within the cap.
struct convergence_error : std::runtime_error {
  double estimate;
  long iterations;
  convergence_error(const std::string& msg, double est, long it)
      : std::runtime_error(msg), estimate(est), iterations(it) {}
};

struct SpectralResult {
  double lambda1 = 0.0;
  std::vector<double> perron;  // max coordinate 1; zero off the winning component
  std::optional<double> lambda2;
  double residual = 0.0;  // ||A x - lambda1 x||_inf
  long iterations = 0;
  int u_star = 0;  // argmax coordinate, lowest index on ties
};

enum class BoundKind { nosal, lnw, fan_theorem, friendship_f23, brualdi_hoffman };

struct BoundSpec {
  BoundKind kind;
  int k = 0;        // fan_theorem only
  long long m = 0;  // edge count
};

// Spectral radius and Perron vector via power iteration on A + I.
// Disconnected graphs are handled per component; the winning component's
// vector is reported and all other coordinates are zero.
SpectralResult spectral_radius(const Graph& g, double tol = 1e-12, long max_iter = 1000000);

// All n eigenvalues in descending order (cyclic Jacobi rotations).
std::vector<double> full_spectrum(const Graph& g);

double bound_value(const BoundSpec& spec);

struct EqualityReport {
  double lambda = 0.0;
  double bound = 0.0;
  double gap = 0.0;  // bound - lambda
  bool ok = false;   // |gap| <= 1e-8
};

// Checks that K_k v tK_1 attains (k-1+sqrt(4m-k^2+1))/2 at m = k(k-1)/2 + kt.
EqualityReport equality_check(int k, int t);

// Tr(A^p) by integer closed-walk counting (p even, p <= 12).
double power_trace_walks(const Graph& g, int p);
// Tr(A^p) as the p-th power sum of the full spectrum.
double power_trace_spectrum(const Graph& g, int p);
// Both routes, cross-checked against each other.
double power_trace(const Graph& g, int p);

struct TraceInequalityReport {
  double lhs = 0.0;       // lambda1^p + lambda2^p
  double half_trace = 0.0;
  bool holds = false;
};

// lambda1^{2k} + lambda2^{2k} <= Tr(A^{2k})/2 (meaningful on graphs that are
// {C_3, ..., C_{2k+1}}-free; the caller checks freeness).
TraceInequalityReport trace_inequality(const Graph& g, int k);

}  // namespace bht
