#include "bht/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bht {

namespace {

// Power iteration on (A + I) restricted to one component; the shift removes
// the period-2 oscillation on bipartite components, so convergence needs no
// spectral-gap assumption. Returns lambda of A, the component vector scaled
// to max coordinate 1, the residual on A, and the iteration count.
struct ComponentEig {
  double lambda = 0.0;
  std::vector<double> x;  // indexed by position within `verts`
  double residual = 0.0;
  long iterations = 0;
};

ComponentEig power_iterate(const Graph& g, const std::vector<int>& verts, double tol,
                           long max_iter) {
  const int n = static_cast<int>(verts.size());
  ComponentEig out;
  out.x.assign(n, 1.0);
  if (n == 1) {
    return out;  // single vertex: lambda 0, x = 1
  }
  // local adjacency as index lists
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.has_edge(verts[i], verts[j])) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> ax(n);
  double lambda = 0.0, resid = 0.0;
  long it = 0;
  for (; it < max_iter; ++it) {
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j : adj[i]) s += x[j];
      ax[i] = s;
    }
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
      num += x[i] * ax[i];
      den += x[i] * x[i];
    }
    lambda = num / den;
    resid = 0.0;
    for (int i = 0; i < n; ++i) resid = std::max(resid, std::fabs(ax[i] - lambda * x[i]));
    if (resid <= tol) break;
    // next iterate of (A + I), normalized
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
      ax[i] += x[i];
      norm += ax[i] * ax[i];
    }
    norm = std::sqrt(norm);
    for (int i = 0; i < n; ++i) x[i] = ax[i] / norm;
  }
  if (resid > tol)
    throw convergence_error("power iteration did not reach tolerance", lambda, it);
  double xmax = 0.0;
  for (double v : x) xmax = std::max(xmax, v);
  for (double& v : x) v /= xmax;
  out.lambda = lambda;
  out.x = x;
  out.residual = resid;
  out.iterations = it;
  return out;
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol, long max_iter) {
  if (g.order() < 1) throw std::invalid_argument("spectral radius needs at least one vertex");
  SpectralResult best;
  best.perron.assign(g.order(), 0.0);
  best.lambda1 = -1.0;
  std::vector<int> best_verts;
  ComponentEig best_eig;
  for (const VertexSet& comp : components(g)) {
    std::vector<int> verts = comp.to_vector();
    ComponentEig eig = power_iterate(g, verts, tol, max_iter);
    if (eig.lambda > best.lambda1 + tol) {
      best.lambda1 = eig.lambda;
      best_verts = verts;
      best_eig = eig;
    }
  }
  for (size_t i = 0; i < best_verts.size(); ++i) best.perron[best_verts[i]] = best_eig.x[i];
  best.residual = best_eig.residual;
  best.iterations = best_eig.iterations;
  best.u_star = 0;
  for (int v = 1; v < g.order(); ++v)
    if (best.perron[v] > best.perron[best.u_star]) best.u_star = v;
  if (g.order() >= 2) best.lambda2 = full_spectrum(g)[1];
  return best;
}

std::vector<double> full_spectrum(const Graph& g) {
  const int n = g.order();
  if (n < 1) throw std::invalid_argument("spectrum needs at least one vertex");
  std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.has_edge(i, j)) a[i * n + j] = 1.0;
  const double thresh = 1e-13;
  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::fabs(a[p * n + q]));
    if (off <= thresh) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        double apq = a[p * n + q];
        if (std::fabs(apq) <= thresh) continue;
        double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        double tau = s / (1.0 + c);
        double app = a[p * n + p], aqq = a[q * n + q];
        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = a[q * n + p] = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          double arp = a[r * n + p], arq = a[r * n + q];
          a[r * n + p] = a[p * n + r] = arp - s * (arq + tau * arp);
          a[r * n + q] = a[q * n + r] = arq + s * (arp - tau * arq);
        }
      }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a[i * n + i];
  std::sort(eig.rbegin(), eig.rend());
  return eig;
}

namespace {

// Largest root of the characteristic cubic of the equitable quotient of
// K_b v (K_{a-b} u K_1):
//   p(x) = x^3 - (a-2) x^2 + ((b-1)(a-b-1) - b(a-b) - b) x + b(a-b-1).
// The quotient's other two eigenvalues sit at or below a-2, so bisection on
// [a-2, a] isolates the spectral radius.
double bh_lambda(int a, int b) {
  if (b == 0) return a - 1.0;
  double c2 = -(a - 2.0);
  double c1 = static_cast<double>(b - 1) * (a - b - 1) - static_cast<double>(b) * (a - b) - b;
  double c0 = static_cast<double>(b) * (a - b - 1);
  auto p = [&](double x) { return ((x + c2) * x + c1) * x + c0; };
  double lo = a - 2.0, hi = static_cast<double>(a);
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (p(mid) > 0)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double bound_value(const BoundSpec& spec) {
  switch (spec.kind) {
    case BoundKind::nosal:
      if (spec.m < 0) throw std::invalid_argument("nosal bound needs m >= 0");
      return std::sqrt(static_cast<double>(spec.m));
    case BoundKind::lnw:
      if (spec.m < 1) throw std::invalid_argument("lnw bound needs m >= 1");
      return std::sqrt(static_cast<double>(spec.m - 1));
    case BoundKind::fan_theorem: {
      if (spec.k < 1) throw std::invalid_argument("fan bound needs k >= 1");
      double disc = 4.0 * spec.m - static_cast<double>(spec.k) * spec.k + 1.0;
      if (disc < 0) throw std::invalid_argument("fan bound needs 4m >= k^2 - 1");
      return (spec.k - 1 + std::sqrt(disc)) / 2.0;
    }
    case BoundKind::friendship_f23:
      if (spec.m < 1) throw std::invalid_argument("friendship bound needs m >= 1");
      return (1.0 + std::sqrt(4.0 * spec.m - 3.0)) / 2.0;
    case BoundKind::brualdi_hoffman: {
      if (spec.m < 1) throw std::invalid_argument("brualdi-hoffman bound needs m >= 1");
      long long a = 1;
      while ((a + 1) * a / 2 <= spec.m) ++a;
      long long b = spec.m - a * (a - 1) / 2;
      return bh_lambda(static_cast<int>(a), static_cast<int>(b));
    }
  }
  throw std::logic_error("unknown bound kind");
}

EqualityReport equality_check(int k, int t) {
  if (k < 1 || t < 1) throw std::invalid_argument("equality check needs k >= 1, t >= 1");
  long long m = static_cast<long long>(k) * (k - 1) / 2 + static_cast<long long>(k) * t;
  // K_k v tK_1
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) e.push_back({u, v});
    for (int v = k; v < k + t; ++v) e.push_back({u, v});
  }
  Graph g = Graph::from_edges(k + t, e);
  EqualityReport rep;
  rep.lambda = spectral_radius(g).lambda1;
  rep.bound = bound_value({BoundKind::fan_theorem, k, m});
  rep.gap = rep.bound - rep.lambda;
  rep.ok = std::fabs(rep.gap) <= 1e-8;
  return rep;
}

double power_trace_walks(const Graph& g, int p) {
  if (p < 2 || p > 12 || p % 2 != 0) throw std::invalid_argument("trace power must be even, 2..12");
  const int n = g.order();
  const int h = p / 2;
  using Big = unsigned __int128;
  std::vector<Big> m(static_cast<size_t>(n) * n, 0), next(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i * n + j] = g.has_edge(i, j) ? 1 : 0;
  // M = A^h by repeated multiplication
  std::vector<Big> acc = m;
  for (int e = 1; e < h; ++e) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Big s = 0;
        for (int l : VertexSet{g.neighbors(j)}) s += acc[i * n + l];
        next[i * n + j] = s;
      }
    acc.swap(next);
  }
  // Tr(A^{2h}) = sum of squares of the entries of A^h (A symmetric)
  long double tr = 0.0L;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long double e = static_cast<long double>(acc[i * n + j]);
      tr += e * e;
    }
  return static_cast<double>(tr);
}

double power_trace_spectrum(const Graph& g, int p) {
  if (p < 2 || p > 12 || p % 2 != 0) throw std::invalid_argument("trace power must be even, 2..12");
  long double tr = 0.0L;
  for (double lam : full_spectrum(g)) tr += std::pow(static_cast<long double>(lam), p);
  return static_cast<double>(tr);
}

double power_trace(const Graph& g, int p) {
  double walks = power_trace_walks(g, p);
  double eig = power_trace_spectrum(g, p);
  if (std::fabs(walks - eig) > 1e-6 * std::max(1.0, std::fabs(walks)))
    throw std::runtime_error("trace cross-check failed: walk count and spectrum disagree");
  return walks;
}

TraceInequalityReport trace_inequality(const Graph& g, int k) {
  if (k < 1 || 2 * k > 12) throw std::invalid_argument("trace inequality needs 1 <= k <= 6");
  std::vector<double> spec = full_spectrum(g);
  double l1 = spec[0];
  double l2 = spec.size() > 1 ? spec[1] : 0.0;
  TraceInequalityReport rep;
  rep.lhs = std::pow(l1, 2 * k) + std::pow(l2, 2 * k);
  rep.half_trace = power_trace(g, 2 * k) / 2.0;
  rep.holds = rep.lhs <= rep.half_trace + 1e-6;
  return rep;
}

}  // namespace bht
