#include "bht/core_eta.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bht/patterns.hpp"

namespace bht {

CoreResult k_core(const Graph& g, int k) {
  std::vector<int> priority(g.order());
  std::iota(priority.begin(), priority.end(), 0);
  return k_core(g, k, priority);
}

CoreResult k_core(const Graph& g, int k, const std::vector<int>& priority) {
  if (k < 0) throw std::invalid_argument("core order must be nonnegative");
  if (static_cast<int>(priority.size()) != g.order())
    throw std::invalid_argument("priority size mismatch");
  CoreResult out;
  std::uint64_t remaining = g.vertex_mask().bits;
  for (;;) {
    int pick = -1;
    for (int v : VertexSet{remaining}) {
      if (std::popcount(g.neighbors(v) & remaining) >= k) continue;
      if (pick < 0 || priority[v] < priority[pick]) pick = v;
    }
    if (pick < 0) break;
    out.peel_order.push_back({pick, std::popcount(g.neighbors(pick) & remaining)});
    remaining &= ~(std::uint64_t{1} << pick);
  }
  out.core = {remaining};
  return out;
}

CoreEtaContext decompose(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("decompose needs k >= 1");
  if (g.order() < 1) throw std::invalid_argument("decompose needs at least one vertex");
  if (!is_connected(g))
    throw std::invalid_argument("decompose needs a connected graph; pass one component");
  SpectralResult sr = spectral_radius(g);
  CoreEtaContext ctx;
  ctx.k = k;
  ctx.host = g;
  ctx.lambda = sr.lambda1;
  ctx.x = sr.perron;
  ctx.u_star = sr.u_star;
  ctx.R = g.neighbor_set(ctx.u_star);
  ctx.S = g.vertex_mask() - ctx.R - VertexSet::single(ctx.u_star);
  for (int w : ctx.S)
    if ((g.neighbors(w) & ctx.S.bits) == 0) ctx.S0 = ctx.S0.with(w);
  ctx.S1 = ctx.S - ctx.S0;
  ctx.gamma = -0.5 * k * (k - 1);
  return ctx;
}

double eta(const CoreEtaContext& ctx, VertexSet l) {
  if (!l.subset_of(ctx.R)) throw std::invalid_argument("eta needs L to be a subset of R");
  return eta_value(ctx.host, ctx.k, l, ctx.x);
}

EtaCoreReport eta_core_inequality(const CoreEtaContext& ctx, VertexSet l) {
  if (!l.subset_of(ctx.R)) throw std::invalid_argument("eta needs L to be a subset of R");
  EtaCoreReport rep;
  Induced sub = induced(ctx.host, l);
  CoreResult core = k_core(sub.graph, ctx.k - 1);
  for (int v : core.core) rep.core = rep.core.with(sub.vertices[v]);
  rep.eta_l = eta(ctx, l);
  rep.eta_core = eta(ctx, rep.core);
  rep.holds = rep.eta_l <= rep.eta_core + 1e-9;
  rep.equal_values = std::fabs(rep.eta_l - rep.eta_core) <= 1e-9;
  rep.equal_sets = rep.core == l;
  return rep;
}

std::vector<ComponentClass> classify_components(const CoreEtaContext& ctx) {
  Induced sub = induced(ctx.host, ctx.R);
  CoreResult core = k_core(sub.graph, ctx.k - 1);
  VertexSet core_host;
  for (int v : core.core) core_host = core_host.with(sub.vertices[v]);
  std::vector<ComponentClass> out;
  Induced core_sub = induced(ctx.host, core_host);
  for (const VertexSet& comp_local : components(core_sub.graph)) {
    ComponentClass cc;
    for (int v : comp_local) cc.component = cc.component.with(core_sub.vertices[v]);
    cc.order = cc.component.count();
    cc.eta = eta(ctx, cc.component);
    if (cc.order >= 2 * ctx.k + 1) {
      cc.kind = ComponentKind::J1;
    } else {
      Graph j = induced(ctx.host, cc.component).graph;
      cc.circumference = longest_cycle(j);
      if (cc.circumference <= 2 * ctx.k - 2) {
        cc.kind = ComponentKind::J2;
      } else if (cc.circumference == 2 * ctx.k - 1) {
        cc.kind = ComponentKind::J3;
      } else {
        cc.kind = cc.eta > 0 ? ComponentKind::J5 : ComponentKind::J4;
        cc.t_missing = cc.order * (cc.order - 1) / 2 - j.edge_count();
      }
    }
    out.push_back(cc);
  }
  return out;
}

SlackReport slack_report(const CoreEtaContext& ctx) {
  const Graph& g = ctx.host;
  SlackReport rep;
  rep.lambda = ctx.lambda;
  rep.m = g.edge_count();
  rep.gamma = ctx.gamma;
  double lhs = ctx.lambda * ctx.lambda - (ctx.k - 1) * ctx.lambda;
  double rhs = g.degree(ctx.u_star);
  for (int u : ctx.R) {
    int dr = std::popcount(g.neighbors(u) & ctx.R.bits);
    rhs += (dr - ctx.k + 1) * ctx.x[u];
  }
  for (int w : ctx.S) {
    int dr = std::popcount(g.neighbors(w) & ctx.R.bits);
    rhs += dr * ctx.x[w];
  }
  rep.identity_lhs = lhs;
  rep.identity_rhs = rhs;
  rep.identity_residual = std::fabs(lhs - rhs);
  rep.quadratic_slack = lhs - rep.m - ctx.gamma;
  rep.eta_r = eta(ctx, ctx.R);
  rep.e_s = induced(g, ctx.S).graph.edge_count();
  rep.eta_slack = rep.eta_r - rep.e_s - ctx.gamma;
  rep.eta_gamma_slack = rep.eta_r - ctx.gamma;
  return rep;
}

namespace {

bool path_from_vertex(const Graph& g, int start, int order_needed) {
  // DFS for a path on `order_needed` vertices starting at `start`.
  std::vector<int> stack{start};
  std::uint64_t used = std::uint64_t{1} << start;
  auto dfs = [&](auto&& self, int cur, int len) -> bool {
    if (len == order_needed) return true;
    for (int w : VertexSet{g.neighbors(cur) & ~used}) {
      used |= std::uint64_t{1} << w;
      if (self(self, w, len + 1)) return true;
      used &= ~(std::uint64_t{1} << w);
    }
    return false;
  };
  return dfs(dfs, start, 1);
}

}  // namespace

PathLemmaReport verify_path_lemma(int s) {
  if (s < 2 || s > 3) throw std::invalid_argument("path lemma is checked exhaustively for s in {2,3}");
  const int nh = 2 * s - 1;
  Graph kn = complete(nh);
  std::vector<std::pair<int, int>> all_edges = kn.edges();
  const int ne = static_cast<int>(all_edges.size());
  PathLemmaReport rep;
  rep.holds = true;
  // iterate all s-subsets of the edge set
  std::vector<int> idx(s);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    Graph h = kn;
    for (int i : idx) h = delete_edge(h, all_edges[i].first, all_edges[i].second);
    Graph g = join(complete(1), h);  // apex is vertex 0; H vertices shift by 1
    for (int v = 0; v < nh; ++v) {
      ++rep.checked;
      if (!path_from_vertex(g, 1 + v, 2 * s)) {
        rep.holds = false;
        rep.counterexample = h;
        rep.counterexample_vertex = v;
        return rep;
      }
    }
    // next combination
    int i = s - 1;
    while (i >= 0 && idx[i] == ne - s + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
  return rep;
}

}  // namespace bht
