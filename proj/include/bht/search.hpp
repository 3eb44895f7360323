#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bht/graph.hpp"
#include "bht/patterns.hpp"
#include "bht/spectral.hpp"

namespace bht {

enum class SearchMode { exhaustive, hill_climb };

struct SearchConfig {
  long long m = 0;
  std::optional<PatternSpec> pattern;  // the forbidden subgraph
  int n_min = 0;                       // 0: derive the clique lower bound
  int n_max = 0;                       // 0: derive min(m+1, rail)
  bool connected_only = true;
  bool forbid_isolated = true;  // enumeration always works modulo isolated vertices
  bool require_nonbipartite = false;
  bool prune_by_pattern = true;  // containment is monotone, so pruning mid-level is sound
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t seed = 0;
  long long budget = 10000;  // hill-climb move cap
  int workers = 0;           // 0: BHT_WORKERS env or hardware concurrency
};

struct SearchCensus {
  long long generated = 0;  // final-level classes meeting the structural constraints
  long long passed = 0;     // ... that are also pattern-free (and non-bipartite if required)
  bool pattern_pruned = false;  // generated undercounts when mid-level pruning was on
};

struct BoundReport {
  BoundKind kind;
  double value = 0.0;
  double gap = 0.0;       // value - best_lambda
  bool violated = false;  // best_lambda > value + 1e-8; at desk scale this is
                          // a finding to inspect, not a refutation
};

struct SearchReport {
  double best_lambda = 0.0;
  std::vector<std::string> argmax;  // canonical graph6, all within 1e-8 of best
  SearchCensus census;
  std::optional<BoundReport> bound;
  int n_max_effective = 0;
  long long moves = 0;  // hill-climb only
};

// One representative per isomorphism class of graphs with cfg.m edges meeting
// the configuration, generated by canonical-deletion extension. Guard rails:
// m <= 14 and n_max <= 11.
void enumerate(const SearchConfig& cfg, const std::function<void(const Graph&)>& yield);

SearchReport extremal_search(const SearchConfig& cfg);

// Runs extremal_search under the pattern matching `kind` and reports the gap
// to the closed-form bound.
SearchReport verify_bound(BoundKind kind, int k, const SearchConfig& cfg);

SearchReport hill_climb(const SearchConfig& cfg, const Graph& start);

}  // namespace bht
