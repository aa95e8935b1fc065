#include "mstsp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace mstsp {

namespace {

int checked_node_count(const GridDims& dims, int limit, const char* who) {
  if (limit < 3 || limit > kOracleHardCap) {
    throw std::invalid_argument("oracle limit must be in 3.." +
                                std::to_string(kOracleHardCap) + ", got " +
                                std::to_string(limit));
  }
  const std::int64_t count = dims.node_count();
  if (count > limit) {
    throw std::invalid_argument(std::string(who) + ": " + std::to_string(count) +
                                " nodes exceed the limit of " + std::to_string(limit));
  }
  return static_cast<int>(count);
}

bool connected(const std::vector<std::uint32_t>& adj, int n) {
  std::uint32_t reached = 1u;
  std::uint32_t frontier = 1u;
  while (frontier != 0) {
    std::uint32_t next = 0;
    while (frontier != 0) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= adj[static_cast<std::size_t>(v)] & ~reached;
    }
    reached |= next;
    frontier = next;
  }
  return reached == (n == 32 ? ~0u : (1u << n) - 1u);
}

enum class BacktrackOutcome { found, exhausted, out_of_budget };

// Exhaustive depth-first search with fewest-onward-moves ordering. Exact
// when it finishes; the budget hands hard instances to the subset DP.
class Backtracker {
 public:
  Backtracker(const std::vector<std::uint32_t>& adj, int n, std::int64_t budget)
      : adj_(adj), n_(n), budget_(budget) {}

  BacktrackOutcome run(std::vector<int>* cycle_out) {
    path_.clear();
    path_.push_back(0);
    const BacktrackOutcome outcome = extend(1u, 0);
    if (outcome == BacktrackOutcome::found) *cycle_out = path_;
    return outcome;
  }

 private:
  BacktrackOutcome extend(std::uint32_t visited, int at) {
    if (--budget_ < 0) return BacktrackOutcome::out_of_budget;
    if (static_cast<int>(path_.size()) == n_) {
      return (adj_[static_cast<std::size_t>(at)] & 1u) != 0
                 ? BacktrackOutcome::found
                 : BacktrackOutcome::exhausted;
    }
    int candidates[32];
    int degrees[32];
    int count = 0;
    std::uint32_t open = adj_[static_cast<std::size_t>(at)] & ~visited;
    while (open != 0) {
      const int v = std::countr_zero(open);
      open &= open - 1;
      candidates[count] = v;
      degrees[count] = std::popcount(adj_[static_cast<std::size_t>(v)] & ~visited);
      ++count;
    }
    // Fewest onward moves first; ties by node index for determinism.
    for (int a = 1; a < count; ++a) {
      for (int b = a; b > 0 && degrees[b - 1] > degrees[b]; --b) {
        std::swap(degrees[b - 1], degrees[b]);
        std::swap(candidates[b - 1], candidates[b]);
      }
    }
    const bool last_step = static_cast<int>(path_.size()) == n_ - 1;
    for (int idx = 0; idx < count; ++idx) {
      if (degrees[idx] == 0 && !last_step) continue;  // dead end ahead
      const int v = candidates[idx];
      path_.push_back(v);
      const BacktrackOutcome outcome = extend(visited | (1u << v), v);
      if (outcome != BacktrackOutcome::exhausted) return outcome;
      path_.pop_back();
    }
    return BacktrackOutcome::exhausted;
  }

  const std::vector<std::uint32_t>& adj_;
  int n_;
  std::int64_t budget_;
  std::vector<int> path_;
};

// dp over subsets containing node 0 (index = subset >> 1): bit v is set
// when some path from node 0 covers exactly the subset and ends at v.
bool hamiltonian_dp(const std::vector<std::uint32_t>& adj, int n,
                    std::vector<int>* cycle_out) {
  const std::size_t half = std::size_t{1} << (n - 1);
  std::vector<std::uint32_t> dp(half, 0u);
  dp[0] = 1u;
  for (std::size_t r = 0; r < half; ++r) {
    std::uint32_t ends = dp[r];
    if (ends == 0) continue;
    const std::uint32_t subset = static_cast<std::uint32_t>((r << 1) | 1u);
    while (ends != 0) {
      const int e = std::countr_zero(ends);
      ends &= ends - 1;
      std::uint32_t nexts = adj[static_cast<std::size_t>(e)] & ~subset;
      while (nexts != 0) {
        const int v = std::countr_zero(nexts);
        nexts &= nexts - 1;
        dp[r | (std::size_t{1} << (v - 1))] |= 1u << v;
      }
    }
  }
  const std::uint32_t closing = dp[half - 1] & adj[0] & ~1u;
  if (closing == 0) return false;

  std::vector<int> reversed;
  reversed.reserve(static_cast<std::size_t>(n));
  std::uint32_t subset = (n == 32 ? ~0u : (1u << n) - 1u);
  int e = std::countr_zero(closing);
  while (e != 0) {
    reversed.push_back(e);
    subset &= ~(1u << e);
    const std::uint32_t prevs = dp[subset >> 1] & adj[static_cast<std::size_t>(e)];
    e = std::countr_zero(prevs);
  }
  reversed.push_back(0);
  cycle_out->assign(reversed.rbegin(), reversed.rend());
  return true;
}

Tour cycle_to_tour(const GridDims& dims, const std::vector<int>& cycle) {
  Tour tour{dims, {}};
  tour.order.reserve(cycle.size());
  for (const int v : cycle) tour.order.push_back(point_at(dims, v));
  return tour;
}

}  // namespace

std::vector<SquaredLength> distinct_thresholds(const GridDims& dims) {
  std::vector<SquaredLength> values;
  values.reserve(static_cast<std::size_t>(dims.m()) * dims.n());
  for (std::int64_t dr = 0; dr < dims.m(); ++dr) {
    for (std::int64_t dc = 0; dc < dims.n(); ++dc) {
      if (dr == 0 && dc == 0) continue;
      values.push_back(SquaredLength{dr * dr + dc * dc});
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

ThresholdGraph make_threshold_graph(const GridDims& dims, SquaredLength threshold_sq) {
  const int n = checked_node_count(dims, kOracleHardCap, "make_threshold_graph");
  ThresholdGraph graph{dims, threshold_sq, std::vector<std::uint32_t>(
                                               static_cast<std::size_t>(n), 0u)};
  for (int a = 0; a < n; ++a) {
    const GridPoint pa = point_at(dims, a);
    for (int b = a + 1; b < n; ++b) {
      if (sq_dist(pa, point_at(dims, b)) >= threshold_sq) {
        graph.adj[static_cast<std::size_t>(a)] |= 1u << b;
        graph.adj[static_cast<std::size_t>(b)] |= 1u << a;
      }
    }
  }
  return graph;
}

CycleSearch has_hamiltonian_cycle(const ThresholdGraph& graph, int node_limit) {
  return has_hamiltonian_cycle(graph, HamSearchOptions{node_limit, 200'000});
}

CycleSearch has_hamiltonian_cycle(const ThresholdGraph& graph,
                                  const HamSearchOptions& options) {
  const int n =
      checked_node_count(graph.dims, options.node_limit, "has_hamiltonian_cycle");
  if (n < 3) return {};
  for (int v = 0; v < n; ++v) {
    if (std::popcount(graph.adj[static_cast<std::size_t>(v)]) < 2) return {};
  }
  if (!connected(graph.adj, n)) return {};

  std::vector<int> cycle;
  BacktrackOutcome outcome = BacktrackOutcome::out_of_budget;
  if (options.backtrack_budget > 0) {
    Backtracker quick(graph.adj, n, options.backtrack_budget);
    outcome = quick.run(&cycle);
  }
  switch (outcome) {
    case BacktrackOutcome::found:
      break;
    case BacktrackOutcome::exhausted:
      return {};
    case BacktrackOutcome::out_of_budget:
      if (!hamiltonian_dp(graph.adj, n, &cycle)) return {};
      break;
  }
  CycleSearch result{true, {}};
  result.cycle.reserve(cycle.size());
  for (const int v : cycle) result.cycle.push_back(point_at(graph.dims, v));
  return result;
}

OracleResult solve_exact(const GridDims& dims, int node_limit) {
  checked_node_count(dims, node_limit, "solve_exact");
  if (dims.node_count() < 3) {
    throw std::invalid_argument("no closed tour on fewer than 3 nodes");
  }
  const std::vector<SquaredLength> thresholds = distinct_thresholds(dims);

  std::vector<std::vector<GridPoint>> witnesses(thresholds.size());
  const auto feasible = [&](std::size_t idx) {
    const CycleSearch search =
        has_hamiltonian_cycle(make_threshold_graph(dims, thresholds[idx]), node_limit);
    if (search.found) witnesses[idx] = search.cycle;
    return search.found;
  };

  if (!feasible(0)) {
    // Threshold 1 keeps the complete graph, which is Hamiltonian for >= 3 nodes.
    throw InternalError("complete graph reported non-Hamiltonian for " +
                        std::to_string(dims.m()) + "x" + std::to_string(dims.n()));
  }
  std::size_t lo = 0;
  std::size_t hi = thresholds.size();  // one past the last feasible candidate
  if (feasible(thresholds.size() - 1)) {
    lo = thresholds.size() - 1;
  } else {
    hi = thresholds.size() - 1;
    while (hi - lo > 1) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (feasible(mid)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    // Bracket sanity: feasibility must be monotone in the threshold.
    if (witnesses[lo].empty()) {
      throw InternalError("threshold search lost its feasible bracket");
    }
  }

  Tour witness{dims, std::move(witnesses[lo])};
  const ValidationResult check = validate_tour(witness);
  if (!check.ok() || min_edge(witness) < thresholds[lo]) {
    throw InternalError("oracle witness broken: " +
                        (check.ok() ? std::string("min edge below threshold")
                                    : check.message));
  }
  return OracleResult{dims, thresholds[lo], std::move(witness)};
}

OracleResult brute_force_small(const GridDims& dims) {
  const std::int64_t count = dims.node_count();
  if (count > 9) {
    throw std::invalid_argument("brute force is capped at 9 nodes, got " +
                                std::to_string(count));
  }
  if (count < 3) {
    throw std::invalid_argument("no closed tour on fewer than 3 nodes");
  }
  const int n = static_cast<int>(count);
  std::vector<GridPoint> points;
  points.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) points.push_back(point_at(dims, v));

  std::vector<int> perm(static_cast<std::size_t>(n - 1));
  std::iota(perm.begin(), perm.end(), 1);
  SquaredLength best{-1};
  std::vector<int> best_cycle;
  do {
    if (perm.front() > perm.back()) continue;  // each cycle once per direction
    SquaredLength low = sq_dist(points[0], points[static_cast<std::size_t>(perm.front())]);
    for (std::size_t i = 0; i + 1 < perm.size(); ++i) {
      const SquaredLength d = sq_dist(points[static_cast<std::size_t>(perm[i])],
                                      points[static_cast<std::size_t>(perm[i + 1])]);
      if (d < low) low = d;
    }
    const SquaredLength closing =
        sq_dist(points[static_cast<std::size_t>(perm.back())], points[0]);
    if (closing < low) low = closing;
    if (low > best) {
      best = low;
      best_cycle.assign(1, 0);
      best_cycle.insert(best_cycle.end(), perm.begin(), perm.end());
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  return OracleResult{dims, best, cycle_to_tour(dims, best_cycle)};
}

}  // namespace mstsp
