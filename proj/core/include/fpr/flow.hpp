#pragma once

#include <cstdint>
#include <vector>

namespace fpr {

/// Directed network with integral capacities and nonnegative arc costs.
/// Supports min-cost flow (successive shortest paths with Dijkstra on reduced
/// costs) and max flow (Dinic).
class FlowNetwork {
 public:
  explicit FlowNetwork(int num_nodes);

  int num_nodes() const { return static_cast<int>(adjacency_.size()); }
  /// Returns the arc id. Cost must be nonnegative.
  int add_arc(int from, int to, std::int64_t capacity, std::int64_t cost = 0);
  std::int64_t flow(int arc) const;

  struct MinCostResult {
    std::int64_t flow = 0;
    std::int64_t cost = 0;
  };
  /// Sends up to `limit` units from s to t at minimum total cost.
  MinCostResult min_cost_flow(int s, int t, std::int64_t limit);
  std::int64_t max_flow(int s, int t);

 private:
  struct Arc {
    int to;
    std::int64_t residual;
    std::int64_t cost;
  };

  std::int64_t dinic_push(int v, int t, std::int64_t pushed,
                          std::vector<int>& level, std::vector<std::size_t>& next);

  std::vector<Arc> arcs_;  // arc 2e is forward, 2e+1 its reverse
  std::vector<std::int64_t> capacity_;
  std::vector<std::vector<int>> adjacency_;
};

}  // namespace fpr
