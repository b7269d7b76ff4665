#include "fpr/flow.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>

#include "fpr/error.hpp"

namespace fpr {

namespace {
constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max();
}

FlowNetwork::FlowNetwork(int num_nodes) : adjacency_(num_nodes) {}

int FlowNetwork::add_arc(int from, int to, std::int64_t capacity,
                         std::int64_t cost) {
  if (cost < 0) throw InvalidInput("flow arc cost must be >= 0");
  const int id = static_cast<int>(capacity_.size());
  arcs_.push_back({to, capacity, cost});
  arcs_.push_back({from, 0, -cost});
  capacity_.push_back(capacity);
  adjacency_[from].push_back(2 * id);
  adjacency_[to].push_back(2 * id + 1);
  return id;
}

std::int64_t FlowNetwork::flow(int arc) const {
  return capacity_[arc] - arcs_[2 * arc].residual;
}

FlowNetwork::MinCostResult FlowNetwork::min_cost_flow(int s, int t,
                                                      std::int64_t limit) {
  const int n = num_nodes();
  // All costs start nonnegative, so zero potentials are feasible.
  std::vector<std::int64_t> potential(n, 0);
  std::vector<std::int64_t> dist(n);
  std::vector<int> via(n);
  MinCostResult result;
  using Item = std::pair<std::int64_t, int>;
  while (result.flow < limit) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    std::fill(via.begin(), via.end(), -1);
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[s] = 0;
    heap.emplace(0, s);
    while (!heap.empty()) {
      const auto [d, v] = heap.top();
      heap.pop();
      if (d != dist[v]) continue;
      for (int a : adjacency_[v]) {
        const Arc& arc = arcs_[a];
        if (arc.residual <= 0) continue;
        const std::int64_t nd = d + arc.cost + potential[v] - potential[arc.to];
        if (nd < dist[arc.to]) {
          dist[arc.to] = nd;
          via[arc.to] = a;
          heap.emplace(nd, arc.to);
        }
      }
    }
    if (dist[t] == kUnreached) break;
    for (int v = 0; v < n; ++v) {
      if (dist[v] != kUnreached) potential[v] += dist[v];
    }
    std::int64_t push = limit - result.flow;
    for (int v = t; v != s; v = arcs_[via[v] ^ 1].to) {
      push = std::min(push, arcs_[via[v]].residual);
    }
    for (int v = t; v != s; v = arcs_[via[v] ^ 1].to) {
      arcs_[via[v]].residual -= push;
      arcs_[via[v] ^ 1].residual += push;
      result.cost += push * arcs_[via[v]].cost;
    }
    result.flow += push;
  }
  return result;
}

std::int64_t FlowNetwork::dinic_push(int v, int t, std::int64_t pushed,
                                     std::vector<int>& level,
                                     std::vector<std::size_t>& next) {
  if (v == t || pushed == 0) return pushed;
  for (std::size_t& i = next[v]; i < adjacency_[v].size(); ++i) {
    const int a = adjacency_[v][i];
    Arc& arc = arcs_[a];
    if (arc.residual <= 0 || level[arc.to] != level[v] + 1) continue;
    const std::int64_t got =
        dinic_push(arc.to, t, std::min(pushed, arc.residual), level, next);
    if (got > 0) {
      arc.residual -= got;
      arcs_[a ^ 1].residual += got;
      return got;
    }
  }
  return 0;
}

std::int64_t FlowNetwork::max_flow(int s, int t) {
  const int n = num_nodes();
  std::int64_t total = 0;
  std::vector<int> level(n);
  std::vector<std::size_t> next(n);
  while (true) {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> queue;
    level[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int a : adjacency_[v]) {
        if (arcs_[a].residual > 0 && level[arcs_[a].to] < 0) {
          level[arcs_[a].to] = level[v] + 1;
          queue.push(arcs_[a].to);
        }
      }
    }
    if (level[t] < 0) return total;
    std::fill(next.begin(), next.end(), 0);
    while (const std::int64_t pushed = dinic_push(
               s, t, std::numeric_limits<std::int64_t>::max(), level, next)) {
      total += pushed;
    }
  }
}

}  // namespace fpr
