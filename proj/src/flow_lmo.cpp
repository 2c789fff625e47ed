#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <queue>
#include <vector>

#include "pffc/network.hpp"

namespace pffc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Residual representation: arc 2e is edge e forward, arc 2e+1 is its
// reverse. residual[a] is the remaining capacity of arc a.
struct Residual {
  explicit Residual(const DagNetwork& net) : net(&net) {
    residual.resize(2 * net.num_edges());
    for (int e = 0; e < net.num_edges(); ++e) {
      residual[2 * e] = net.edge(e).capacity;
      residual[2 * e + 1] = 0.0;
    }
  }

  int arc_tail(int a) const {
    const auto& e = net->edge(a / 2);
    return (a % 2 == 0) ? e.tail : e.head;
  }
  int arc_head(int a) const {
    const auto& e = net->edge(a / 2);
    return (a % 2 == 0) ? e.head : e.tail;
  }

  void push(int a, double amount) {
    residual[a] -= amount;
    residual[a ^ 1] += amount;
  }

  double flow_on_edge(int e) const { return residual[2 * e + 1]; }

  const DagNetwork* net;
  std::vector<double> residual;
};

std::vector<std::vector<int>> arcs_by_tail(const Residual& r) {
  std::vector<std::vector<int>> out(r.net->num_nodes());
  for (int a = 0; a < static_cast<int>(r.residual.size()); ++a) {
    out[r.arc_tail(a)].push_back(a);
  }
  return out;
}

}  // namespace

double max_flow_value(const DagNetwork& net) {
  Residual res(net);
  const auto adjacency = arcs_by_tail(res);
  double total = 0.0;

  // Edmonds-Karp: BFS augmenting paths until none remain.
  for (;;) {
    std::vector<int> via_arc(net.num_nodes(), -1);
    std::vector<char> seen(net.num_nodes(), 0);
    std::deque<int> queue{net.source()};
    seen[net.source()] = 1;
    while (!queue.empty() && !seen[net.sink()]) {
      const int v = queue.front();
      queue.pop_front();
      for (int a : adjacency[v]) {
        const int w = res.arc_head(a);
        if (!seen[w] && res.residual[a] > 1e-12) {
          seen[w] = 1;
          via_arc[w] = a;
          queue.push_back(w);
        }
      }
    }
    if (!seen[net.sink()]) break;

    double bottleneck = kInf;
    for (int v = net.sink(); v != net.source(); v = res.arc_tail(via_arc[v])) {
      bottleneck = std::min(bottleneck, res.residual[via_arc[v]]);
    }
    for (int v = net.sink(); v != net.source(); v = res.arc_tail(via_arc[v])) {
      res.push(via_arc[v], bottleneck);
    }
    total += bottleneck;
  }
  return total;
}

Point dag_shortest_path_lmo(const DagNetwork& net, const Point& weights) {
  if (weights.size() != net.num_edges()) {
    throw ShapeMismatchError("dag_shortest_path_lmo: weight size mismatch");
  }
  std::vector<double> dist(net.num_nodes(), kInf);
  std::vector<int> via_edge(net.num_nodes(), -1);
  dist[net.source()] = 0.0;

  // In-edges are pre-sorted by (tail, edge id) and only strict improvements
  // replace the predecessor, so ties keep the smallest predecessor index.
  for (int v : net.topological_order()) {
    for (int e : net.in_edges(v)) {
      const int u = net.edge(e).tail;
      if (dist[u] == kInf) continue;
      const double candidate = dist[u] + weights[e];
      if (candidate < dist[v]) {
        dist[v] = candidate;
        via_edge[v] = e;
      }
    }
  }
  if (dist[net.sink()] == kInf) {
    throw NoPathError("no source-sink path exists");
  }

  Point flow = Point::zeros(vector_shape(net.num_edges()));
  for (int v = net.sink(); v != net.source();) {
    const int e = via_edge[v];
    flow[e] = net.demand();
    v = net.edge(e).tail;
  }
  return flow;
}

Point capacitated_flow_lmo(const DagNetwork& net, const Point& weights) {
  if (weights.size() != net.num_edges()) {
    throw ShapeMismatchError("capacitated_flow_lmo: weight size mismatch");
  }
  const int n = net.num_nodes();

  Residual res(net);
  const auto adjacency = arcs_by_tail(res);
  auto arc_cost = [&](int a) {
    return (a % 2 == 0) ? weights[a / 2] : -weights[a / 2];
  };

  // Initial potentials = shortest distances on the original DAG, which keep
  // every reduced cost nonnegative. Nodes unreachable from the source can
  // never appear on an augmenting path.
  std::vector<double> potential(n, kInf);
  potential[net.source()] = 0.0;
  for (int v : net.topological_order()) {
    for (int e : net.in_edges(v)) {
      const int u = net.edge(e).tail;
      if (potential[u] == kInf) continue;
      potential[v] = std::min(potential[v], potential[u] + weights[e]);
    }
  }

  double remaining = net.demand();
  const int augmentation_cap = 1000 * (net.num_edges() + 1);
  int rounds = 0;

  while (remaining > 1e-12) {
    if (++rounds > augmentation_cap) {
      throw OracleFailureError(
          "capacitated_flow_lmo: augmentation cap exceeded");
    }

    // Dijkstra on reduced costs.
    std::vector<double> dist(n, kInf);
    std::vector<int> via_arc(n, -1);
    std::vector<char> done(n, 0);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist[net.source()] = 0.0;
    heap.emplace(0.0, net.source());
    while (!heap.empty()) {
      const auto [d, v] = heap.top();
      heap.pop();
      if (done[v]) continue;
      done[v] = 1;
      for (int a : adjacency[v]) {
        if (res.residual[a] <= 1e-12) continue;
        const int w = res.arc_head(a);
        const double reduced = arc_cost(a) + potential[v] - potential[w];
        const double candidate = d + std::max(reduced, 0.0);
        if (candidate < dist[w]) {
          dist[w] = candidate;
          via_arc[w] = a;
          heap.emplace(candidate, w);
        }
      }
    }
    if (dist[net.sink()] == kInf) {
      throw InfeasibleError("capacities cannot route the demand");
    }

    double bottleneck = remaining;
    for (int v = net.sink(); v != net.source(); v = res.arc_tail(via_arc[v])) {
      bottleneck = std::min(bottleneck, res.residual[via_arc[v]]);
    }
    for (int v = net.sink(); v != net.source(); v = res.arc_tail(via_arc[v])) {
      res.push(via_arc[v], bottleneck);
    }
    remaining -= bottleneck;

    for (int v = 0; v < n; ++v) {
      if (dist[v] < kInf) potential[v] += dist[v];
    }
  }

  Point flow = Point::zeros(vector_shape(net.num_edges()));
  for (int e = 0; e < net.num_edges(); ++e) flow[e] = res.flow_on_edge(e);
  return flow;
}

}  // namespace pffc
