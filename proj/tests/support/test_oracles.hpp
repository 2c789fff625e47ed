// Independent brute-force oracles used by the tests. Everything here stays
// deliberately naive and separate from the library implementation paths it
// checks.
#ifndef PFFC_TESTS_SUPPORT_TEST_ORACLES_HPP_
#define PFFC_TESTS_SUPPORT_TEST_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "pffc/network.hpp"
#include "pffc/point.hpp"
#include "pffc/rng.hpp"

namespace pffc::testing {

// Elementwise-product sum, scalar loops only.
inline double naive_inner(const Point& a, const Point& b) {
  double total = 0.0;
  for (int i = 0; i < a.size(); ++i) total += a[i] * b[i];
  return total;
}

// Random matrix with nuclear norm at most gamma: gaussian matrix rescaled
// to a uniformly drawn fraction of the radius.
inline Point random_nuclear_ball_point(int rows, int cols, double gamma,
                                       Rng& rng) {
  Eigen::MatrixXd m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) m(i, j) = rng.normal();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const double nn = svd.singularValues().sum();
  if (nn > 0.0) m *= gamma * rng.uniform() / nn;
  return Point::from_matrix(m);
}

// All simple source-sink paths as edge-id lists (DFS; intended for tiny
// DAGs).
inline void enumerate_paths_rec(const DagNetwork& net, int node,
                                std::vector<int>& stack,
                                std::vector<std::vector<int>>& out) {
  if (node == net.sink()) {
    out.push_back(stack);
    return;
  }
  for (int e : net.out_edges(node)) {
    stack.push_back(e);
    enumerate_paths_rec(net, net.edge(e).head, stack, out);
    stack.pop_back();
  }
}

inline std::vector<std::vector<int>> enumerate_paths(const DagNetwork& net) {
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  enumerate_paths_rec(net, net.source(), stack, out);
  return out;
}

inline double path_cost(const std::vector<int>& path, const Point& weights) {
  double cost = 0.0;
  for (int e : path) cost += weights[e];
  return cost;
}

// Exact minimum of <w, x> over { x : N x = r, 0 <= x <= k } by enumerating
// basic solutions: every vertex has some column subset basic and the rest
// pinned at a bound. Exponential, fine for <= 12 edges.
inline double lp_vertex_enumeration_min(const DagNetwork& net,
                                        const Point& weights) {
  const int E = net.num_edges();
  const int V = net.num_nodes();
  Eigen::MatrixXd incidence = Eigen::MatrixXd::Zero(V, E);
  Eigen::VectorXd supply(V);
  for (int e = 0; e < E; ++e) {
    incidence(net.edge(e).tail, e) += 1.0;
    incidence(net.edge(e).head, e) -= 1.0;
  }
  for (int v = 0; v < V; ++v) supply[v] = net.node_supply(v);
  const Eigen::VectorXd caps = net.capacities();

  Eigen::FullPivLU<Eigen::MatrixXd> full_lu(incidence);
  const int rank = static_cast<int>(full_lu.rank());

  double best = std::numeric_limits<double>::infinity();

  std::vector<int> basis(rank);
  std::vector<char> in_basis(E, 0);
  // iterate over all column subsets of size `rank`
  std::vector<int> idx(rank);
  std::iota(idx.begin(), idx.end(), 0);
  auto advance = [&]() {
    int i = rank - 1;
    while (i >= 0 && idx[i] == E - rank + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < rank; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };

  const int nonbasic_count = E - rank;
  do {
    std::fill(in_basis.begin(), in_basis.end(), 0);
    for (int i = 0; i < rank; ++i) in_basis[idx[i]] = 1;
    std::vector<int> nonbasic;
    for (int e = 0; e < E; ++e) {
      if (!in_basis[e]) nonbasic.push_back(e);
    }

    Eigen::MatrixXd basis_cols(V, rank);
    for (int i = 0; i < rank; ++i) basis_cols.col(i) = incidence.col(idx[i]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(basis_cols);
    if (lu.rank() < rank) continue;

    for (long mask = 0; mask < (1L << nonbasic_count); ++mask) {
      Eigen::VectorXd rhs = supply;
      for (int j = 0; j < nonbasic_count; ++j) {
        if (mask & (1L << j)) {
          rhs -= incidence.col(nonbasic[j]) * caps[nonbasic[j]];
        }
      }
      Eigen::VectorXd basic = lu.solve(rhs);
      if ((basis_cols * basic - rhs).norm() > 1e-7) continue;  // inconsistent

      bool feasible = true;
      for (int i = 0; i < rank && feasible; ++i) {
        if (basic[i] < -1e-9 || basic[i] > caps[idx[i]] + 1e-9) {
          feasible = false;
        }
      }
      if (!feasible) continue;

      double cost = 0.0;
      for (int i = 0; i < rank; ++i) cost += weights[idx[i]] * basic[i];
      for (int j = 0; j < nonbasic_count; ++j) {
        if (mask & (1L << j)) cost += weights[nonbasic[j]] * caps[nonbasic[j]];
      }
      best = std::min(best, cost);
    }
  } while (advance());

  return best;
}

// Random connected-ish DAG on a fixed node count: edges only go from lower
// to higher label, a random source-sink path is forced in first.
inline DagNetwork random_dag(int nodes, int extra_edges, double cap_lo,
                             double cap_hi, double demand, Rng& rng) {
  std::vector<NetworkEdge> edges;
  auto has_edge = [&](int a, int b) {
    for (const auto& e : edges) {
      if (e.tail == a && e.head == b) return true;
    }
    return false;
  };
  // forced path through a random subset of intermediate nodes
  std::vector<int> path{0};
  for (int v = 1; v + 1 < nodes; ++v) {
    if (rng.uniform() < 0.7) path.push_back(v);
  }
  path.push_back(nodes - 1);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    edges.push_back({path[i], path[i + 1], rng.uniform(cap_lo, cap_hi)});
  }
  int attempts = 0;
  while (static_cast<int>(edges.size()) < extra_edges + static_cast<int>(path.size()) - 1 &&
         attempts < 200) {
    ++attempts;
    int a = static_cast<int>(rng.uniform_index(nodes));
    int b = static_cast<int>(rng.uniform_index(nodes));
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (has_edge(a, b)) continue;
    edges.push_back({a, b, rng.uniform(cap_lo, cap_hi)});
  }
  return DagNetwork(nodes, std::move(edges), 0, nodes - 1, demand);
}

}  // namespace pffc::testing

#endif  // PFFC_TESTS_SUPPORT_TEST_ORACLES_HPP_
