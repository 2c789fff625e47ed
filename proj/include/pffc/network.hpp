#ifndef PFFC_NETWORK_HPP_
#define PFFC_NETWORK_HPP_

#include <iosfwd>
#include <memory>
#include <vector>

#include "pffc/sets.hpp"

namespace pffc {

struct NetworkEdge {
  int tail = 0;
  int head = 0;
  double capacity = 0.0;
};

// Directed acyclic graph with a single source/sink pair and a fixed demand.
// Edge order is the construction (file) order; every flow vector indexes
// edges identically.
class DagNetwork {
 public:
  DagNetwork(int num_nodes, std::vector<NetworkEdge> edges, int source,
             int sink, double demand);

  // Text format: optional '#' comment lines, a header line
  //   nodes <n> source <s> sink <t> demand <d>
  // then one edge per line as `tail head capacity` (0-based node ids).
  static DagNetwork parse(std::istream& in);
  void write(std::ostream& out) const;

  int num_nodes() const { return num_nodes_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<NetworkEdge>& edges() const { return edges_; }
  const NetworkEdge& edge(int e) const { return edges_[e]; }
  int source() const { return source_; }
  int sink() const { return sink_; }
  double demand() const { return demand_; }
  const std::vector<int>& topological_order() const { return topo_order_; }
  // in-edge ids of a node, sorted by (tail index, edge index)
  const std::vector<int>& in_edges(int node) const { return in_edges_[node]; }
  const std::vector<int>& out_edges(int node) const {
    return out_edges_[node];
  }

  Eigen::VectorXd capacities() const;
  // net supply r_i: +demand at the source, -demand at the sink, else 0
  double node_supply(int node) const;

  // max |sum_out - sum_in - r_i| over nodes for a candidate edge flow
  double conservation_residual(const Point& flow) const;

 private:
  int num_nodes_;
  std::vector<NetworkEdge> edges_;
  int source_, sink_;
  double demand_;
  std::vector<int> topo_order_;
  std::vector<std::vector<int>> in_edges_, out_edges_;
};

// Value of a maximum s-t flow under the edge capacities (augmenting paths).
double max_flow_value(const DagNetwork& net);

// d times the indicator flow of a minimum-weight source-sink path, by a
// single dynamic-programming pass in topological order. Negative weights are
// fine on a DAG. Ties pick the smallest predecessor node index.
Point dag_shortest_path_lmo(const DagNetwork& net, const Point& weights);

// Exact linear minimum over the capacitated flow polytope via successive
// shortest paths with node potentials (initial potentials from the DAG pass,
// so negative weights are handled).
Point capacitated_flow_lmo(const DagNetwork& net, const Point& weights);

// Flows satisfying conservation only (no capacities). Vertices are path
// flows, so the LMO is the shortest-path oracle.
class FlowPolytope : public FeasibleSet {
 public:
  explicit FlowPolytope(std::shared_ptr<const DagNetwork> net);

  Shape shape() const override;
  Point linear_minimizer(const LmoQuery& q, Rng& rng) const override;
  std::optional<double> exact_linear_min(const Point& v) const override;
  bool contains(const Point& p, double tol) const override;
  double diameter_bound() const override;

  const DagNetwork& network() const { return *net_; }

 protected:
  std::shared_ptr<const DagNetwork> net_;
};

// Flows satisfying conservation and the per-edge capacities. Construction
// checks max-flow feasibility of the demand and throws InfeasibleError.
class CapacitatedFlowPolytope : public FlowPolytope {
 public:
  explicit CapacitatedFlowPolytope(std::shared_ptr<const DagNetwork> net);

  Point linear_minimizer(const LmoQuery& q, Rng& rng) const override;
  std::optional<double> exact_linear_min(const Point& v) const override;
  bool contains(const Point& p, double tol) const override;
};

// Conservative diameter bound shared by both polytopes: each coordinate lies
// in [0, max{d, k_e}].
double flow_diameter_bound(const DagNetwork& net);

}  // namespace pffc

#endif  // PFFC_NETWORK_HPP_
