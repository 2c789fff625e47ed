#include "pffc/network.hpp"

#include <cmath>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace pffc {

DagNetwork::DagNetwork(int num_nodes, std::vector<NetworkEdge> edges,
                       int source, int sink, double demand)
    : num_nodes_(num_nodes),
      edges_(std::move(edges)),
      source_(source),
      sink_(sink),
      demand_(demand) {
  if (num_nodes_ < 2) throw ParseError("network needs at least two nodes");
  if (source_ < 0 || source_ >= num_nodes_ || sink_ < 0 ||
      sink_ >= num_nodes_ || source_ == sink_) {
    throw ParseError("invalid source/sink");
  }
  if (demand_ < 0.0) throw ParseError("demand must be nonnegative");

  in_edges_.resize(num_nodes_);
  out_edges_.resize(num_nodes_);
  for (int e = 0; e < num_edges(); ++e) {
    const auto& ed = edges_[e];
    if (ed.tail < 0 || ed.tail >= num_nodes_ || ed.head < 0 ||
        ed.head >= num_nodes_ || ed.tail == ed.head) {
      throw ParseError("invalid edge endpoints");
    }
    if (ed.capacity < 0.0) throw ParseError("edge capacity must be >= 0");
    for (int prev = 0; prev < e; ++prev) {
      if (edges_[prev].tail == ed.tail && edges_[prev].head == ed.head) {
        throw ParseError("duplicate edge");
      }
    }
    in_edges_[ed.head].push_back(e);
    out_edges_[ed.tail].push_back(e);
  }
  for (auto& ins : in_edges_) {
    std::sort(ins.begin(), ins.end(), [&](int a, int b) {
      if (edges_[a].tail != edges_[b].tail)
        return edges_[a].tail < edges_[b].tail;
      return a < b;
    });
  }

  // Kahn's algorithm; leftover nodes mean a cycle.
  std::vector<int> indeg(num_nodes_, 0);
  for (const auto& ed : edges_) ++indeg[ed.head];
  std::deque<int> ready;
  for (int v = 0; v < num_nodes_; ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    const int v = ready.front();
    ready.pop_front();
    topo_order_.push_back(v);
    for (int e : out_edges_[v]) {
      if (--indeg[edges_[e].head] == 0) ready.push_back(edges_[e].head);
    }
  }
  if (static_cast<int>(topo_order_.size()) != num_nodes_) {
    throw ParseError("graph is not acyclic");
  }
}

DagNetwork DagNetwork::parse(std::istream& in) {
  std::string line;
  int nodes = -1, source = -1, sink = -1;
  double demand = -1.0;
  bool have_header = false;
  std::vector<NetworkEdge> edges;

  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank/comment line

    if (!have_header) {
      if (first != "nodes") throw ParseError("expected header line");
      std::string kw_source, kw_sink, kw_demand;
      if (!(ls >> nodes >> kw_source >> source >> kw_sink >> sink >>
            kw_demand >> demand) ||
          kw_source != "source" || kw_sink != "sink" || kw_demand != "demand") {
        throw ParseError("malformed header line");
      }
      have_header = true;
      continue;
    }

    NetworkEdge e;
    std::istringstream es(line);
    if (!(es >> e.tail >> e.head >> e.capacity)) {
      throw ParseError("malformed edge line: " + line);
    }
    edges.push_back(e);
  }
  if (!have_header) throw ParseError("missing header line");
  return DagNetwork(nodes, std::move(edges), source, sink, demand);
}

void DagNetwork::write(std::ostream& out) const {
  out << "nodes " << num_nodes_ << " source " << source_ << " sink " << sink_
      << " demand ";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", demand_);
  out << buf << "\n";
  for (const auto& e : edges_) {
    std::snprintf(buf, sizeof buf, "%.17g", e.capacity);
    out << e.tail << " " << e.head << " " << buf << "\n";
  }
}

Eigen::VectorXd DagNetwork::capacities() const {
  Eigen::VectorXd k(num_edges());
  for (int e = 0; e < num_edges(); ++e) k[e] = edges_[e].capacity;
  return k;
}

double DagNetwork::node_supply(int node) const {
  if (node == source_) return demand_;
  if (node == sink_) return -demand_;
  return 0.0;
}

double DagNetwork::conservation_residual(const Point& flow) const {
  double worst = 0.0;
  std::vector<double> net_out(num_nodes_, 0.0);
  for (int e = 0; e < num_edges(); ++e) {
    net_out[edges_[e].tail] += flow[e];
    net_out[edges_[e].head] -= flow[e];
  }
  for (int v = 0; v < num_nodes_; ++v) {
    worst = std::max(worst, std::abs(net_out[v] - node_supply(v)));
  }
  return worst;
}

double flow_diameter_bound(const DagNetwork& net) {
  double sumsq = 0.0;
  for (const auto& e : net.edges()) {
    const double hi = std::max(net.demand(), e.capacity);
    sumsq += hi * hi;
  }
  return 2.0 * std::sqrt(sumsq);
}

// ---------------------------------------------------------------------------
// FlowPolytope / CapacitatedFlowPolytope

FlowPolytope::FlowPolytope(std::shared_ptr<const DagNetwork> net)
    : net_(std::move(net)) {
  if (!net_) throw SolverError("FlowPolytope: null network");
}

Shape FlowPolytope::shape() const { return vector_shape(net_->num_edges()); }

Point FlowPolytope::linear_minimizer(const LmoQuery& q, Rng&) const {
  return dag_shortest_path_lmo(*net_, q.direction);
}

std::optional<double> FlowPolytope::exact_linear_min(const Point& v) const {
  return inner(dag_shortest_path_lmo(*net_, v), v);
}

bool FlowPolytope::contains(const Point& p, double tol) const {
  if (!(p.shape() == shape())) return false;
  if (p.flat().minCoeff() < -tol) return false;
  return net_->conservation_residual(p) <= tol;
}

double FlowPolytope::diameter_bound() const {
  return flow_diameter_bound(*net_);
}

CapacitatedFlowPolytope::CapacitatedFlowPolytope(
    std::shared_ptr<const DagNetwork> net)
    : FlowPolytope(std::move(net)) {
  if (max_flow_value(*net_) < net_->demand() - 1e-9) {
    throw InfeasibleError("capacities cannot route the demand");
  }
}

Point CapacitatedFlowPolytope::linear_minimizer(const LmoQuery& q,
                                                Rng&) const {
  return capacitated_flow_lmo(*net_, q.direction);
}

std::optional<double> CapacitatedFlowPolytope::exact_linear_min(
    const Point& v) const {
  return inner(capacitated_flow_lmo(*net_, v), v);
}

bool CapacitatedFlowPolytope::contains(const Point& p, double tol) const {
  if (!FlowPolytope::contains(p, tol)) return false;
  for (int e = 0; e < net_->num_edges(); ++e) {
    if (p[e] > net_->edge(e).capacity + tol) return false;
  }
  return true;
}

}  // namespace pffc
