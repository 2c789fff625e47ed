#include "pffc/minflow.hpp"

#include <cmath>

namespace pffc {

bool formulation_has_constraint(MinFlowFormulation f) {
  return f == MinFlowFormulation::F3 || f == MinFlowFormulation::F4;
}

const char* formulation_name(MinFlowFormulation f) {
  switch (f) {
    case MinFlowFormulation::F1: return "F1";
    case MinFlowFormulation::F2: return "F2";
    case MinFlowFormulation::F3: return "F3";
    case MinFlowFormulation::F4: return "F4";
  }
  return "?";
}

MinFlowInstance build_minflow(std::shared_ptr<const DagNetwork> net,
                              MinFlowFormulation formulation) {
  if (!net) throw SolverError("build_minflow: null network");
  const Eigen::VectorXd k = net->capacities();
  Eigen::VectorXd a = (k / 10.0).array().exp();
  Eigen::VectorXd b = k / 10.0;
  Eigen::VectorXd c = k / 5.0;
  return build_minflow(std::move(net), std::move(a), std::move(b),
                       std::move(c), formulation);
}

MinFlowInstance build_minflow(std::shared_ptr<const DagNetwork> net,
                              Eigen::VectorXd a, Eigen::VectorXd b,
                              Eigen::VectorXd c,
                              MinFlowFormulation formulation) {
  if (!net) throw SolverError("build_minflow: null network");
  const int edges = net->num_edges();
  if (a.size() != edges || b.size() != edges || c.size() != edges) {
    throw ShapeMismatchError("build_minflow: coefficient size mismatch");
  }
  if (a.minCoeff() < 0.0 || b.minCoeff() < 0.0 || c.minCoeff() < 0.0) {
    throw SolverError("build_minflow: coefficients must be nonnegative");
  }
  MinFlowInstance inst;
  inst.net = std::move(net);
  inst.a = std::move(a);
  inst.b = std::move(b);
  inst.c = std::move(c);
  inst.formulation = formulation;
  return inst;
}

double minflow_value(const MinFlowInstance& inst, const Point& x) {
  if (x.size() != inst.net->num_edges()) {
    throw ShapeMismatchError("minflow_value: flow size mismatch");
  }
  double total = 0.0;
  for (int e = 0; e < x.size(); ++e) {
    total += std::max(inst.a[e] * x[e] + inst.b[e], inst.c[e]);
  }
  return total;
}

Point minflow_subgradient(const MinFlowInstance& inst, const Point& x) {
  if (x.size() != inst.net->num_edges()) {
    throw ShapeMismatchError("minflow_subgradient: flow size mismatch");
  }
  Point g = Point::zeros(vector_shape(x.size()));
  for (int e = 0; e < x.size(); ++e) {
    if (inst.a[e] * x[e] + inst.b[e] >= inst.c[e]) g[e] = inst.a[e];
  }
  return g;
}

double hcap_value(const MinFlowInstance& inst, const Point& x) {
  if (!formulation_has_constraint(inst.formulation)) {
    throw WrongFormulationError("hcap_value: formulation has no constraint");
  }
  if (x.size() != inst.net->num_edges()) {
    throw ShapeMismatchError("hcap_value: flow size mismatch");
  }
  double worst = -std::numeric_limits<double>::infinity();
  for (int e = 0; e < x.size(); ++e) {
    worst = std::max(worst, x[e] - inst.net->edge(e).capacity);
  }
  return worst;
}

Point hcap_subgradient(const MinFlowInstance& inst, const Point& x) {
  if (!formulation_has_constraint(inst.formulation)) {
    throw WrongFormulationError(
        "hcap_subgradient: formulation has no constraint");
  }
  if (x.size() != inst.net->num_edges()) {
    throw ShapeMismatchError("hcap_subgradient: flow size mismatch");
  }
  int argmax = 0;
  double best = x[0] - inst.net->edge(0).capacity;
  for (int e = 1; e < x.size(); ++e) {
    const double v = x[e] - inst.net->edge(e).capacity;
    if (v > best) {
      best = v;
      argmax = e;
    }
  }
  Point g = Point::zeros(vector_shape(x.size()));
  g[argmax] = 1.0;
  return g;
}

ProblemInstance make_minflow_problem(const MinFlowInstance& inst) {
  ProblemInstance problem;
  const auto net = inst.net;
  const int edges = net->num_edges();
  const Shape shape = vector_shape(edges);

  auto shared_inst = std::make_shared<MinFlowInstance>(inst);
  problem.objective_value = [shared_inst](const Point& x) {
    return minflow_value(*shared_inst, x);
  };
  problem.objective_subgradient = [shared_inst](const Point& x, Rng&) {
    return minflow_subgradient(*shared_inst, x);
  };

  const bool capacitated_set =
      !formulation_has_constraint(inst.formulation);
  if (capacitated_set) {
    problem.feasible = std::make_shared<CapacitatedFlowPolytope>(net);
  } else {
    problem.feasible = std::make_shared<FlowPolytope>(net);
    ConstraintOracle cap;
    cap.value = [shared_inst](const Point& x) {
      return hcap_value(*shared_inst, x);
    };
    cap.subgradient = [shared_inst](const Point& x, Rng&) {
      return hcap_subgradient(*shared_inst, x);
    };
    cap.norm_bound = 1.0;
    problem.constraints.push_back(std::move(cap));
  }

  const bool boxed = inst.formulation == MinFlowFormulation::F2 ||
                     inst.formulation == MinFlowFormulation::F4;
  if (boxed) {
    Eigen::VectorXd hi(edges);
    for (int e = 0; e < edges; ++e) {
      hi[e] = std::max(net->demand(), net->edge(e).capacity);
    }
    problem.auxiliary = std::make_shared<BoxSet>(
        shape, Eigen::VectorXd::Zero(edges), std::move(hi));
  } else {
    problem.auxiliary = std::make_shared<FullSpace>(shape);
  }

  problem.constants.L = inst.a.norm();
  problem.constants.m = problem.m();
  problem.constants.G = problem.m() == 0 ? 0.0 : 1.0;
  problem.constants.D = flow_diameter_bound(*net);
  problem.constants.delta = 0.0;

  // any feasible vertex works as the initial point
  Rng rng(0);
  LmoQuery origin{Point::zeros(shape), 0.0};
  problem.initial_point = problem.feasible->linear_minimizer(origin, rng);
  problem.reference_optimum = minflow_reference_optimum(inst);
  return problem;
}

double minflow_reference_optimum(const MinFlowInstance& inst) {
  // Rewrite each edge cost as constant + piecewise-linear slopes on split
  // arcs, then solve the resulting linear min-cost flow exactly. Parallel
  // arcs are expressed through one auxiliary node each.
  const DagNetwork& net = *inst.net;
  const int n0 = net.num_nodes();
  double constant = 0.0;
  std::vector<NetworkEdge> arcs;
  std::vector<double> costs;
  int next_node = n0;

  for (int e = 0; e < net.num_edges(); ++e) {
    const auto& ed = net.edge(e);
    const double k = ed.capacity;
    const double a = inst.a[e], b = inst.b[e], c = inst.c[e];
    if (a == 0.0) {
      constant += std::max(b, c);
      arcs.push_back({ed.tail, ed.head, k});
      costs.push_back(0.0);
      continue;
    }
    const double breakpoint = (c - b) / a;
    if (breakpoint <= 0.0) {
      constant += b;
      arcs.push_back({ed.tail, ed.head, k});
      costs.push_back(a);
    } else if (breakpoint >= k) {
      constant += c;
      arcs.push_back({ed.tail, ed.head, k});
      costs.push_back(0.0);
    } else {
      constant += c;
      arcs.push_back({ed.tail, ed.head, breakpoint});
      costs.push_back(0.0);
      const int mid = next_node++;
      arcs.push_back({ed.tail, mid, k - breakpoint});
      costs.push_back(a);
      arcs.push_back({mid, ed.head, k - breakpoint});
      costs.push_back(0.0);
    }
  }

  DagNetwork expanded(next_node, std::move(arcs), net.source(), net.sink(),
                      net.demand());
  Point weights(vector_shape(expanded.num_edges()),
                Eigen::Map<const Eigen::VectorXd>(costs.data(),
                                                  costs.size()));
  Point flow = capacitated_flow_lmo(expanded, weights);
  return constant + inner(weights, flow);
}

DagNetwork default_minflow_network() {
  std::vector<NetworkEdge> edges{
      {0, 1, 3.0}, {0, 2, 4.0}, {1, 2, 2.0}, {1, 3, 3.0}, {2, 3, 1.0},
      {2, 4, 4.0}, {3, 4, 2.0}, {3, 5, 3.0}, {4, 5, 5.0},
  };
  return DagNetwork(6, std::move(edges), 0, 5, 4.1);
}

}  // namespace pffc
