#ifndef PFFC_MINFLOW_HPP_
#define PFFC_MINFLOW_HPP_

#include <memory>

#include "pffc/network.hpp"
#include "pffc/problem.hpp"

namespace pffc {

// The four ways of splitting the capacitated min-cost flow problem between
// the feasible set, the auxiliary set, and a functional constraint:
//   F1: X = capacitated polytope, Y = full space,   no h
//   F2: X = capacitated polytope, Y = edge box,     no h
//   F3: X = conservation polytope, Y = full space,  h = capacity excess
//   F4: F3 with the edge box as Y
enum class MinFlowFormulation { F1, F2, F3, F4 };

bool formulation_has_constraint(MinFlowFormulation f);
const char* formulation_name(MinFlowFormulation f);

// Piecewise-linear routing costs f(x) = sum_e max{a_e x_e + b_e, c_e}.
struct MinFlowInstance {
  std::shared_ptr<const DagNetwork> net;
  Eigen::VectorXd a, b, c;
  MinFlowFormulation formulation = MinFlowFormulation::F1;
};

// Default coefficient rule a = exp(k/10), b = k/10, c = k/5.
MinFlowInstance build_minflow(std::shared_ptr<const DagNetwork> net,
                              MinFlowFormulation formulation);
MinFlowInstance build_minflow(std::shared_ptr<const DagNetwork> net,
                              Eigen::VectorXd a, Eigen::VectorXd b,
                              Eigen::VectorXd c,
                              MinFlowFormulation formulation);

double minflow_value(const MinFlowInstance& inst, const Point& x);
// entry a_e where the affine branch is active (ties take the slope), else 0
Point minflow_subgradient(const MinFlowInstance& inst, const Point& x);

// capacity excess max_e (x_e - k_e); only meaningful for F3/F4
double hcap_value(const MinFlowInstance& inst, const Point& x);
// basis vector of the argmax edge, lowest index on ties; norm 1
Point hcap_subgradient(const MinFlowInstance& inst, const Point& x);

// Wires the formulation to sets, oracles and constants (L = ||a||_2, G = 1
// for F3/F4, D from the shared flow diameter bound). The initial point is
// the cheapest-path vertex for the zero direction.
ProblemInstance make_minflow_problem(const MinFlowInstance& inst);

// Exact optimum of the capacitated problem. Each piecewise-linear edge cost
// splits into at most two linear arcs (an epigraph reformulation), and the
// resulting linear min-cost flow is solved exactly.
double minflow_reference_optimum(const MinFlowInstance& inst);

// The committed 6-node, 9-edge instance used by the experiments.
DagNetwork default_minflow_network();

}  // namespace pffc

#endif  // PFFC_MINFLOW_HPP_
