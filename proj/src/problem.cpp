#include "pffc/problem.hpp"

namespace pffc {

void ProblemInstance::validate() const {
  validate_constants(constants);
  if (constants.m != m()) {
    throw SolverError("constants.m does not match the constraint list");
  }
  if (!objective_value || !objective_subgradient) {
    throw SolverError("objective oracles are required");
  }
  if (!feasible || !auxiliary) {
    throw SolverError("feasible and auxiliary sets are required");
  }
  if (!(initial_point.shape() == feasible->shape()) ||
      !(initial_point.shape() == auxiliary->shape())) {
    throw ShapeMismatchError("initial point shape does not match the sets");
  }
  if (!feasible->contains(initial_point, 1e-8)) {
    throw SolverError("initial point is not feasible");
  }
  for (const auto& c : constraints) {
    if (!c.value || !c.subgradient) {
      throw SolverError("constraint oracles must supply value and subgradient");
    }
  }
}

SubgradientSample sample_subgradients(const ProblemInstance& problem,
                                      const Point& y, Rng& rng) {
  SubgradientSample sample;
  sample.objective_subgradient = problem.objective_subgradient(y, rng);
  sample.constraint_subgradients.reserve(problem.constraints.size());
  Eigen::VectorXd h(problem.m());
  for (int i = 0; i < problem.m(); ++i) {
    sample.constraint_subgradients.push_back(
        problem.constraints[i].subgradient(y, rng));
    h[i] = problem.constraints[i].value(y);
  }
  sample.constraint_values = ConstraintVec(std::move(h));
  return sample;
}

ConstraintVec constraint_values(const ProblemInstance& problem,
                                const Point& y) {
  Eigen::VectorXd h(problem.m());
  for (int i = 0; i < problem.m(); ++i) h[i] = problem.constraints[i].value(y);
  return ConstraintVec(std::move(h));
}

}  // namespace pffc
