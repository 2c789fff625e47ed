#ifndef PFFC_PROBLEM_HPP_
#define PFFC_PROBLEM_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "pffc/constants.hpp"
#include "pffc/oracles.hpp"
#include "pffc/sets.hpp"

namespace pffc {

// Value/subgradient pair for one functional constraint h_i. `norm_bound` is
// the deterministic bound G_i where the builder knows it.
struct ConstraintOracle {
  std::function<double(const Point&)> value;
  std::function<Point(const Point&, Rng&)> subgradient;
  double norm_bound = 0.0;
};

// Immutable description of one problem: objective oracles, m constraint
// oracles, the feasible-set LMO, the auxiliary-set projector, the known
// constants, and a feasible initial point.
struct ProblemInstance {
  std::function<double(const Point&)> objective_value;
  std::function<Point(const Point&, Rng&)> objective_subgradient;
  std::vector<ConstraintOracle> constraints;
  std::shared_ptr<const FeasibleSet> feasible;
  std::shared_ptr<const AuxiliarySet> auxiliary;
  ProblemConstants constants;
  Point initial_point;
  // optimal value where known analytically or from a reference solve
  std::optional<double> reference_optimum;

  int m() const { return static_cast<int>(constraints.size()); }
  void validate() const;
};

// Draws s and g_1..g_m at y and evaluates h(y).
SubgradientSample sample_subgradients(const ProblemInstance& problem,
                                      const Point& y, Rng& rng);

ConstraintVec constraint_values(const ProblemInstance& problem,
                                const Point& y);

}  // namespace pffc

#endif  // PFFC_PROBLEM_HPP_
