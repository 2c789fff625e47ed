#ifndef PFFC_ORACLES_HPP_
#define PFFC_ORACLES_HPP_

#include <vector>

#include "pffc/point.hpp"

namespace pffc {

// One draw of the stochastic subgradient oracle at a point y: a subgradient
// sample s of the objective, one sample g_i per constraint, and the exact
// constraint values h(y).
struct SubgradientSample {
  Point objective_subgradient;
  std::vector<Point> constraint_subgradients;
  ConstraintVec constraint_values;
};

// Per-run oracle instrumentation. Confined to a single run; counters only
// ever increase.
struct OracleStats {
  long lmo_calls = 0;
  long subgradient_calls = 0;
  long projection_calls = 0;
  std::vector<double> measured_gaps;  // empirical LMO errors, where measured
  double lmo_seconds = 0.0;
  double subgradient_seconds = 0.0;
  double projection_seconds = 0.0;
};

}  // namespace pffc

#endif  // PFFC_ORACLES_HPP_
