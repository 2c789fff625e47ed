#ifndef PFFC_PGD_HPP_
#define PFFC_PGD_HPP_

#include "pffc/solver.hpp"

namespace pffc {

// Projected subgradient descent baseline. Requires the feasible set to
// expose an exact Euclidean projection.
struct PgdParams {
  enum class StepRule {
    ConstantOverSqrtT,  // step = c / sqrt(T)
    DecayingOverSqrtT,  // step_t = c / sqrt(t)
  };
  int T = 1;
  StepRule rule = StepRule::DecayingOverSqrtT;
  // step constant; negative picks the classical D/L, zero freezes the
  // iterates
  double c = -1.0;
};

RunReport pgd_run(const ProblemInstance& problem, const PgdParams& params,
                  std::uint64_t seed, const RunOptions& options = {});

}  // namespace pffc

#endif  // PFFC_PGD_HPP_
