#ifndef PFFC_CONSTANTS_HPP_
#define PFFC_CONSTANTS_HPP_

namespace pffc {

// Known problem constants: L bounds the objective subgradient second moment,
// G bounds the aggregate constraint subgradient norm (sqrt(sum G_i^2) <= G),
// D bounds the diameter of the feasible set, m counts the functional
// constraints, and delta is the linear-minimization inexactness budget.
struct ProblemConstants {
  double L = 0.0;
  double G = 0.0;
  double D = 0.0;
  int m = 0;
  double delta = 0.0;
};

// Throws InvalidConstantsError when the invariants fail. A problem with no
// functional constraints (m = 0) must carry G = 0.
void validate_constants(const ProblemConstants& c);

// Algorithm parameters: iteration count and the three positive step weights,
// plus the LMO budget passed through to inexact oracles.
struct SolverParams {
  int T = 1;
  double eta = 1.0;
  double alpha = 1.0;
  double beta = 1.0;
  double delta = 0.0;
};

void validate_params(const SolverParams& p);

}  // namespace pffc

#endif  // PFFC_CONSTANTS_HPP_
