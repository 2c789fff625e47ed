#include "pffc/constants.hpp"

#include "pffc/errors.hpp"

namespace pffc {

void validate_constants(const ProblemConstants& c) {
  using Kind = InvalidConstantsError::Kind;
  if (c.D < 0.0) {
    throw InvalidConstantsError(Kind::NonPositiveDiameter,
                                "diameter bound D must be nonnegative");
  }
  if (c.delta < 0.0) {
    throw InvalidConstantsError(Kind::NegativeBudget,
                                "LMO budget delta must be nonnegative");
  }
  if (c.L < 0.0 || c.G < 0.0) {
    throw InvalidConstantsError(Kind::NegativeBound,
                                "subgradient bounds L, G must be nonnegative");
  }
  if (c.m < 0) {
    throw InvalidConstantsError(Kind::NegativeBound,
                                "constraint count m must be nonnegative");
  }
  if (c.m == 0 && c.G != 0.0) {
    throw InvalidConstantsError(Kind::InconsistentG,
                                "m = 0 requires G = 0");
  }
}

void validate_params(const SolverParams& p) {
  using Kind = InvalidConstantsError::Kind;
  if (p.T < 1) {
    throw InvalidConstantsError(Kind::DegenerateConstants, "T must be >= 1");
  }
  if (p.eta <= 0.0 || p.alpha <= 0.0 || p.beta <= 0.0) {
    throw InvalidConstantsError(Kind::DegenerateConstants,
                                "eta, alpha, beta must be positive");
  }
  if (p.delta < 0.0) {
    throw InvalidConstantsError(Kind::NegativeBudget,
                                "delta must be nonnegative");
  }
}

}  // namespace pffc
