#include "pffc/schedule.hpp"

#include <cmath>

#include "pffc/errors.hpp"

namespace pffc {

SolverParams configure_parsel1(double epsilon, double delta) {
  using Kind = InvalidConstantsError::Kind;
  if (epsilon <= 0.0) {
    throw InvalidConstantsError(Kind::NonPositiveEpsilon,
                                "epsilon must be positive");
  }
  if (delta < 0.0) {
    throw InvalidConstantsError(Kind::NegativeBudget,
                                "delta must be nonnegative");
  }
  SolverParams p;
  p.eta = epsilon;
  p.alpha = 1.0 / epsilon;
  p.beta = 1.0 / epsilon;
  p.T = static_cast<int>(std::ceil(1.0 / (epsilon * epsilon)));
  p.delta = delta;
  return p;
}

SolverParams configure_parsel2(int T, const ProblemConstants& c) {
  using Kind = InvalidConstantsError::Kind;
  validate_constants(c);
  if (T < 1) {
    throw InvalidConstantsError(Kind::DegenerateConstants, "T must be >= 1");
  }
  if (c.L <= 0.0 || c.D <= 0.0) {
    throw InvalidConstantsError(Kind::DegenerateConstants,
                                "schedule needs L > 0 and D > 0");
  }
  if (c.m > 0 && c.G <= 0.0) {
    throw InvalidConstantsError(Kind::DegenerateConstants,
                                "schedule needs G > 0 when m > 0");
  }
  const double sqrt_t = std::sqrt(static_cast<double>(T));
  SolverParams p;
  p.T = T;
  p.alpha = c.L * sqrt_t / c.D;
  p.eta = c.L / std::sqrt(T * (c.D * c.D + 2.0 * c.delta));
  p.beta = c.m == 0 ? 1.0 : sqrt_t / (c.G * c.D);
  p.delta = c.delta;
  return p;
}

}  // namespace pffc
