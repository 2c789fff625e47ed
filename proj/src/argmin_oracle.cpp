#include "pffc/argmin_oracle.hpp"

#include <cmath>

namespace pffc {

Point lemma4_argmin_oracle(const ProblemInstance& problem,
                           const SolverParams& params,
                           const SolverState& state, const Point& x_next,
                           double grad_map_tol, int max_iters) {
  const double G = problem.constants.G;
  const double quad_weight = params.alpha + 2.0 * G * G * params.beta;
  const double modulus = params.eta + quad_weight;

  // constant part of the gradient: eta Q_t + s_t + beta sum (W+h) g
  Point constant = params.eta * state.drift;
  constant += state.cached.objective_subgradient;
  for (int i = 0; i < problem.m(); ++i) {
    const double weight =
        state.multipliers[i] + state.cached.constraint_values[i];
    constant.axpy(params.beta * weight,
                  state.cached.constraint_subgradients[i]);
  }

  auto gradient = [&](const Point& y) {
    Point g = constant;
    g.axpy(params.eta, y - x_next);
    g.axpy(quad_weight, y - state.y);
    return g;
  };

  // damped step: converges linearly but along a different path than the
  // single exact-step closed form
  const double step_size = 0.5 / modulus;
  Point y = project(*problem.auxiliary, state.y);
  for (int it = 0; it < max_iters; ++it) {
    Point trial = y;
    trial.axpy(-step_size, gradient(y));
    Point y_next = project(*problem.auxiliary, trial);
    const double grad_map = norm(y - y_next) / step_size;
    y = std::move(y_next);
    if (grad_map <= grad_map_tol) return y;
  }
  throw OracleFailureError("lemma4_argmin_oracle: did not converge");
}

}  // namespace pffc
