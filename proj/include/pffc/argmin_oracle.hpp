#ifndef PFFC_ARGMIN_ORACLE_HPP_
#define PFFC_ARGMIN_ORACLE_HPP_

#include "pffc/solver.hpp"

namespace pffc {

// Numerically minimizes the strongly convex per-iteration objective
//   eta <Q_t, y - x_next> + <s_t, y - y_t>
//     + beta sum_i (W_{i,t} + h_i(y_t)) l_{i,t}(y)
//     + eta/2 ||y - x_next||^2 + (alpha + 2 G^2 beta)/2 ||y - y_t||^2
// over the auxiliary set by projected gradient descent with a deliberately
// damped step (so the iteration path differs from the closed form it
// validates). Intended for small dimensions as an independent check of
// step(); stops when the gradient-map norm falls below grad_map_tol.
Point lemma4_argmin_oracle(const ProblemInstance& problem,
                           const SolverParams& params,
                           const SolverState& state, const Point& x_next,
                           double grad_map_tol = 1e-10,
                           int max_iters = 100000);

}  // namespace pffc

#endif  // PFFC_ARGMIN_ORACLE_HPP_
