#ifndef PFFC_SCHEDULE_HPP_
#define PFFC_SCHEDULE_HPP_

#include "pffc/constants.hpp"

namespace pffc {

// Constant-free schedule: eta = eps, alpha = beta = 1/eps, T = ceil(1/eps^2).
SolverParams configure_parsel1(double epsilon, double delta = 0.0);

// Tuned schedule: alpha = L sqrt(T)/D, eta = L/sqrt(T (D^2 + 2 delta)),
// beta = sqrt(T)/(G D). With m = 0 the beta machinery is inert and beta is
// pinned to 1. Throws on L = 0 or D = 0 (or G = 0 with m > 0).
SolverParams configure_parsel2(int T, const ProblemConstants& c);

}  // namespace pffc

#endif  // PFFC_SCHEDULE_HPP_
