#ifndef PFFC_BOUNDS_HPP_
#define PFFC_BOUNDS_HPP_

#include <optional>

#include "pffc/constants.hpp"

namespace pffc {

// Expected objective-gap bound:
//   L^2/(2 T eta) + eta (D^2 + 2 delta)/2 + L^2/(2 alpha) + alpha D^2/(2 T)
//     + G^2 D^2 beta / T.
// Under the tuned schedule this collapses to
//   (L sqrt(D^2 + 2 delta) + L D + G D) / sqrt(T).
double theorem1_bound(const SolverParams& params, const ProblemConstants& c,
                      int T);

// The three constraint-violation constants; the bound is
//   sqrt(A0 + A1 ||mu||_2 + A2 ||mu||_2^2) / sqrt(T).
struct ViolationBoundTerms {
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
};

// hstar_norm is ||h(x*)||_2; defaults to the worst case G*D. mu_norm is the
// Lagrange-multiplier norm, supplied by the caller (it is existential, not
// computable here).
ViolationBoundTerms theorem2_terms(const ProblemConstants& c,
                                   std::optional<double> hstar_norm = {});
double theorem2_bound(const ProblemConstants& c, int T, double mu_norm,
                      std::optional<double> hstar_norm = {});

enum class QBoundMode {
  General,  // evaluate the generic bound with the supplied parameters
  ParSel2,  // evaluate B1 sqrt(t) + B2 sqrt(T) for the tuned schedule
};

// Upper bound on E||Q_t||. lambda_norm defaults to L + G * mu_norm and
// hstar_norm to G*D.
double theorem3_qbound(const SolverParams& params, const ProblemConstants& c,
                       int t, int T, double mu_norm,
                       std::optional<double> lambda_norm = {},
                       std::optional<double> hstar_norm = {},
                       QBoundMode mode = QBoundMode::General);

}  // namespace pffc

#endif  // PFFC_BOUNDS_HPP_
