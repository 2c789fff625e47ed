#include "pffc/bounds.hpp"

#include <cmath>

#include "pffc/errors.hpp"

namespace pffc {

double theorem1_bound(const SolverParams& params, const ProblemConstants& c,
                      int T) {
  validate_params(params);
  const double L2 = c.L * c.L;
  const double D2 = c.D * c.D;
  const double noise = D2 + 2.0 * params.delta;
  return L2 / (2.0 * T * params.eta) + params.eta * noise / 2.0 +
         L2 / (2.0 * params.alpha) + params.alpha * D2 / (2.0 * T) +
         c.G * c.G * D2 * params.beta / T;
}

ViolationBoundTerms theorem2_terms(const ProblemConstants& c,
                                   std::optional<double> hstar_norm) {
  validate_constants(c);
  const double G = c.G, D = c.D, L = c.L;
  const double hstar = hstar_norm.value_or(G * D);
  ViolationBoundTerms terms;
  if (G == 0.0) {
    // every term carries a factor of G; with no functional constraints the
    // bound is identically zero (hstar <= G*D = 0)
    return terms;
  }
  if (L <= 0.0 || D <= 0.0) {
    throw InvalidConstantsError(
        InvalidConstantsError::Kind::DegenerateConstants,
        "theorem2_bound needs L > 0 and D > 0 when G > 0");
  }
  const double noise = D * D + 2.0 * c.delta;
  const double root_noise = std::sqrt(noise);

  terms.a2 = 55.0 * (G * G * G / L) * D * root_noise + 83.0 * G * G * D * D +
             8.0 * (G * G * G * G / (L * L)) * noise;
  terms.a1 = 16.0 * (G * G * G / L) * noise + 47.0 * G * G * D * root_noise;
  terms.a0 = 47.0 * G * L * D * D + 47.0 * G * L * D * root_noise +
             47.0 * G * G * D * D + 12.0 * G * G * noise +
             8.0 * G * G * D * root_noise +
             8.0 * (G * G * G / L) * D * root_noise +
             hstar * hstar * (47.0 + 8.0 * (G / L) * root_noise / D);
  return terms;
}

double theorem2_bound(const ProblemConstants& c, int T, double mu_norm,
                      std::optional<double> hstar_norm) {
  if (T < 1) {
    throw InvalidConstantsError(
        InvalidConstantsError::Kind::DegenerateConstants, "T must be >= 1");
  }
  if (mu_norm < 0.0) {
    throw SolverError("theorem2_bound: mu_norm must be nonnegative");
  }
  const auto terms = theorem2_terms(c, hstar_norm);
  return std::sqrt(terms.a0 + terms.a1 * mu_norm +
                   terms.a2 * mu_norm * mu_norm) /
         std::sqrt(static_cast<double>(T));
}

double theorem3_qbound(const SolverParams& params, const ProblemConstants& c,
                       int t, int T, double mu_norm,
                       std::optional<double> lambda_norm,
                       std::optional<double> hstar_norm,
                       QBoundMode mode) {
  validate_constants(c);
  if (t < 1 || T < 1) throw SolverError("theorem3_qbound: t, T must be >= 1");
  if (mu_norm < 0.0) {
    throw SolverError("theorem3_qbound: mu_norm must be nonnegative");
  }
  const double L = c.L, G = c.G, D = c.D;
  const double lambda = lambda_norm.value_or(L + G * mu_norm);
  const double hstar = hstar_norm.value_or(G * D);
  const double noise = D * D + 2.0 * c.delta;

  if (mode == QBoundMode::General) {
    validate_params(params);
    const double eta = params.eta, alpha = params.alpha, beta = params.beta;
    const double term_sqrt_t =
        std::sqrt(2.0 * mu_norm * mu_norm / (beta * eta) +
                  L * L / (alpha * eta) + noise);
    const double lam_mu = L + G * mu_norm;
    const double term_const =
        std::sqrt(2.0 * beta * hstar * hstar / eta +
                  2.0 * G * G * D * D * beta / eta + alpha * D * D / eta +
                  lam_mu * lam_mu / (eta * eta));
    return std::sqrt(static_cast<double>(t)) * term_sqrt_t + term_const +
           lambda / eta;
  }

  // tuned-schedule form B1 sqrt(t) + B2 sqrt(T)
  if (L <= 0.0 || D <= 0.0) {
    throw InvalidConstantsError(
        InvalidConstantsError::Kind::DegenerateConstants,
        "theorem3_qbound (tuned) needs L > 0 and D > 0");
  }
  const double root_noise = std::sqrt(noise);
  const double b1 = std::sqrt(
      (D / L) * (L + 2.0 * G * mu_norm * mu_norm) * root_noise + noise);
  // the h(x*) term carries 1/G; it vanishes with hstar = 0
  const double hstar_term =
      hstar == 0.0 ? 0.0 : 2.0 * hstar * hstar / (G * L * D);
  const double lam_mu = L + G * mu_norm;
  const double b2 =
      lambda / L * root_noise +
      std::sqrt(root_noise * (hstar_term + 2.0 * G * D / L + D) +
                lam_mu * lam_mu * noise / (L * L));
  return b1 * std::sqrt(static_cast<double>(t)) +
         b2 * std::sqrt(static_cast<double>(T));
}

}  // namespace pffc
