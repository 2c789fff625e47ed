#ifndef PFFC_NUCLEAR_HPP_
#define PFFC_NUCLEAR_HPP_

#include "pffc/sets.hpp"

namespace pffc {

double nuclear_norm(const Point& m);

// Ball { c in R^{rows x cols} : ||c||_* <= gamma }. The linear minimizer is
// rank-one: either from a full SVD (exact) or from seeded power iteration
// with a fixed iteration budget (inexact; the resulting error is measured
// a posteriori via measure_lmo_gap rather than certified a priori).
class NuclearBall : public FeasibleSet {
 public:
  NuclearBall(int rows, int cols, double gamma, int power_iters = 0);

  Shape shape() const override { return matrix_shape(rows_, cols_); }
  Point linear_minimizer(const LmoQuery& q, Rng& rng) const override;
  std::optional<double> exact_linear_min(const Point& v) const override;
  bool contains(const Point& p, double tol) const override;
  std::optional<Point> euclidean_projection(const Point& v) const override;
  // ||c - c'|| <= ||c||_* + ||c'||_* <= 2 gamma
  double diameter_bound() const override { return 2.0 * gamma_; }

  double gamma() const { return gamma_; }
  int power_iters() const { return power_iters_; }

 private:
  int rows_, cols_;
  double gamma_;
  int power_iters_;  // 0 = exact full-SVD oracle
};

// argmin over the ball of <c, z>; the minimizer is -gamma * u1 v1^T built
// from the top singular pair of z, with value -gamma * sigma1(z).
Point nuclear_lmo_exact(const NuclearBall& ball, const Point& z);

// Rank-one -gamma * u v^T from `power_iters` rounds of power iteration on
// z^T z, started from a seeded random unit vector.
Point nuclear_lmo_inexact(const NuclearBall& ball, const Point& z,
                          int power_iters, Rng& rng);

// Euclidean projection: soft-threshold the singular values by the exact
// water-filling level (piecewise-linear root on the sorted spectrum).
Point nuclear_projection(const NuclearBall& ball, const Point& z);

}  // namespace pffc

#endif  // PFFC_NUCLEAR_HPP_
