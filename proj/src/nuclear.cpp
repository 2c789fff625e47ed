#include "pffc/nuclear.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace pffc {

namespace {

Eigen::JacobiSVD<Eigen::MatrixXd> full_svd(const Point& z) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      z.as_matrix(), Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd;
}

}  // namespace

double nuclear_norm(const Point& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m.as_matrix());
  return svd.singularValues().sum();
}

NuclearBall::NuclearBall(int rows, int cols, double gamma, int power_iters)
    : rows_(rows), cols_(cols), gamma_(gamma), power_iters_(power_iters) {
  if (rows <= 0 || cols <= 0) {
    throw ShapeMismatchError("NuclearBall: dimensions must be positive");
  }
  if (gamma < 0.0) throw SolverError("NuclearBall: gamma must be nonnegative");
  if (power_iters < 0) {
    throw SolverError("NuclearBall: power_iters must be nonnegative");
  }
}

Point NuclearBall::linear_minimizer(const LmoQuery& q, Rng& rng) const {
  if (power_iters_ > 0) {
    return nuclear_lmo_inexact(*this, q.direction, power_iters_, rng);
  }
  return nuclear_lmo_exact(*this, q.direction);
}

std::optional<double> NuclearBall::exact_linear_min(const Point& v) const {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(v.as_matrix());
  const double sigma1 =
      svd.singularValues().size() > 0 ? svd.singularValues()[0] : 0.0;
  return -gamma_ * sigma1;
}

bool NuclearBall::contains(const Point& p, double tol) const {
  if (!(p.shape() == shape())) return false;
  return nuclear_norm(p) <= gamma_ + tol;
}

std::optional<Point> NuclearBall::euclidean_projection(const Point& v) const {
  return nuclear_projection(*this, v);
}

Point nuclear_lmo_exact(const NuclearBall& ball, const Point& z) {
  if (!(z.shape() == ball.shape())) {
    throw ShapeMismatchError("nuclear_lmo_exact: shape mismatch");
  }
  const double gamma = ball.gamma();
  if (gamma == 0.0 || z.flat().isZero(0.0)) {
    // every ball point ties (or the ball is {0}); return the zero matrix
    return Point::zeros(ball.shape());
  }
  auto svd = full_svd(z);
  if (svd.singularValues().size() == 0 || svd.singularValues()[0] == 0.0) {
    return Point::zeros(ball.shape());
  }
  Eigen::MatrixXd c =
      -gamma * svd.matrixU().col(0) * svd.matrixV().col(0).transpose();
  return Point::from_matrix(c);
}

Point nuclear_lmo_inexact(const NuclearBall& ball, const Point& z,
                          int power_iters, Rng& rng) {
  if (!(z.shape() == ball.shape())) {
    throw ShapeMismatchError("nuclear_lmo_inexact: shape mismatch");
  }
  if (power_iters < 1) {
    throw SolverError("nuclear_lmo_inexact: power_iters must be >= 1");
  }
  const double gamma = ball.gamma();
  if (gamma == 0.0) return Point::zeros(ball.shape());

  auto zm = z.as_matrix();
  const int p = static_cast<int>(zm.cols());

  Eigen::VectorXd v(p);
  for (int i = 0; i < p; ++i) v[i] = rng.normal();
  double vn = v.norm();
  if (vn == 0.0) v[0] = 1.0, vn = 1.0;
  v /= vn;

  for (int it = 0; it < power_iters; ++it) {
    Eigen::VectorXd w = zm.transpose() * (zm * v);
    const double wn = w.norm();
    if (wn == 0.0) break;  // z annihilates v (e.g. z = 0); keep current v
    v = w / wn;
  }
  Eigen::VectorXd u = zm * v;
  const double un = u.norm();
  if (un == 0.0) return Point::zeros(ball.shape());
  u /= un;

  Eigen::MatrixXd c = -gamma * u * v.transpose();
  return Point::from_matrix(c);
}

Point nuclear_projection(const NuclearBall& ball, const Point& z) {
  if (!(z.shape() == ball.shape())) {
    throw ShapeMismatchError("nuclear_projection: shape mismatch");
  }
  const double gamma = ball.gamma();
  auto svd = full_svd(z);
  Eigen::VectorXd sigma = svd.singularValues();  // sorted descending
  if (sigma.sum() <= gamma) return z;

  // Find zeta >= 0 with sum_i max{0, sigma_i - zeta} = gamma. On the sorted
  // spectrum the left side is piecewise linear in zeta, so the root lies on
  // the prefix of k values still above zeta: zeta_k = (prefix_sum - gamma)/k.
  const int r = static_cast<int>(sigma.size());
  double zeta = 0.0;
  double prefix = 0.0;
  for (int k = 1; k <= r; ++k) {
    prefix += sigma[k - 1];
    const double candidate = (prefix - gamma) / k;
    const double next = k < r ? sigma[k] : 0.0;
    if (candidate >= next - 1e-15 && candidate <= sigma[k - 1]) {
      zeta = std::max(candidate, 0.0);
      break;
    }
  }

  Eigen::VectorXd thresholded = (sigma.array() - zeta).max(0.0);
  Eigen::MatrixXd out = svd.matrixU() * thresholded.asDiagonal() *
                        svd.matrixV().transpose();
  return Point::from_matrix(out);
}

}  // namespace pffc
