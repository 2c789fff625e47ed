#include "pffc/sets.hpp"

#include <cmath>

namespace pffc {

Point lmo(const FeasibleSet& set, const LmoQuery& q, Rng& rng) {
  if (!(q.direction.shape() == set.shape())) {
    throw ShapeMismatchError("lmo: direction shape does not match the set");
  }
  if (q.budget < 0.0) throw SolverError("lmo: budget must be nonnegative");
  return set.linear_minimizer(q, rng);
}

Point project(const AuxiliarySet& set, const Point& v) {
  if (!(v.shape() == set.shape())) {
    throw ShapeMismatchError("project: point shape does not match the set");
  }
  return set.project(v);
}

double measure_lmo_gap(const FeasibleSet& set, const Point& x_ret,
                       const Point& v) {
  const auto exact = set.exact_linear_min(v);
  if (!exact) {
    throw ExactMinUnavailableError(
        "measure_lmo_gap: set has no exact linear minimum");
  }
  return inner(x_ret, v) - *exact;
}

// ---------------------------------------------------------------------------
// BoxSet

BoxSet::BoxSet(Shape shape, Eigen::VectorXd lower, Eigen::VectorXd upper)
    : shape_(shape), lo_(std::move(lower)), hi_(std::move(upper)) {
  if (static_cast<int>(lo_.size()) != shape_.size() ||
      static_cast<int>(hi_.size()) != shape_.size()) {
    throw ShapeMismatchError("BoxSet: bound vectors do not match the shape");
  }
  if ((hi_ - lo_).minCoeff() < 0.0) {
    throw SolverError("BoxSet: lower bound exceeds upper bound");
  }
}

BoxSet BoxSet::cube(Shape shape, double lo, double hi) {
  const int n = shape.size();
  return BoxSet(shape, Eigen::VectorXd::Constant(n, lo),
                Eigen::VectorXd::Constant(n, hi));
}

Point BoxSet::linear_minimizer(const LmoQuery& q, Rng&) const {
  // Per-coordinate corner; ties (zero coefficient) go to the lower corner.
  Eigen::VectorXd out(lo_.size());
  for (int i = 0; i < out.size(); ++i) {
    out[i] = q.direction[i] < 0.0 ? hi_[i] : lo_[i];
  }
  return Point(shape_, std::move(out));
}

std::optional<double> BoxSet::exact_linear_min(const Point& v) const {
  double total = 0.0;
  for (int i = 0; i < v.size(); ++i) {
    total += std::min(v[i] * lo_[i], v[i] * hi_[i]);
  }
  return total;
}

bool BoxSet::contains(const Point& p, double tol) const {
  if (!(p.shape() == shape_)) return false;
  return (p.flat() - lo_).minCoeff() >= -tol &&
         (hi_ - p.flat()).minCoeff() >= -tol;
}

std::optional<Point> BoxSet::euclidean_projection(const Point& v) const {
  return project(v);
}

Point BoxSet::project(const Point& v) const {
  return Point(shape_, v.flat().cwiseMax(lo_).cwiseMin(hi_));
}

double BoxSet::diameter_bound() const { return (hi_ - lo_).norm(); }

// ---------------------------------------------------------------------------
// L2Ball

L2Ball::L2Ball(Point center, double radius)
    : center_(std::move(center)), radius_(radius) {
  if (radius_ < 0.0) throw SolverError("L2Ball: radius must be nonnegative");
}

Point L2Ball::linear_minimizer(const LmoQuery& q, Rng&) const {
  const double n = norm(q.direction);
  if (n == 0.0) return center_;  // all points tie; center is deterministic
  Point out = center_;
  out.axpy(-radius_ / n, q.direction);
  return out;
}

std::optional<double> L2Ball::exact_linear_min(const Point& v) const {
  return inner(center_, v) - radius_ * norm(v);
}

bool L2Ball::contains(const Point& p, double tol) const {
  if (!(p.shape() == center_.shape())) return false;
  return norm(p - center_) <= radius_ + tol;
}

std::optional<Point> L2Ball::euclidean_projection(const Point& v) const {
  return project(v);
}

Point L2Ball::project(const Point& v) const {
  Point d = v - center_;
  const double n = norm(d);
  if (n <= radius_) return v;
  Point out = center_;
  out.axpy(radius_ / n, d);
  return out;
}

// ---------------------------------------------------------------------------
// FullSpace

Point FullSpace::project(const Point& v) const { return v; }

}  // namespace pffc
