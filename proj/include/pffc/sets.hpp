#ifndef PFFC_SETS_HPP_
#define PFFC_SETS_HPP_

#include <optional>

#include "pffc/point.hpp"
#include "pffc/rng.hpp"

namespace pffc {

// One linear-minimization request: the direction vector and the additive
// error budget the oracle is allowed in expectation.
struct LmoQuery {
  Point direction;
  double budget = 0.0;
};

// Compact convex feasible set exposing at least a linear minimization
// oracle. Exact Euclidean projection and exact linear minima are optional
// capabilities (used by the projected-subgradient baseline and by the
// empirical oracle-gap measurement, respectively).
class FeasibleSet {
 public:
  virtual ~FeasibleSet() = default;

  virtual Shape shape() const = 0;

  // Returns a point of the set whose inner product with q.direction is
  // within q.budget of the minimum (in expectation for randomized oracles).
  virtual Point linear_minimizer(const LmoQuery& q, Rng& rng) const = 0;

  // min over the set of <x, v>, where an exact value is computable.
  virtual std::optional<double> exact_linear_min(const Point& v) const {
    (void)v;
    return std::nullopt;
  }

  // Membership test where decidable; tol absorbs floating error.
  virtual bool contains(const Point& p, double tol) const = 0;

  // Exact nearest-point map, where available.
  virtual std::optional<Point> euclidean_projection(const Point& v) const {
    (void)v;
    return std::nullopt;
  }

  // Valid upper bound on the Euclidean diameter.
  virtual double diameter_bound() const = 0;
};

// Closed convex superset of the feasible set with a cheap projection.
class AuxiliarySet {
 public:
  virtual ~AuxiliarySet() = default;
  virtual Shape shape() const = 0;
  virtual Point project(const Point& v) const = 0;
};

// Free-function entry points matching the oracle contracts. Both check the
// query shape against the set shape before dispatching.
Point lmo(const FeasibleSet& set, const LmoQuery& q, Rng& rng);
Point project(const AuxiliarySet& set, const Point& v);

// Empirical LMO suboptimality <x_ret, v> - min_x <x, v>. Requires the set to
// expose an exact linear minimum; throws ExactMinUnavailableError otherwise.
double measure_lmo_gap(const FeasibleSet& set, const Point& x_ret,
                       const Point& v);

// Axis-aligned box with per-coordinate bounds. Serves as either a feasible
// set (vertex LMO, lower-corner tie-break) or an auxiliary set (clamp
// projection).
class BoxSet : public FeasibleSet, public AuxiliarySet {
 public:
  BoxSet(Shape shape, Eigen::VectorXd lower, Eigen::VectorXd upper);
  static BoxSet cube(Shape shape, double lo, double hi);

  Shape shape() const override { return shape_; }
  Point linear_minimizer(const LmoQuery& q, Rng& rng) const override;
  std::optional<double> exact_linear_min(const Point& v) const override;
  bool contains(const Point& p, double tol) const override;
  std::optional<Point> euclidean_projection(const Point& v) const override;
  Point project(const Point& v) const override;
  double diameter_bound() const override;

  const Eigen::VectorXd& lower() const { return lo_; }
  const Eigen::VectorXd& upper() const { return hi_; }

 private:
  Shape shape_;
  Eigen::VectorXd lo_, hi_;
};

// Euclidean ball { x : ||x - center|| <= radius }.
class L2Ball : public FeasibleSet, public AuxiliarySet {
 public:
  L2Ball(Point center, double radius);

  Shape shape() const override { return center_.shape(); }
  Point linear_minimizer(const LmoQuery& q, Rng& rng) const override;
  std::optional<double> exact_linear_min(const Point& v) const override;
  bool contains(const Point& p, double tol) const override;
  std::optional<Point> euclidean_projection(const Point& v) const override;
  Point project(const Point& v) const override;
  double diameter_bound() const override { return 2.0 * radius_; }

 private:
  Point center_;
  double radius_;
};

// The whole space; projection is the identity.
class FullSpace : public AuxiliarySet {
 public:
  explicit FullSpace(Shape shape) : shape_(shape) {}
  Shape shape() const override { return shape_; }
  Point project(const Point& v) const override;

 private:
  Shape shape_;
};

}  // namespace pffc

#endif  // PFFC_SETS_HPP_
