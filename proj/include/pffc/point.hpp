#ifndef PFFC_POINT_HPP_
#define PFFC_POINT_HPP_

#include <Eigen/Dense>
#include <cstdint>

#include "pffc/errors.hpp"

namespace pffc {

enum class ShapeKind : std::uint8_t { Vector, Matrix };

// Shape of an element of the inner-product space: either a dense real vector
// of dimension `rows` or a dense real `rows x cols` matrix. A vector(n) and a
// matrix(n, 1) are distinct shapes.
struct Shape {
  ShapeKind kind = ShapeKind::Vector;
  int rows = 0;
  int cols = 1;

  int size() const { return rows * cols; }
  bool operator==(const Shape&) const = default;
};

Shape vector_shape(int dim);
Shape matrix_shape(int rows, int cols);

// Dense element of the optimization space. Matrices use the trace inner
// product <v, u> = Tr(v^T u), which on the flat (column-major) storage is the
// same elementwise sum as the vector dot product.
class Point {
 public:
  Point() = default;
  Point(Shape shape, Eigen::VectorXd data);
  static Point zeros(Shape shape);
  static Point from_vector(Eigen::VectorXd v);
  static Point from_matrix(const Eigen::MatrixXd& m);

  const Shape& shape() const { return shape_; }
  int size() const { return static_cast<int>(data_.size()); }
  bool empty() const { return data_.size() == 0; }

  double operator[](int i) const { return data_[i]; }
  double& operator[](int i) { return data_[i]; }

  const Eigen::VectorXd& flat() const { return data_; }
  Eigen::VectorXd& flat() { return data_; }
  Eigen::Map<const Eigen::MatrixXd> as_matrix() const;

  Point& operator+=(const Point& other);
  Point& operator-=(const Point& other);
  Point& operator*=(double s);
  // this += a * other
  void axpy(double a, const Point& other);

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(double s, Point a) { return a *= s; }
  friend Point operator*(Point a, double s) { return a *= s; }
  friend Point operator/(Point a, double s) { return a *= 1.0 / s; }

 private:
  Shape shape_;
  Eigen::VectorXd data_;
};

void require_same_shape(const Point& a, const Point& b, const char* where);

double inner(const Point& a, const Point& b);
double norm(const Point& a);

// Vector of functional-constraint values in R^m (m >= 0).
class ConstraintVec {
 public:
  ConstraintVec() = default;
  explicit ConstraintVec(int m) : v_(Eigen::VectorXd::Zero(m)) {}
  explicit ConstraintVec(Eigen::VectorXd v) : v_(std::move(v)) {}

  int size() const { return static_cast<int>(v_.size()); }
  double operator[](int i) const { return v_[i]; }
  double& operator[](int i) { return v_[i]; }
  const Eigen::VectorXd& values() const { return v_; }

  // elementwise [.]_+ = max{0, .}
  ConstraintVec positive_part() const {
    return ConstraintVec(v_.cwiseMax(0.0));
  }
  double l2_norm() const { return v_.norm(); }
  double min_value() const {
    return v_.size() == 0 ? 0.0 : v_.minCoeff();
  }

 private:
  Eigen::VectorXd v_;
};

}  // namespace pffc

#endif  // PFFC_POINT_HPP_
