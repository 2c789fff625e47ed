#include "pffc/point.hpp"

#include <cmath>
#include <string>

namespace pffc {

Shape vector_shape(int dim) {
  if (dim <= 0) throw ShapeMismatchError("vector dimension must be positive");
  return Shape{ShapeKind::Vector, dim, 1};
}

Shape matrix_shape(int rows, int cols) {
  if (rows <= 0 || cols <= 0) {
    throw ShapeMismatchError("matrix dimensions must be positive");
  }
  return Shape{ShapeKind::Matrix, rows, cols};
}

Point::Point(Shape shape, Eigen::VectorXd data)
    : shape_(shape), data_(std::move(data)) {
  if (static_cast<int>(data_.size()) != shape_.size()) {
    throw ShapeMismatchError("point data does not match its shape");
  }
}

Point Point::zeros(Shape shape) {
  return Point(shape, Eigen::VectorXd::Zero(shape.size()));
}

Point Point::from_vector(Eigen::VectorXd v) {
  const int dim = static_cast<int>(v.size());
  return Point(vector_shape(dim), std::move(v));
}

Point Point::from_matrix(const Eigen::MatrixXd& m) {
  Shape s = matrix_shape(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  Eigen::VectorXd flat = Eigen::Map<const Eigen::VectorXd>(m.data(), m.size());
  return Point(s, std::move(flat));
}

Eigen::Map<const Eigen::MatrixXd> Point::as_matrix() const {
  return Eigen::Map<const Eigen::MatrixXd>(data_.data(), shape_.rows,
                                           shape_.cols);
}

void require_same_shape(const Point& a, const Point& b, const char* where) {
  if (!(a.shape() == b.shape())) {
    throw ShapeMismatchError(std::string(where) + ": shape mismatch");
  }
}

Point& Point::operator+=(const Point& other) {
  require_same_shape(*this, other, "Point::operator+=");
  data_ += other.data_;
  return *this;
}

Point& Point::operator-=(const Point& other) {
  require_same_shape(*this, other, "Point::operator-=");
  data_ -= other.data_;
  return *this;
}

Point& Point::operator*=(double s) {
  data_ *= s;
  return *this;
}

void Point::axpy(double a, const Point& other) {
  require_same_shape(*this, other, "Point::axpy");
  data_ += a * other.flat();
}

double inner(const Point& a, const Point& b) {
  require_same_shape(a, b, "inner");
  return a.flat().dot(b.flat());
}

double norm(const Point& a) { return std::sqrt(inner(a, a)); }

}  // namespace pffc
