#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pffc/constants.hpp"
#include "pffc/point.hpp"
#include "pffc/rng.hpp"
#include "support/test_oracles.hpp"

using namespace pffc;

namespace {

Point random_point(Shape s, Rng& rng) {
  Eigen::VectorXd v(s.size());
  for (int i = 0; i < v.size(); ++i) v[i] = rng.normal();
  return Point(s, std::move(v));
}

}  // namespace

TEST_CASE("inner product basics") {
  Point a = Point::from_vector(Eigen::Vector2d(1.0, 2.0));
  Point b = Point::from_vector(Eigen::Vector2d(3.0, 4.0));
  CHECK(inner(a, b) == doctest::Approx(11.0));

  Point eye = Point::from_matrix(Eigen::Matrix2d::Identity());
  CHECK(inner(eye, eye) == doctest::Approx(2.0));
}

TEST_CASE("matrix inner product equals the elementwise sum") {
  Rng rng(11);
  Point a = random_point(matrix_shape(3, 2), rng);
  Point b = random_point(matrix_shape(3, 2), rng);
  CHECK(inner(a, b) == doctest::Approx(testing::naive_inner(a, b)));
}

TEST_CASE("shape mismatch is rejected") {
  Point v3 = Point::zeros(vector_shape(3));
  Point m31 = Point::zeros(matrix_shape(3, 1));
  CHECK_THROWS_AS((void)inner(v3, m31), ShapeMismatchError);
  CHECK_THROWS_AS(v3 += m31, ShapeMismatchError);
}

TEST_CASE("inner product is bilinear and Cauchy-Schwarz holds") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Shape s =
        trial % 2 == 0 ? vector_shape(5) : matrix_shape(3, 4);
    Point a = random_point(s, rng);
    Point b = random_point(s, rng);
    Point c = random_point(s, rng);
    const double scale = rng.uniform(-2.0, 2.0);

    CHECK(inner(a + b, c) ==
          doctest::Approx(inner(a, c) + inner(b, c)).epsilon(1e-9));
    CHECK(inner(scale * a, b) ==
          doctest::Approx(scale * inner(a, b)).epsilon(1e-9));
    CHECK(inner(a, b) == doctest::Approx(inner(b, a)).epsilon(1e-12));
    CHECK(std::abs(inner(a, b)) <= norm(a) * norm(b) * (1.0 + 1e-9));
  }
}

TEST_CASE("norm is zero only at the origin") {
  Point z = Point::zeros(vector_shape(4));
  CHECK(norm(z) == 0.0);
  z[2] = 1e-30;
  CHECK(norm(z) > 0.0);
}

TEST_CASE("positive part is idempotent and monotone") {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Eigen::VectorXd v(6), w(6);
    for (int i = 0; i < 6; ++i) {
      v[i] = rng.uniform(-2.0, 2.0);
      w[i] = v[i] + rng.uniform(0.0, 1.0);  // w >= v elementwise
    }
    ConstraintVec cv(v), cw(w);
    ConstraintVec pv = cv.positive_part();
    ConstraintVec ppv = pv.positive_part();
    for (int i = 0; i < 6; ++i) {
      CHECK(pv[i] >= 0.0);
      CHECK(pv[i] == ppv[i]);
      CHECK(cw.positive_part()[i] >= pv[i]);
    }
  }
}

TEST_CASE("validate_constants accepts and rejects per the invariants") {
  validate_constants({1.0, 1.0, 2.0, 1, 0.0});  // ok

  CHECK_THROWS_AS(validate_constants({1.0, 1.0, 2.0, 0, 0.0}),
                  InvalidConstantsError);  // m = 0 forces G = 0
  CHECK_THROWS_AS(validate_constants({1.0, 0.0, -1.0, 0, 0.0}),
                  InvalidConstantsError);  // negative diameter
  CHECK_THROWS_AS(validate_constants({1.0, 0.0, 1.0, 0, -0.5}),
                  InvalidConstantsError);  // negative budget

  try {
    validate_constants({1.0, 1.0, 2.0, 0, 0.0});
    CHECK(false);
  } catch (const InvalidConstantsError& e) {
    CHECK(e.kind() == InvalidConstantsError::Kind::InconsistentG);
  }
  try {
    validate_constants({1.0, 0.0, -1.0, 0, 0.0});
    CHECK(false);
  } catch (const InvalidConstantsError& e) {
    CHECK(e.kind() == InvalidConstantsError::Kind::NonPositiveDiameter);
  }
}

TEST_CASE("seeded stream reproduces itself") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    CHECK(a.uniform() == b.uniform());
    CHECK(a.normal() == b.normal());
    CHECK(a.laplace(2.0) == b.laplace(2.0));
  }
}

TEST_CASE("laplace sampler has the right scale") {
  Rng rng(5);
  const double b = 2.0;
  double sum = 0.0, sum_abs = 0.0;
  const int N = 200000;
  for (int i = 0; i < N; ++i) {
    const double x = rng.laplace(b);
    sum += x;
    sum_abs += std::abs(x);
  }
  CHECK(sum / N == doctest::Approx(0.0).epsilon(0.05));
  CHECK(sum_abs / N == doctest::Approx(b).epsilon(0.05));  // E|X| = b
}
