#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "pffc/extension.hpp"
#include "pffc/minflow.hpp"
#include "pffc/nuclear.hpp"
#include "pffc/r4nr.hpp"
#include "pffc/r4nr_kernels.hpp"
#include "support/test_oracles.hpp"

using namespace pffc;

namespace {

// scalar triple-loop oracle, no Eigen products
double naive_r4nr_loss(const Eigen::MatrixXd& pred,
                       const Eigen::MatrixXd& resp,
                       const Eigen::MatrixXd& coeff) {
  double total = 0.0;
  for (int i = 0; i < pred.cols(); ++i) {
    double sq = 0.0;
    for (int r = 0; r < resp.rows(); ++r) {
      double dot = 0.0;
      for (int c = 0; c < pred.rows(); ++c) dot += coeff(r, c) * pred(c, i);
      const double diff = resp(r, i) - dot;
      sq += diff * diff;
    }
    total += std::sqrt(sq);
  }
  return total / pred.cols();
}

}  // namespace

TEST_CASE("generated instances have the requested shape and rank") {
  R4nrInstance inst = gen_r4nr(50, 20, 30, 5, 2.0, 0.0, 42);
  CHECK(inst.predictors.rows() == 30);
  CHECK(inst.predictors.cols() == 50);
  CHECK(inst.responses.rows() == 20);
  CHECK(inst.responses.cols() == 50);
  CHECK(inst.true_coeff.rows() == 20);
  CHECK(inst.true_coeff.cols() == 30);

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(inst.true_coeff);
  int numeric_rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()[i] > 1e-9 * svd.singularValues()[0]) {
      ++numeric_rank;
    }
  }
  CHECK(numeric_rank == 5);
  CHECK(inst.gamma ==
        doctest::Approx(1.2 * nuclear_norm(Point::from_matrix(
                                  inst.true_coeff))));
}

TEST_CASE("noiseless generation evaluates to zero at the true coefficients") {
  R4nrInstance inst = gen_r4nr(20, 6, 8, 2, 0.0, 5.0, 7);
  CHECK(r4nr_value(inst, Point::from_matrix(inst.true_coeff)) ==
        doctest::Approx(0.0).epsilon(1e-12));
  // at zero coefficients the loss is the mean response norm
  double expected = 0.0;
  for (int i = 0; i < inst.n(); ++i) expected += inst.responses.col(i).norm();
  expected /= inst.n();
  CHECK(r4nr_value(inst, Point::zeros(matrix_shape(6, 8))) ==
        doctest::Approx(expected));
}

TEST_CASE("loss kernels agree with each other and the naive oracle") {
  Rng rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform_index(40));
    const int q = 1 + static_cast<int>(rng.uniform_index(6));
    const int p = 1 + static_cast<int>(rng.uniform_index(7));
    Eigen::MatrixXd pred(p, n), resp(q, n), coeff(q, p);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < p; ++i) pred(i, j) = rng.normal();
      for (int i = 0; i < q; ++i) resp(i, j) = rng.normal();
    }
    for (int j = 0; j < p; ++j) {
      for (int i = 0; i < q; ++i) coeff(i, j) = rng.normal();
    }

    const double serial = r4nr_loss_serial(pred, resp, coeff);
    const double parallel = r4nr_loss_parallel(pred, resp, coeff);
    const double naive = naive_r4nr_loss(pred, resp, coeff);
    CHECK(parallel == doctest::Approx(serial).epsilon(1e-12));
    CHECK(serial == doctest::Approx(naive).epsilon(1e-10));

    Eigen::MatrixXd gs = r4nr_subgradient_serial(pred, resp, coeff);
    Eigen::MatrixXd gp = r4nr_subgradient_parallel(pred, resp, coeff);
    CHECK((gs - gp).norm() <= 1e-12 * std::max(1.0, gs.norm()));
  }
}

TEST_CASE("full subgradient satisfies the convexity certificate") {
  Rng rng(2);
  R4nrInstance inst = gen_r4nr(15, 4, 5, 2, 1.0, 3.0, 3);
  const Shape shape = matrix_shape(4, 5);
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::VectorXd cv(shape.size()), zv(shape.size());
    for (int i = 0; i < cv.size(); ++i) {
      cv[i] = rng.normal();
      zv[i] = rng.normal();
    }
    Point c(shape, cv), z(shape, zv);
    Point s = r4nr_subgradient(inst, c);
    CHECK(r4nr_value(inst, z) >=
          r4nr_value(inst, c) + inner(s, z - c) - 1e-9);
  }
}

TEST_CASE("directional finite differences dominate the subgradient slope") {
  Rng rng(3);
  R4nrInstance inst = gen_r4nr(12, 3, 4, 1, 1.0, 2.0, 9);
  const Shape shape = matrix_shape(3, 4);
  const double eps = 1e-6;
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::VectorXd cv(shape.size()), uv(shape.size());
    for (int i = 0; i < cv.size(); ++i) {
      cv[i] = rng.normal();
      uv[i] = rng.normal();
    }
    Point c(shape, cv), u(shape, uv);
    Point s = r4nr_subgradient(inst, c);
    const double lhs = r4nr_value(inst, c + eps * u) - r4nr_value(inst, c);
    CHECK(lhs >= eps * inner(s, u) - 1e-8);
  }
}

TEST_CASE("subgradient norms respect the reported bound") {
  Rng rng(4);
  R4nrInstance inst = gen_r4nr(25, 5, 6, 2, 2.0, 4.0, 11);
  const double bound = inst.subgradient_bound();
  const Shape shape = matrix_shape(5, 6);
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::VectorXd cv(shape.size());
    for (int i = 0; i < cv.size(); ++i) cv[i] = rng.normal();
    Point s = r4nr_subgradient(inst, Point(shape, cv));
    CHECK(norm(s) <= bound + 1e-9);
  }
}

TEST_CASE("single-sample subgradients are unbiased") {
  Rng rng(5);
  R4nrInstance inst = gen_r4nr(20, 4, 5, 2, 1.5, 3.0, 13);
  const Shape shape = matrix_shape(4, 5);
  Eigen::VectorXd cv(shape.size());
  for (int i = 0; i < cv.size(); ++i) cv[i] = rng.normal();
  Point c(shape, cv);

  Point full = r4nr_subgradient(inst, c);
  const int draws = 100000;
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(shape.size());
  Eigen::VectorXd sumsq = Eigen::VectorXd::Zero(shape.size());
  for (int k = 0; k < draws; ++k) {
    Point s = r4nr_subgradient_batch(inst, c, 1, rng);
    sum += s.flat();
    sumsq += s.flat().cwiseProduct(s.flat());
  }
  Eigen::VectorXd mean = sum / draws;
  Eigen::VectorXd variance =
      (sumsq / draws - mean.cwiseProduct(mean)).cwiseMax(0.0);
  const double aggregated_se = std::sqrt(variance.sum() / draws);
  CHECK((mean - full.flat()).norm() <= 3.0 * aggregated_se + 1e-12);
}

TEST_CASE("fixture serialization round-trips exactly") {
  R4nrInstance inst = gen_r4nr(8, 3, 4, 2, 2.0, 0.0, 21);
  std::ostringstream out;
  write_r4nr(inst, out);
  std::istringstream in(out.str());
  R4nrInstance back = read_r4nr(in);
  CHECK(back.gamma == inst.gamma);
  CHECK(back.rank == inst.rank);
  CHECK((back.predictors - inst.predictors).norm() == 0.0);
  CHECK((back.responses - inst.responses).norm() == 0.0);
  CHECK((back.true_coeff - inst.true_coeff).norm() == 0.0);

  std::ostringstream out2;
  write_r4nr(back, out2);
  CHECK(out.str() == out2.str());
}

TEST_CASE("r4nr problem wiring") {
  auto inst =
      std::make_shared<R4nrInstance>(gen_r4nr(10, 3, 4, 1, 1.0, 2.5, 33));
  ProblemInstance problem = make_r4nr_problem(inst);
  problem.validate();
  CHECK(problem.constants.m == 0);
  CHECK(problem.constants.G == 0.0);
  CHECK(problem.constants.D == doctest::Approx(5.0));
  CHECK(problem.constants.L == doctest::Approx(inst->subgradient_bound()));
}

// --------------------------------------------------------------------------
// Min-Flow

namespace {

std::shared_ptr<DagNetwork> three_node_net() {
  return std::make_shared<DagNetwork>(
      DagNetwork(3, {{0, 1, 2.0}, {1, 2, 2.0}, {0, 2, 3.0}}, 0, 2, 2.5));
}

// 1-D reduction of the three-node objective: t units via the two-hop path,
// demand - t via the direct edge; exact minimum by dense scan + refinement.
double three_node_reference(const MinFlowInstance& inst) {
  const auto& net = *inst.net;
  const double d = net.demand();
  const double lo = std::max(0.0, d - net.edge(2).capacity);
  const double hi = std::min({net.edge(0).capacity, net.edge(1).capacity, d});
  auto value_at = [&](double t) {
    Point x = Point::zeros(vector_shape(3));
    x[0] = t;
    x[1] = t;
    x[2] = d - t;
    return minflow_value(inst, x);
  };
  double best = std::numeric_limits<double>::infinity();
  double best_t = lo;
  const int grid = 20000;
  for (int i = 0; i <= grid; ++i) {
    const double t = lo + (hi - lo) * i / grid;
    const double v = value_at(t);
    if (v < best) {
      best = v;
      best_t = t;
    }
  }
  // golden-section refinement (value_at is convex in t)
  double a = std::max(lo, best_t - (hi - lo) / grid);
  double b = std::min(hi, best_t + (hi - lo) / grid);
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  while (b - a > 1e-12) {
    const double c = b - invphi * (b - a);
    const double d = a + invphi * (b - a);
    if (value_at(c) < value_at(d)) {
      b = d;
    } else {
      a = c;
    }
  }
  return std::min(best, value_at((a + b) / 2.0));
}

}  // namespace

TEST_CASE("min-flow objective and subgradient") {
  auto net = three_node_net();
  MinFlowInstance inst = build_minflow(net, MinFlowFormulation::F1);
  const Eigen::VectorXd k = net->capacities();
  CHECK((inst.a - (k / 10.0).array().exp().matrix()).norm() <= 1e-15);

  Point zero = Point::zeros(vector_shape(3));
  double expected = 0.0;
  for (int e = 0; e < 3; ++e) expected += std::max(inst.b[e], inst.c[e]);
  CHECK(minflow_value(inst, zero) == doctest::Approx(expected));

  // all affine branches active at a big flow
  Point big(vector_shape(3), Eigen::Vector3d(9.0, 9.0, 9.0));
  Point g = minflow_subgradient(inst, big);
  CHECK((g.flat() - inst.a).norm() == 0.0);

  // convexity certificate on random pairs
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::Vector3d xv, zv;
    for (int i = 0; i < 3; ++i) {
      xv[i] = rng.uniform(-2.0, 6.0);
      zv[i] = rng.uniform(-2.0, 6.0);
    }
    Point x(vector_shape(3), xv), z(vector_shape(3), zv);
    Point s = minflow_subgradient(inst, x);
    CHECK(minflow_value(inst, z) >=
          minflow_value(inst, x) + inner(s, z - x) - 1e-9);
  }
}

TEST_CASE("capacity-excess constraint") {
  auto net = three_node_net();
  MinFlowInstance f3 = build_minflow(net, MinFlowFormulation::F3);
  Point at_cap(vector_shape(3), net->capacities());
  CHECK(hcap_value(f3, at_cap) == 0.0);
  Point g = hcap_subgradient(f3, at_cap);
  CHECK(g[0] == 1.0);  // ties break to the lowest edge index
  CHECK(norm(g) == 1.0);

  Point bumped = at_cap;
  bumped[2] += 0.5;
  CHECK(hcap_value(f3, bumped) == doctest::Approx(0.5));
  g = hcap_subgradient(f3, bumped);
  CHECK(g[2] == 1.0);

  MinFlowInstance f1 = build_minflow(net, MinFlowFormulation::F1);
  CHECK_THROWS_AS((void)hcap_value(f1, at_cap), WrongFormulationError);

  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::Vector3d xv, zv;
    for (int i = 0; i < 3; ++i) {
      xv[i] = rng.uniform(-1.0, 5.0);
      zv[i] = rng.uniform(-1.0, 5.0);
    }
    Point x(vector_shape(3), xv), z(vector_shape(3), zv);
    Point s = hcap_subgradient(f3, x);
    CHECK(hcap_value(f3, z) >= hcap_value(f3, x) + inner(s, z - x) - 1e-9);
  }
}

TEST_CASE("formulation wiring follows the table") {
  auto net = three_node_net();
  for (auto f : {MinFlowFormulation::F1, MinFlowFormulation::F2,
                 MinFlowFormulation::F3, MinFlowFormulation::F4}) {
    ProblemInstance problem =
        make_minflow_problem(build_minflow(net, f));
    problem.validate();
    const bool constrained = formulation_has_constraint(f);
    CHECK(problem.m() == (constrained ? 1 : 0));
    CHECK(problem.constants.G == (constrained ? 1.0 : 0.0));
    CHECK(problem.constants.D == doctest::Approx(flow_diameter_bound(*net)));
    const bool boxed =
        f == MinFlowFormulation::F2 || f == MinFlowFormulation::F4;
    CHECK((dynamic_cast<const BoxSet*>(problem.auxiliary.get()) != nullptr) ==
          boxed);
    CHECK((dynamic_cast<const CapacitatedFlowPolytope*>(
               problem.feasible.get()) != nullptr) == !constrained);
  }
}

TEST_CASE("reference optimum matches a dense 1-D scan") {
  auto net = three_node_net();
  MinFlowInstance inst = build_minflow(net, MinFlowFormulation::F1);
  const double reference = minflow_reference_optimum(inst);
  CHECK(reference == doctest::Approx(three_node_reference(inst)).epsilon(1e-7));
}

TEST_CASE("reference optimum lower-bounds feasible vertices") {
  auto net = std::make_shared<DagNetwork>(default_minflow_network());
  MinFlowInstance inst = build_minflow(net, MinFlowFormulation::F1);
  const double reference = minflow_reference_optimum(inst);
  Rng rng(8);
  CapacitatedFlowPolytope polytope(net);
  for (int trial = 0; trial < 200; ++trial) {
    Point w = Point::zeros(vector_shape(net->num_edges()));
    for (int e = 0; e < w.size(); ++e) w[e] = rng.uniform(-1.0, 1.0);
    Point vertex = polytope.linear_minimizer({w, 0.0}, rng);
    CHECK(minflow_value(inst, vertex) >= reference - 1e-9);
  }
}

TEST_CASE("the shipped default network is valid") {
  DagNetwork net = default_minflow_network();
  CHECK(net.num_nodes() == 6);
  CHECK(net.num_edges() == 9);
  CHECK(net.demand() == doctest::Approx(4.1));
  for (const auto& e : net.edges()) {
    CHECK(e.capacity >= 1.0);
    CHECK(e.capacity <= 6.0);
  }
  CHECK(max_flow_value(net) >= net.demand());
}

// --------------------------------------------------------------------------
// 1-D extension

TEST_CASE("extension reproduces the closed form of the two-branch example") {
  auto f = [](double x) { return std::max(std::exp(-x), std::exp(x)); };
  const double e = std::exp(1.0);
  CHECK(std::abs(mcshane_whitney_extend_1d(f, -1.0, 1.0, e, 2.0) - 2.0 * e) <=
        1e-9);
  CHECK(std::abs(mcshane_whitney_extend_1d(f, -1.0, 1.0, e, -2.0) - 2.0 * e) <=
        1e-9);
  CHECK(std::abs(mcshane_whitney_extend_1d(f, -1.0, 1.0, e, 0.0) - 1.0) <=
        1e-9);
  // inside the domain the extension agrees with f
  for (double x : {-0.9, -0.4, 0.0, 0.3, 0.77, 1.0}) {
    CHECK(std::abs(mcshane_whitney_extend_1d(f, -1.0, 1.0, e, x) - f(x)) <=
          1e-9);
  }
}
