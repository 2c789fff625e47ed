#include "pffc/r4nr.hpp"

#include <cmath>
#include <istream>
#include <ostream>

#include "pffc/nuclear.hpp"
#include "pffc/r4nr_kernels.hpp"

namespace pffc {

namespace {

Eigen::MatrixXd random_normal(int rows, int cols, Rng& rng) {
  Eigen::MatrixXd m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) m(i, j) = rng.normal();
  }
  return m;
}

void write_matrix(const Eigen::MatrixXd& m, std::ostream& out) {
  char buf[64];
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      out << buf << (j + 1 == m.cols() ? "" : " ");
    }
    out << "\n";
  }
}

Eigen::MatrixXd read_matrix(int rows, int cols, std::istream& in) {
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (!(in >> m(i, j))) throw ParseError("truncated matrix block");
    }
  }
  return m;
}

}  // namespace

double R4nrInstance::subgradient_bound() const {
  return predictors.norm() / std::sqrt(static_cast<double>(n()));
}

R4nrInstance gen_r4nr(int n, int q, int p, int rank, double laplace_scale,
                      double gamma, std::uint64_t seed) {
  if (n < 1 || q < 1 || p < 1 || rank < 1 || rank > std::min(q, p)) {
    throw SolverError("gen_r4nr: bad dimensions");
  }
  if (laplace_scale < 0.0) {
    throw SolverError("gen_r4nr: noise scale must be nonnegative");
  }
  Rng rng(seed);
  R4nrInstance inst;
  inst.rank = rank;
  inst.predictors = random_normal(p, n, rng);
  // 1/sqrt(rank) keeps the nuclear norm roughly stable across ranks
  Eigen::MatrixXd left = random_normal(q, rank, rng);
  Eigen::MatrixXd right = random_normal(rank, p, rng);
  inst.true_coeff = left * right / std::sqrt(static_cast<double>(rank));

  inst.responses = inst.true_coeff * inst.predictors;
  if (laplace_scale > 0.0) {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < q; ++i) {
        inst.responses(i, j) += rng.laplace(laplace_scale);
      }
    }
  }

  inst.gamma = gamma > 0.0
                   ? gamma
                   : 1.2 * nuclear_norm(Point::from_matrix(inst.true_coeff));
  return inst;
}

double r4nr_value(const R4nrInstance& inst, const Point& coeff) {
  if (!(coeff.shape() == matrix_shape(inst.q(), inst.p()))) {
    throw ShapeMismatchError("r4nr_value: coefficient shape mismatch");
  }
  return r4nr_loss_parallel(inst.predictors, inst.responses,
                            coeff.as_matrix());
}

Point r4nr_subgradient(const R4nrInstance& inst, const Point& coeff) {
  if (!(coeff.shape() == matrix_shape(inst.q(), inst.p()))) {
    throw ShapeMismatchError("r4nr_subgradient: coefficient shape mismatch");
  }
  return Point::from_matrix(r4nr_subgradient_parallel(
      inst.predictors, inst.responses, coeff.as_matrix()));
}

Point r4nr_subgradient_batch(const R4nrInstance& inst, const Point& coeff,
                             int batch, Rng& rng) {
  if (!(coeff.shape() == matrix_shape(inst.q(), inst.p()))) {
    throw ShapeMismatchError("r4nr_subgradient_batch: shape mismatch");
  }
  if (batch < 1) throw SolverError("r4nr_subgradient_batch: batch >= 1");
  auto cm = coeff.as_matrix();
  Eigen::MatrixXd grad = Eigen::MatrixXd::Zero(inst.q(), inst.p());
  for (int b = 0; b < batch; ++b) {
    const int i = static_cast<int>(rng.uniform_index(inst.n()));
    Eigen::VectorXd r =
        inst.responses.col(i) - cm * inst.predictors.col(i);
    const double rn = r.norm();
    if (rn == 0.0) continue;
    grad.noalias() -= (r / rn) * inst.predictors.col(i).transpose();
  }
  return Point::from_matrix(grad / batch);
}

void write_r4nr(const R4nrInstance& inst, std::ostream& out) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", inst.gamma);
  out << "r4nr " << inst.n() << " " << inst.q() << " " << inst.p() << " "
      << inst.rank << " " << buf << "\n";
  write_matrix(inst.predictors, out);
  write_matrix(inst.responses, out);
  write_matrix(inst.true_coeff, out);
}

R4nrInstance read_r4nr(std::istream& in) {
  std::string tag;
  int n = 0, q = 0, p = 0, rank = 0;
  double gamma = 0.0;
  if (!(in >> tag >> n >> q >> p >> rank >> gamma) || tag != "r4nr") {
    throw ParseError("bad r4nr fixture header");
  }
  R4nrInstance inst;
  inst.rank = rank;
  inst.gamma = gamma;
  inst.predictors = read_matrix(p, n, in);
  inst.responses = read_matrix(q, n, in);
  inst.true_coeff = read_matrix(q, p, in);
  return inst;
}

ProblemInstance make_r4nr_problem(std::shared_ptr<const R4nrInstance> inst,
                                  const R4nrProblemOptions& options) {
  if (!inst) throw SolverError("make_r4nr_problem: null instance");
  ProblemInstance problem;
  problem.objective_value = [inst](const Point& c) {
    return r4nr_value(*inst, c);
  };
  if (options.stochastic) {
    const int batch = options.batch;
    problem.objective_subgradient = [inst, batch](const Point& c, Rng& rng) {
      return r4nr_subgradient_batch(*inst, c, batch, rng);
    };
  } else {
    problem.objective_subgradient = [inst](const Point& c, Rng&) {
      return r4nr_subgradient(*inst, c);
    };
  }
  problem.feasible = std::make_shared<NuclearBall>(
      inst->q(), inst->p(), inst->gamma, options.power_iters);
  problem.auxiliary =
      std::make_shared<FullSpace>(matrix_shape(inst->q(), inst->p()));
  problem.constants.L = inst->subgradient_bound();
  problem.constants.G = 0.0;
  problem.constants.m = 0;
  problem.constants.D = 2.0 * inst->gamma;
  problem.constants.delta = 0.0;
  problem.initial_point = Point::zeros(matrix_shape(inst->q(), inst->p()));
  return problem;
}

}  // namespace pffc
