#ifndef PFFC_R4NR_HPP_
#define PFFC_R4NR_HPP_

#include <iosfwd>
#include <memory>

#include "pffc/problem.hpp"

namespace pffc {

// Synthetic robust reduced-rank regression instance: responses follow
// y = c_true x + e with low-rank coefficients and heavy-tailed (Laplace)
// noise; the estimate is constrained to the nuclear-norm ball of radius
// gamma.
struct R4nrInstance {
  Eigen::MatrixXd predictors;  // p x n, i.i.d. standard normal
  Eigen::MatrixXd responses;   // q x n
  Eigen::MatrixXd true_coeff;  // q x p, rank `rank`
  double gamma = 0.0;
  int rank = 0;

  int n() const { return static_cast<int>(predictors.cols()); }
  int p() const { return static_cast<int>(predictors.rows()); }
  int q() const { return static_cast<int>(responses.rows()); }

  // L = sqrt((1/n) sum ||x_i||^2): bound for both the full subgradient and
  // the second moment of single-sample subgradients
  double subgradient_bound() const;
};

// gamma <= 0 selects the proportional default 1.2 * ||c_true||_*.
R4nrInstance gen_r4nr(int n, int q, int p, int rank, double laplace_scale,
                      double gamma, std::uint64_t seed);

double r4nr_value(const R4nrInstance& inst, const Point& coeff);
// full (deterministic) subgradient
Point r4nr_subgradient(const R4nrInstance& inst, const Point& coeff);
// unbiased batch estimate: mean over `batch` uniformly drawn samples
Point r4nr_subgradient_batch(const R4nrInstance& inst, const Point& coeff,
                             int batch, Rng& rng);

// Text fixture: dims header followed by row-major values; round-trips
// losslessly.
void write_r4nr(const R4nrInstance& inst, std::ostream& out);
R4nrInstance read_r4nr(std::istream& in);

struct R4nrProblemOptions {
  bool stochastic = false;
  int batch = 1;
  int power_iters = 0;  // 0 = exact full-SVD LMO
};

// Wires the instance to a solvable problem: nuclear-ball feasible set, full
// space as the auxiliary set, zero initial coefficients, D = 2 gamma.
ProblemInstance make_r4nr_problem(std::shared_ptr<const R4nrInstance> inst,
                                  const R4nrProblemOptions& options = {});

}  // namespace pffc

#endif  // PFFC_R4NR_HPP_
