#ifndef PFFC_SOLVER_HPP_
#define PFFC_SOLVER_HPP_

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "pffc/problem.hpp"

namespace pffc {

// Mutable per-run state of the primal-dual loop. `drift` accumulates the
// y - x discrepancies (the multiplier enforcing the y = x coupling) and
// `multipliers` are the functional-constraint weights. `cached` holds the
// subgradient sample drawn at the current y, which the next step consumes.
struct SolverState {
  int t = 1;
  Point x;
  Point y;
  Point drift;
  ConstraintVec multipliers;
  SubgradientSample cached;
  Point sum_x;
  Point sum_y;

  Point running_average() const { return sum_x / static_cast<double>(t); }
};

struct TrajectoryRow {
  int t = 0;
  double obj_avg = 0.0;
  double violation_l2 = 0.0;
  double q_norm = 0.0;
  double w_norm = 0.0;
  // most recent measured LMO gap; NaN when not measured
  double lmo_gap = std::numeric_limits<double>::quiet_NaN();
  double wall_ms = 0.0;
};

struct RunReport {
  Point final_average;
  double objective = std::numeric_limits<double>::quiet_NaN();
  double violation_l2 = 0.0;
  std::vector<TrajectoryRow> rows;
  SolverParams params;
  std::uint64_t seed = 0;

  // worst-case margins across every iteration of the run
  double min_multiplier = std::numeric_limits<double>::infinity();
  double min_multiplier_plus_h = std::numeric_limits<double>::infinity();
  double max_drift_norm = 0.0;
  // || Q_T - T (ybar - xbar) || relative to the larger of the two sides
  double drift_identity_error = 0.0;

  OracleStats stats;
};

struct RunOptions {
  // 0 = auto: every iteration for T <= 10^4, else a geometric grid
  int record_stride = 0;
  // measure the empirical LMO gap each iteration (needs an exact minimum)
  bool measure_lmo_gap = false;
  // called after initialization and after every step
  std::function<void(const SolverState&)> observer;
};

// Lines 1-4: y_1 = x_1 = initial point, zero drift, W_1 = [-h(y_1)]_+, and
// the first subgradient sample.
SolverState init_state(const ProblemInstance& problem, Rng& rng,
                       OracleStats* stats = nullptr);

// Lines 6-13 of one iteration. Consumes the cached sample at y_t for the
// descent direction and the multiplier update, draws a fresh sample at
// y_{t+1}, and advances the running sums.
void step(const ProblemInstance& problem, const SolverParams& params,
          SolverState& state, Rng& rng, OracleStats* stats = nullptr,
          double* measured_gap = nullptr);

// Full run: init, T-1 steps, averaged output x_bar = sum_x / T.
RunReport run(const ProblemInstance& problem, const SolverParams& params,
              std::uint64_t seed, const RunOptions& options = {});

// Recording grid used by run(): strictly increasing iteration indices,
// always ending at T.
std::vector<int> recording_grid(int T, int stride);

}  // namespace pffc

#endif  // PFFC_SOLVER_HPP_
