#include "pffc/pgd.hpp"

#include <chrono>
#include <cmath>

namespace pffc {

RunReport pgd_run(const ProblemInstance& problem, const PgdParams& params,
                  std::uint64_t seed, const RunOptions& options) {
  problem.validate();
  if (params.T < 1) throw SolverError("pgd_run: T must be >= 1");
  if (!problem.feasible->euclidean_projection(problem.initial_point)) {
    throw ProjectionUnavailableError(
        "pgd_run: feasible set has no exact projection");
  }

  double c = params.c;
  if (c < 0.0) {
    if (problem.constants.L <= 0.0) {
      throw SolverError("pgd_run: default step needs L > 0");
    }
    c = problem.constants.D / problem.constants.L;
  }
  const double sqrt_T = std::sqrt(static_cast<double>(params.T));

  Rng rng(seed);
  RunReport report;
  report.params.T = params.T;
  report.seed = seed;

  const auto start = std::chrono::steady_clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
               .count() *
           1e3;
  };

  Point x = problem.initial_point;
  Point sum_x = x;
  const std::vector<int> grid =
      recording_grid(params.T, options.record_stride);
  std::size_t grid_pos = 0;

  auto record_if_due = [&](int t) {
    if (grid_pos >= grid.size() || grid[grid_pos] != t) return;
    ++grid_pos;
    TrajectoryRow row;
    row.t = t;
    Point avg = sum_x / static_cast<double>(t);
    row.obj_avg = problem.objective_value(avg);
    row.violation_l2 =
        problem.m() == 0
            ? 0.0
            : constraint_values(problem, avg).positive_part().l2_norm();
    row.wall_ms = elapsed_ms();
    report.rows.push_back(row);
  };

  auto notify = [&](int t) {
    if (!options.observer) return;
    SolverState view;
    view.t = t;
    view.x = x;
    view.y = x;
    view.sum_x = sum_x;
    view.sum_y = sum_x;
    view.drift = Point::zeros(x.shape());
    options.observer(view);
  };

  record_if_due(1);
  notify(1);
  for (int t = 1; t <= params.T - 1; ++t) {
    Point s = problem.objective_subgradient(x, rng);
    ++report.stats.subgradient_calls;
    const double step = params.rule == PgdParams::StepRule::ConstantOverSqrtT
                            ? c / sqrt_T
                            : c / std::sqrt(static_cast<double>(t));
    Point trial = x;
    trial.axpy(-step, s);
    x = *problem.feasible->euclidean_projection(trial);
    ++report.stats.projection_calls;
    sum_x += x;
    record_if_due(t + 1);
    notify(t + 1);
  }

  report.final_average = sum_x / static_cast<double>(params.T);
  report.objective = problem.objective_value(report.final_average);
  report.violation_l2 = problem.m() == 0
                            ? 0.0
                            : constraint_values(problem, report.final_average)
                                  .positive_part()
                                  .l2_norm();
  return report;
}

}  // namespace pffc
