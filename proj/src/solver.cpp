#include "pffc/solver.hpp"

#include <chrono>
#include <cmath>

namespace pffc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

SolverState init_state(const ProblemInstance& problem, Rng& rng,
                       OracleStats* stats) {
  problem.validate();
  SolverState state;
  state.t = 1;
  state.x = problem.initial_point;
  state.y = problem.initial_point;
  state.drift = Point::zeros(problem.initial_point.shape());
  state.cached = sample_subgradients(problem, state.y, rng);
  if (stats) ++stats->subgradient_calls;
  state.multipliers = ConstraintVec(
      (-state.cached.constraint_values.values()).cwiseMax(0.0));
  state.sum_x = state.x;
  state.sum_y = state.y;
  return state;
}

void step(const ProblemInstance& problem, const SolverParams& params,
          SolverState& state, Rng& rng, OracleStats* stats,
          double* measured_gap) {
  const double G = problem.constants.G;
  const int m = problem.m();
  const double quad_weight = params.alpha + 2.0 * G * G * params.beta;

  // x_{t+1} <- In-LMO(-Q_t; delta)
  const auto lmo_start = Clock::now();
  LmoQuery query{-1.0 * state.drift, params.delta};
  Point x_next = lmo(*problem.feasible, query, rng);
  if (stats) {
    ++stats->lmo_calls;
    stats->lmo_seconds += seconds_since(lmo_start);
  }
  if (measured_gap) {
    *measured_gap = measure_lmo_gap(*problem.feasible, x_next, query.direction);
    if (stats) stats->measured_gaps.push_back(*measured_gap);
  }

  // p_t <- eta Q_t + s_t + beta sum_i (W_{i,t} + h_i(y_t)) g_{i,t}
  Point p = params.eta * state.drift;
  p += state.cached.objective_subgradient;
  for (int i = 0; i < m; ++i) {
    const double weight =
        state.multipliers[i] + state.cached.constraint_values[i];
    p.axpy(params.beta * weight, state.cached.constraint_subgradients[i]);
  }

  // y~_{t+1} <- ((alpha + 2G^2 beta) y_t + eta x_{t+1} - p_t) / (... + eta)
  Point y_tilde = quad_weight * state.y;
  y_tilde.axpy(params.eta, x_next);
  y_tilde -= p;
  y_tilde *= 1.0 / (quad_weight + params.eta);

  const auto proj_start = Clock::now();
  Point y_next = project(*problem.auxiliary, y_tilde);
  if (stats) {
    ++stats->projection_calls;
    stats->projection_seconds += seconds_since(proj_start);
  }

  // Q_{t+1} <- Q_t + y_{t+1} - x_{t+1}
  state.drift += y_next;
  state.drift -= x_next;

  const auto grad_start = Clock::now();
  SubgradientSample fresh = sample_subgradients(problem, y_next, rng);
  if (stats) {
    ++stats->subgradient_calls;
    stats->subgradient_seconds += seconds_since(grad_start);
  }

  // W_{i,t+1} <- max{ W_{i,t} + h_i(y_t) + <g_{i,t}, y_{t+1} - y_t>,
  //                   [-h_i(y_{t+1})]_+ }
  // using the cached g_{i,t}, h_i(y_t) and the fresh h_i(y_{t+1}).
  Point y_delta = y_next - state.y;
  for (int i = 0; i < m; ++i) {
    const double linearized = state.multipliers[i] +
                              state.cached.constraint_values[i] +
                              inner(state.cached.constraint_subgradients[i],
                                    y_delta);
    const double floor = std::max(-fresh.constraint_values[i], 0.0);
    state.multipliers[i] = std::max(linearized, floor);
  }

  state.x = std::move(x_next);
  state.y = std::move(y_next);
  state.cached = std::move(fresh);
  state.sum_x += state.x;
  state.sum_y += state.y;
  ++state.t;
}

std::vector<int> recording_grid(int T, int stride) {
  std::vector<int> grid;
  if (stride <= 0) {
    if (T <= 10000) {
      stride = 1;
    } else {
      // ~256-point geometric grid, deduplicated, always ending at T
      double t = 1.0;
      const double factor = std::pow(static_cast<double>(T), 1.0 / 255.0);
      int last = 0;
      for (int i = 0; i < 256; ++i) {
        const int ti = std::min(T, static_cast<int>(std::lround(t)));
        if (ti > last) {
          grid.push_back(ti);
          last = ti;
        }
        t *= factor;
      }
      if (grid.empty() || grid.back() != T) grid.push_back(T);
      return grid;
    }
  }
  for (int t = stride; t <= T; t += stride) grid.push_back(t);
  if (grid.empty() || grid.back() != T) grid.push_back(T);
  return grid;
}

RunReport run(const ProblemInstance& problem, const SolverParams& params,
              std::uint64_t seed, const RunOptions& options) {
  validate_params(params);
  Rng rng(seed);
  RunReport report;
  report.params = params;
  report.seed = seed;

  const auto start = Clock::now();
  SolverState state = init_state(problem, rng, &report.stats);

  auto note_margins = [&](const SolverState& s) {
    if (problem.m() > 0) {
      report.min_multiplier =
          std::min(report.min_multiplier, s.multipliers.min_value());
      report.min_multiplier_plus_h = std::min(
          report.min_multiplier_plus_h,
          (s.multipliers.values() + s.cached.constraint_values.values())
              .minCoeff());
    }
    report.max_drift_norm = std::max(report.max_drift_norm, norm(s.drift));
  };

  const std::vector<int> grid = recording_grid(params.T, options.record_stride);
  std::size_t grid_pos = 0;
  double last_gap = std::numeric_limits<double>::quiet_NaN();

  auto record_if_due = [&](const SolverState& s) {
    if (grid_pos >= grid.size() || grid[grid_pos] != s.t) return;
    ++grid_pos;
    TrajectoryRow row;
    row.t = s.t;
    Point avg = s.running_average();
    row.obj_avg = problem.objective_value(avg);
    row.violation_l2 = problem.m() == 0
                           ? 0.0
                           : constraint_values(problem, avg)
                                 .positive_part()
                                 .l2_norm();
    row.q_norm = norm(s.drift);
    row.w_norm = s.multipliers.l2_norm();
    row.lmo_gap = last_gap;
    row.wall_ms = seconds_since(start) * 1e3;
    report.rows.push_back(row);
  };

  note_margins(state);
  if (options.observer) options.observer(state);
  record_if_due(state);

  for (int t = 1; t <= params.T - 1; ++t) {
    double gap = std::numeric_limits<double>::quiet_NaN();
    step(problem, params, state, rng, &report.stats,
         options.measure_lmo_gap ? &gap : nullptr);
    if (options.measure_lmo_gap) last_gap = gap;
    note_margins(state);
    if (options.observer) options.observer(state);
    record_if_due(state);
  }

  const double T = static_cast<double>(params.T);
  report.final_average = state.sum_x / T;
  report.objective = problem.objective_value(report.final_average);
  report.violation_l2 =
      problem.m() == 0
          ? 0.0
          : constraint_values(problem, report.final_average)
                .positive_part()
                .l2_norm();

  Point identity_rhs = state.sum_y - state.sum_x;  // T (ybar - xbar)
  const double scale =
      std::max({norm(state.drift), norm(identity_rhs), 1.0});
  report.drift_identity_error = norm(state.drift - identity_rhs) / scale;

  return report;
}

}  // namespace pffc
