#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pffc/nuclear.hpp"
#include "pffc/pgd.hpp"
#include "pffc/r4nr.hpp"
#include "pffc/schedule.hpp"
#include "support/test_problems.hpp"

using namespace pffc;

namespace {

// minimize ||x||_2 over the unit ball, started on the boundary
ProblemInstance norm_on_ball_problem(int dim) {
  const Shape shape = vector_shape(dim);
  ProblemInstance problem;
  problem.objective_value = [](const Point& x) { return norm(x); };
  problem.objective_subgradient = [shape](const Point& x, Rng&) {
    const double n = norm(x);
    if (n == 0.0) return Point::zeros(shape);  // 0 is valid at the kink
    return (1.0 / n) * x;
  };
  problem.feasible =
      std::make_shared<L2Ball>(Point::zeros(shape), 1.0);
  problem.auxiliary = std::make_shared<FullSpace>(shape);
  problem.constants = {1.0, 0.0, 2.0, 0, 0.0};
  Point start = Point::zeros(shape);
  start[0] = 1.0;
  problem.initial_point = start;
  problem.reference_optimum = 0.0;
  return problem;
}

}  // namespace

TEST_CASE("pgd drives the ball problem toward the optimum") {
  ProblemInstance problem = norm_on_ball_problem(3);
  PgdParams p100{100, PgdParams::StepRule::DecayingOverSqrtT, -1.0};
  PgdParams p400{400, PgdParams::StepRule::DecayingOverSqrtT, -1.0};
  const double f100 = pgd_run(problem, p100, 1).objective;
  const double f400 = pgd_run(problem, p400, 1).objective;
  CHECK(f400 <= 0.5 * f100);
  CHECK(f400 >= 0.0);
}

TEST_CASE("zero step constant freezes the iterates") {
  ProblemInstance problem = norm_on_ball_problem(3);
  PgdParams frozen{50, PgdParams::StepRule::ConstantOverSqrtT, 0.0};
  RunReport report = pgd_run(problem, frozen, 2);
  CHECK(norm(report.final_average - problem.initial_point) == 0.0);
  CHECK(report.objective == doctest::Approx(1.0));
}

TEST_CASE("equal seeds give identical pgd trajectories") {
  auto inst =
      std::make_shared<R4nrInstance>(gen_r4nr(12, 4, 5, 2, 1.0, 2.0, 5));
  R4nrProblemOptions options;
  options.stochastic = true;
  ProblemInstance problem = make_r4nr_problem(inst, options);
  PgdParams params{60, PgdParams::StepRule::DecayingOverSqrtT, -1.0};
  RunReport a = pgd_run(problem, params, 99);
  RunReport b = pgd_run(problem, params, 99);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].obj_avg == b.rows[i].obj_avg);
  }
  CHECK(norm(a.final_average - b.final_average) == 0.0);
}

TEST_CASE("every pgd iterate stays inside the nuclear ball") {
  auto inst =
      std::make_shared<R4nrInstance>(gen_r4nr(15, 4, 6, 2, 1.5, 2.5, 8));
  ProblemInstance problem = make_r4nr_problem(inst);
  PgdParams params{80, PgdParams::StepRule::ConstantOverSqrtT, -1.0};
  RunOptions options;
  int seen = 0;
  options.observer = [&](const SolverState& s) {
    CHECK(nuclear_norm(s.x) <= inst->gamma + 1e-8);
    ++seen;
  };
  pgd_run(problem, params, 3, options);
  CHECK(seen == 80);
}

TEST_CASE("projection-free sets cannot run pgd") {
  ProblemInstance problem = testing::one_dim_problem();
  struct NoProjection : FeasibleSet {
    Shape shape() const override { return vector_shape(1); }
    Point linear_minimizer(const LmoQuery&, Rng&) const override {
      return Point::zeros(vector_shape(1));
    }
    bool contains(const Point&, double) const override { return true; }
    double diameter_bound() const override { return 1.0; }
  };
  problem.feasible = std::make_shared<NoProjection>();
  problem.initial_point = Point::zeros(vector_shape(1));
  PgdParams params{10, PgdParams::StepRule::ConstantOverSqrtT, -1.0};
  CHECK_THROWS_AS(pgd_run(problem, params, 0), ProjectionUnavailableError);
}

TEST_CASE("pgd and the projection-free solver land close on desk r4nr") {
  auto inst =
      std::make_shared<R4nrInstance>(gen_r4nr(50, 20, 30, 5, 2.0, 0.0, 42));
  ProblemInstance problem = make_r4nr_problem(inst);
  const int T = 2000;

  RunReport pffc_report = run(problem, configure_parsel2(T, problem.constants),
                              11);
  PgdParams pgd_params{T, PgdParams::StepRule::ConstantOverSqrtT, -1.0};
  RunReport pgd_report = pgd_run(problem, pgd_params, 11);

  const double a = pffc_report.objective;
  const double b = pgd_report.objective;
  CHECK(std::abs(a - b) <= 0.10 * std::max(a, b));
}
