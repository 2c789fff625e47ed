// Command-line front door: build problems from a JSON config, run the
// projection-free solver or the projected-subgradient baseline, emit CSV
// trajectories, generate fixtures, and drive the invariant/bound/oracle
// check suites.
//
// Exit codes: 0 success, 1 check failure, 2 config error, 3 oracle failure.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "pffc/argmin_oracle.hpp"
#include "pffc/bounds.hpp"
#include "pffc/csv.hpp"
#include "pffc/extension.hpp"
#include "pffc/minflow.hpp"
#include "pffc/nuclear.hpp"
#include "pffc/pgd.hpp"
#include "pffc/r4nr.hpp"
#include "pffc/schedule.hpp"
#include "pffc/solver.hpp"

namespace {

using json = nlohmann::json;
using namespace pffc;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitOracleError = 3;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string problem = "custom-1d";  // r4nr | minflow | custom-1d
  std::string solver = "pffc";        // pffc | pgd

  // exactly one of: parsel1 (epsilon), parsel2, explicit eta/alpha/beta
  std::optional<double> parsel1_epsilon;
  bool parsel2 = false;
  std::optional<double> eta, alpha, beta;

  int T = 100;
  double delta = 0.0;
  std::uint64_t seed = 0;
  std::string output;
  int record_stride = 1;
  bool measure_lmo_gap = false;
  int power_iters = 0;  // 0 = exact LMO
  int fanout = 1;       // independent seeds run in parallel

  // r4nr parameters
  struct {
    int n = 50, q = 20, p = 30, rank = 5;
    double laplace_scale = 2.0;
    double gamma = 0.0;  // <= 0: proportional default
    std::uint64_t seed = 7;
    bool stochastic = false;
    int batch = 1;
    std::string file;  // load fixture instead of generating
  } r4nr;

  // minflow parameters
  struct {
    std::string file;  // empty: shipped default network
    std::string formulation = "F1";
  } minflow;

  // pgd parameters
  struct {
    std::string rule = "decay";  // decay | constant
    double c = -1.0;
  } pgd;
};

std::uint64_t env_default_seed() {
  if (const char* env = std::getenv("PFFC_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

template <typename T>
void read_into(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

RunConfig parse_config(const json& j) {
  RunConfig cfg;
  cfg.seed = env_default_seed();
  read_into(j, "problem", cfg.problem);
  read_into(j, "solver", cfg.solver);
  read_into(j, "T", cfg.T);
  read_into(j, "delta", cfg.delta);
  read_into(j, "seed", cfg.seed);
  read_into(j, "output", cfg.output);
  read_into(j, "record_stride", cfg.record_stride);
  read_into(j, "measure_lmo_gap", cfg.measure_lmo_gap);
  read_into(j, "fanout", cfg.fanout);

  if (j.contains("schedule")) {
    const json& s = j.at("schedule");
    if (s.contains("parsel1")) cfg.parsel1_epsilon = s.at("parsel1").get<double>();
    if (s.contains("parsel2")) cfg.parsel2 = s.at("parsel2").get<bool>();
    if (s.contains("eta")) cfg.eta = s.at("eta").get<double>();
    if (s.contains("alpha")) cfg.alpha = s.at("alpha").get<double>();
    if (s.contains("beta")) cfg.beta = s.at("beta").get<double>();
  }
  if (j.contains("lmo")) {
    const json& l = j.at("lmo");
    std::string mode = "exact";
    read_into(l, "mode", mode);
    if (mode == "power") {
      cfg.power_iters = 2;
      read_into(l, "iters", cfg.power_iters);
    } else if (mode != "exact") {
      throw ConfigError("lmo.mode must be 'exact' or 'power'");
    }
  }
  if (j.contains("r4nr")) {
    const json& r = j.at("r4nr");
    read_into(r, "n", cfg.r4nr.n);
    read_into(r, "q", cfg.r4nr.q);
    read_into(r, "p", cfg.r4nr.p);
    read_into(r, "rank", cfg.r4nr.rank);
    read_into(r, "laplace_scale", cfg.r4nr.laplace_scale);
    read_into(r, "gamma", cfg.r4nr.gamma);
    read_into(r, "seed", cfg.r4nr.seed);
    read_into(r, "stochastic", cfg.r4nr.stochastic);
    read_into(r, "batch", cfg.r4nr.batch);
    read_into(r, "file", cfg.r4nr.file);
  }
  if (j.contains("minflow")) {
    const json& m = j.at("minflow");
    read_into(m, "file", cfg.minflow.file);
    read_into(m, "formulation", cfg.minflow.formulation);
  }
  if (j.contains("pgd")) {
    const json& p = j.at("pgd");
    read_into(p, "rule", cfg.pgd.rule);
    read_into(p, "c", cfg.pgd.c);
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  try {
    return parse_config(j);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
}

MinFlowFormulation parse_formulation(const std::string& name) {
  if (name == "F1") return MinFlowFormulation::F1;
  if (name == "F2") return MinFlowFormulation::F2;
  if (name == "F3") return MinFlowFormulation::F3;
  if (name == "F4") return MinFlowFormulation::F4;
  throw ConfigError("unknown formulation: " + name);
}

ProblemInstance build_one_dim_problem() {
  const Shape shape = vector_shape(1);
  ProblemInstance problem;
  problem.objective_value = [](const Point& x) { return x[0]; };
  problem.objective_subgradient = [shape](const Point&, Rng&) {
    Point g = Point::zeros(shape);
    g[0] = 1.0;
    return g;
  };
  problem.feasible = std::make_shared<BoxSet>(BoxSet::cube(shape, 0.0, 1.0));
  problem.auxiliary = std::make_shared<FullSpace>(shape);
  problem.constants = {1.0, 0.0, 1.0, 0, 0.0};
  Point start = Point::zeros(shape);
  start[0] = 1.0;
  problem.initial_point = start;
  problem.reference_optimum = 0.0;
  return problem;
}

ProblemInstance build_problem(const RunConfig& cfg) {
  if (cfg.problem == "custom-1d") {
    return build_one_dim_problem();
  }
  if (cfg.problem == "r4nr") {
    std::shared_ptr<R4nrInstance> inst;
    if (!cfg.r4nr.file.empty()) {
      std::ifstream in(cfg.r4nr.file);
      if (!in) throw ConfigError("cannot open fixture: " + cfg.r4nr.file);
      inst = std::make_shared<R4nrInstance>(read_r4nr(in));
    } else {
      inst = std::make_shared<R4nrInstance>(
          gen_r4nr(cfg.r4nr.n, cfg.r4nr.q, cfg.r4nr.p, cfg.r4nr.rank,
                   cfg.r4nr.laplace_scale, cfg.r4nr.gamma, cfg.r4nr.seed));
    }
    R4nrProblemOptions options;
    options.stochastic = cfg.r4nr.stochastic;
    options.batch = cfg.r4nr.batch;
    options.power_iters = cfg.power_iters;
    ProblemInstance problem = make_r4nr_problem(inst, options);
    problem.constants.delta = cfg.delta;
    return problem;
  }
  if (cfg.problem == "minflow") {
    std::shared_ptr<DagNetwork> net;
    if (!cfg.minflow.file.empty()) {
      std::ifstream in(cfg.minflow.file);
      if (!in) throw ConfigError("cannot open network: " + cfg.minflow.file);
      net = std::make_shared<DagNetwork>(DagNetwork::parse(in));
    } else {
      net = std::make_shared<DagNetwork>(default_minflow_network());
    }
    MinFlowInstance inst =
        build_minflow(net, parse_formulation(cfg.minflow.formulation));
    ProblemInstance problem = make_minflow_problem(inst);
    problem.constants.delta = cfg.delta;
    return problem;
  }
  throw ConfigError("unknown problem selector: " + cfg.problem);
}

SolverParams make_params(const RunConfig& cfg, const ProblemConstants& c) {
  const bool has_explicit = cfg.eta || cfg.alpha || cfg.beta;
  const int selected = (cfg.parsel1_epsilon ? 1 : 0) + (cfg.parsel2 ? 1 : 0) +
                       (has_explicit ? 1 : 0);
  if (selected != 1) {
    throw ConfigError("exactly one schedule must be specified "
                      "(parsel1, parsel2, or explicit eta/alpha/beta)");
  }
  if (cfg.parsel1_epsilon) {
    SolverParams p = configure_parsel1(*cfg.parsel1_epsilon, cfg.delta);
    return p;
  }
  if (cfg.parsel2) {
    ProblemConstants with_delta = c;
    with_delta.delta = cfg.delta;
    SolverParams p = configure_parsel2(cfg.T, with_delta);
    return p;
  }
  if (!(cfg.eta && cfg.alpha && cfg.beta)) {
    throw ConfigError("explicit schedule needs eta, alpha and beta");
  }
  SolverParams p{cfg.T, *cfg.eta, *cfg.alpha, *cfg.beta, cfg.delta};
  validate_params(p);
  return p;
}

std::string seed_output_path(const std::string& base, std::uint64_t seed,
                             bool multi) {
  if (!multi) return base;
  std::filesystem::path p(base);
  std::filesystem::path stem = p.stem();
  stem += ".seed" + std::to_string(seed);
  stem += p.extension();
  return (p.parent_path() / stem).string();
}

int cmd_solve(const RunConfig& cfg) {
  ProblemInstance problem = build_problem(cfg);
  if (cfg.output.empty()) throw ConfigError("solve needs an output path");

  std::vector<std::string> written(cfg.fanout);
  std::vector<std::exception_ptr> errors(cfg.fanout);

#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < cfg.fanout; ++k) {
    try {
      const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(k);
      RunOptions options;
      options.record_stride = cfg.record_stride;
      options.measure_lmo_gap = cfg.measure_lmo_gap;
      RunReport report;
      if (cfg.solver == "pffc") {
        report = run(problem, make_params(cfg, problem.constants), seed,
                     options);
      } else if (cfg.solver == "pgd") {
        PgdParams params;
        params.T = cfg.T;
        params.c = cfg.pgd.c;
        if (cfg.pgd.rule == "decay") {
          params.rule = PgdParams::StepRule::DecayingOverSqrtT;
        } else if (cfg.pgd.rule == "constant") {
          params.rule = PgdParams::StepRule::ConstantOverSqrtT;
        } else {
          throw ConfigError("pgd.rule must be 'decay' or 'constant'");
        }
        report = pgd_run(problem, params, seed, options);
      } else {
        throw ConfigError("unknown solver selector: " + cfg.solver);
      }
      const std::string path =
          seed_output_path(cfg.output, seed, cfg.fanout > 1);
      write_report_csv(report, path);
      written[k] = path;
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }

  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  for (const auto& path : written) {
    std::cout << "wrote " << path << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// check suites

struct CheckPrinter {
  bool all_ok = true;
  void note(const std::string& name, bool ok, const std::string& margin) {
    all_ok = all_ok && ok;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
    if (!margin.empty()) std::cout << "  (" << margin << ")";
    std::cout << "\n";
  }
  int exit_code() const { return all_ok ? kExitOk : kExitCheckFailed; }
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(4);
  s << v;
  return s.str();
}

int check_invariants() {
  CheckPrinter out;

  auto net = std::make_shared<DagNetwork>(default_minflow_network());
  ProblemInstance f3 = make_minflow_problem(
      build_minflow(net, MinFlowFormulation::F3));
  double worst_w = 0.0, worst_wh = 0.0, worst_eq8 = 0.0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    RunReport r = run(f3, configure_parsel2(2000, f3.constants), seed);
    worst_w = std::min(worst_w, r.min_multiplier);
    worst_wh = std::min(worst_wh, r.min_multiplier_plus_h);
    worst_eq8 = std::max(worst_eq8, r.drift_identity_error);
  }
  out.note("multipliers nonnegative (flow F3, 5 seeds)", worst_w >= -1e-12,
           "min W = " + fmt(worst_w));
  out.note("multiplier + value nonnegative", worst_wh >= -1e-12,
           "min W+h = " + fmt(worst_wh));
  out.note("drift equals T (ybar - xbar)", worst_eq8 <= 1e-9,
           "rel err = " + fmt(worst_eq8));

  auto inst = std::make_shared<R4nrInstance>(
      gen_r4nr(50, 20, 30, 5, 2.0, 0.0, 42));
  ProblemInstance r4nr = make_r4nr_problem(inst);
  RunReport r = run(r4nr, configure_parsel2(500, r4nr.constants), 1);
  out.note("drift identity on the regression run",
           r.drift_identity_error <= 1e-9,
           "rel err = " + fmt(r.drift_identity_error));

  // closed form vs numerical argmin on the 1-D problem
  ProblemInstance tiny = build_one_dim_problem();
  SolverParams params{10, 1.0, 1.0, 1.0, 0.0};
  Rng rng(3);
  SolverState state = init_state(tiny, rng);
  double worst_argmin = 0.0;
  for (int t = 0; t < 5; ++t) {
    SolverState stepped = state;
    Rng step_rng = rng;
    step(tiny, params, stepped, step_rng);
    Point numerical = lemma4_argmin_oracle(tiny, params, state, stepped.x);
    worst_argmin = std::max(worst_argmin, norm(numerical - stepped.y));
    state = stepped;
    rng = step_rng;
  }
  out.note("closed-form update matches the numerical argmin",
           worst_argmin <= 1e-7, "max dev = " + fmt(worst_argmin));

  return out.exit_code();
}

int check_bounds() {
  CheckPrinter out;

  ProblemInstance one_dim = build_one_dim_problem();
  auto net = std::make_shared<DagNetwork>(default_minflow_network());
  ProblemInstance f1 = make_minflow_problem(
      build_minflow(net, MinFlowFormulation::F1));

  for (auto* entry : {&one_dim, &f1}) {
    const char* name = entry == &one_dim ? "1-D" : "flow F1";
    for (int T : {100, 400, 1600}) {
      SolverParams params = configure_parsel2(T, entry->constants);
      RunReport r = run(*entry, params, 7);
      const double gap = r.objective - *entry->reference_optimum;
      const double bound = theorem1_bound(params, entry->constants, T);
      out.note("objective gap within bound: " + std::string(name) +
                   " T=" + std::to_string(T),
               gap <= bound && gap >= -1e-9,
               "gap = " + fmt(gap) + ", bound = " + fmt(bound));
    }
  }

  const int T = 1600;
  SolverParams params = configure_parsel2(T, one_dim.constants);
  double worst = -std::numeric_limits<double>::infinity();
  RunOptions options;
  options.observer = [&](const SolverState& s) {
    const double bound = theorem3_qbound(params, one_dim.constants, s.t, T,
                                         0.0, {}, {}, QBoundMode::General);
    worst = std::max(worst, norm(s.drift) - bound);
  };
  run(one_dim, params, 9, options);
  out.note("drift norm within the bound at every step", worst <= 0.0,
           "max (||Q|| - bound) = " + fmt(worst));

  return out.exit_code();
}

int check_oracles(int power_iters) {
  CheckPrinter out;
  Rng rng(11);

  // nuclear LMO against the analytic optimum
  double worst_gap = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    NuclearBall ball(4, 5, 2.0);
    Eigen::MatrixXd z(4, 5);
    for (int j = 0; j < 5; ++j) {
      for (int i = 0; i < 4; ++i) z(i, j) = rng.normal();
    }
    Point zp = Point::from_matrix(z);
    Point c = nuclear_lmo_exact(ball, zp);
    worst_gap = std::max(worst_gap, std::abs(measure_lmo_gap(ball, c, zp)));
  }
  out.note("exact nuclear LMO reaches the SVD optimum", worst_gap <= 1e-9,
           "max |gap| = " + fmt(worst_gap));

  // projection feasibility and idempotence
  double worst_feas = 0.0, worst_idem = 0.0;
  NuclearBall ball(4, 5, 1.5);
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::MatrixXd z(4, 5);
    for (int j = 0; j < 5; ++j) {
      for (int i = 0; i < 4; ++i) z(i, j) = 2.0 * rng.normal();
    }
    Point p = nuclear_projection(ball, Point::from_matrix(z));
    worst_feas = std::max(worst_feas, nuclear_norm(p) - 1.5);
    worst_idem = std::max(worst_idem, norm(nuclear_projection(ball, p) - p));
  }
  out.note("nuclear projection feasible", worst_feas <= 1e-8,
           "max excess = " + fmt(worst_feas));
  out.note("nuclear projection idempotent", worst_idem <= 1e-10,
           "max drift = " + fmt(worst_idem));

  // empirical LMO error of the power-iteration oracle on a regression run
  auto inst = std::make_shared<R4nrInstance>(
      gen_r4nr(50, 20, 30, 5, 2.0, 0.0, 42));
  R4nrProblemOptions opts;
  opts.power_iters = power_iters;
  ProblemInstance problem = make_r4nr_problem(inst, opts);
  RunOptions run_opts;
  run_opts.measure_lmo_gap = true;
  RunReport r = run(problem, configure_parsel2(300, problem.constants), 5,
                    run_opts);
  const auto& gaps = r.stats.measured_gaps;
  double min_gap = 0.0, max_gap = 0.0, mean_gap = 0.0;
  for (double g : gaps) {
    min_gap = std::min(min_gap, g);
    max_gap = std::max(max_gap, g);
    mean_gap += g;
  }
  if (!gaps.empty()) mean_gap /= static_cast<double>(gaps.size());
  const double d2 = problem.constants.D * problem.constants.D;
  out.note("measured LMO errors are nonnegative", min_gap >= -1e-9,
           "min = " + fmt(min_gap));
  std::cout << "  measured LMO error summary (power budget "
            << power_iters << "): count = " << gaps.size()
            << ", mean/D^2 = " << fmt(mean_gap / d2)
            << ", max/D^2 = " << fmt(max_gap / d2) << "\n";

  return out.exit_code();
}

// ---------------------------------------------------------------------------
// gen

int cmd_gen(const std::string& what, const RunConfig& cfg,
            const std::string& out_path) {
  if (out_path.empty()) throw ConfigError("gen needs an output path");
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + out_path);
  if (what == "minflow") {
    default_minflow_network().write(out);
  } else if (what == "r4nr") {
    R4nrInstance inst =
        gen_r4nr(cfg.r4nr.n, cfg.r4nr.q, cfg.r4nr.p, cfg.r4nr.rank,
                 cfg.r4nr.laplace_scale, cfg.r4nr.gamma, cfg.r4nr.seed);
    write_r4nr(inst, out);
  } else {
    throw ConfigError("gen target must be 'minflow' or 'r4nr'");
  }
  std::cout << "wrote " << out_path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"projection-free nonsmooth constrained solver"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<int> override_T;
  std::optional<std::uint64_t> override_seed;
  std::optional<std::string> override_output;
  std::optional<int> override_stride;
  std::optional<double> override_delta;
  std::optional<int> override_fanout;

  CLI::App* solve = app.add_subcommand("solve", "run a solver, write CSV");
  solve->add_option("--config", config_path, "JSON config file")->required();
  solve->add_option("--T", override_T, "override iteration count");
  solve->add_option("--seed", override_seed, "override seed");
  solve->add_option("--output", override_output, "override output path");
  solve->add_option("--stride", override_stride, "override record stride");
  solve->add_option("--delta", override_delta, "override LMO budget");
  solve->add_option("--fanout", override_fanout,
                    "run this many consecutive seeds in parallel");

  CLI::App* check = app.add_subcommand("check", "run a property suite");
  std::string suite;
  int power_iters = 2;
  check->add_option("suite", suite, "invariants | bounds | oracles")
      ->required();
  check->add_option("--power", power_iters,
                    "power-iteration budget for the oracle suite");

  CLI::App* gen = app.add_subcommand("gen", "write a problem fixture");
  std::string gen_what, gen_out;
  gen->add_option("target", gen_what, "minflow | r4nr")->required();
  gen->add_option("--out", gen_out, "output file")->required();
  gen->add_option("--config", config_path, "JSON config for parameters");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      RunConfig cfg = load_config(config_path);
      if (override_T) cfg.T = *override_T;
      if (override_seed) cfg.seed = *override_seed;
      if (override_output) cfg.output = *override_output;
      if (override_stride) cfg.record_stride = *override_stride;
      if (override_delta) cfg.delta = *override_delta;
      if (override_fanout) cfg.fanout = *override_fanout;
      return cmd_solve(cfg);
    }
    if (check->parsed()) {
      if (suite == "invariants") return check_invariants();
      if (suite == "bounds") return check_bounds();
      if (suite == "oracles") return check_oracles(power_iters);
      throw ConfigError("unknown check suite: " + suite);
    }
    if (gen->parsed()) {
      RunConfig cfg;
      if (!config_path.empty()) cfg = load_config(config_path);
      return cmd_gen(gen_what, cfg, gen_out);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const ParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const InvalidConstantsError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const InfeasibleError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const ProjectionUnavailableError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const WrongFormulationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const SolverError& e) {
    std::cerr << "oracle error: " << e.what() << "\n";
    return kExitOracleError;
  }
  return kExitConfigError;
}
