#include "wearnet/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wearnet/analytic.hpp"
#include "wearnet/config_io.hpp"
#include "wearnet/csv.hpp"
#include "wearnet/losball.hpp"
#include "wearnet/mcsim.hpp"

namespace wearnet {

PlanKind parse_plan_kind(std::string_view s) {
  if (s == "losball_sweep") return PlanKind::losball_sweep;
  if (s == "mean_count_sweep") return PlanKind::mean_count_sweep;
  if (s == "coverage_compare") return PlanKind::coverage_compare;
  if (s == "se_compare") return PlanKind::se_compare;
  if (s == "nakagami_sweep") return PlanKind::nakagami_sweep;
  throw PlanError("unknown plan kind '" + std::string(s) + "'");
}

const char* to_string(PlanKind kind) {
  switch (kind) {
    case PlanKind::losball_sweep: return "losball_sweep";
    case PlanKind::mean_count_sweep: return "mean_count_sweep";
    case PlanKind::coverage_compare: return "coverage_compare";
    case PlanKind::se_compare: return "se_compare";
    case PlanKind::nakagami_sweep: return "nakagami_sweep";
  }
  return "?";
}

ExperimentPlan default_plan(PlanKind kind, const NetworkConfig& base) {
  ExperimentPlan p;
  p.kind = kind;
  p.base = base;
  switch (kind) {
    case PlanKind::losball_sweep:
      p.grid = parse_grid("1:20:0.5");
      p.family = {0.5, 1, 2, 3, 5};
      break;
    case PlanKind::mean_count_sweep:
      p.grid = {1, 2, 3, 4, 5};
      p.family = {base.blockage_diameter};
      p.trials = 10000;
      break;
    case PlanKind::coverage_compare:
      p.grid = parse_grid("-20:30:0.5");
      p.tolerance = 0.03;
      break;
    case PlanKind::se_compare:
      p.grid = parse_grid("0:12:0.05");
      p.tolerance = 0.05;
      break;
    case PlanKind::nakagami_sweep:
      p.grid = {1, 2, 4, 8, 16};
      break;
  }
  return p;
}

void check_plan(const ExperimentPlan& plan) {
  if (plan.grid.empty()) throw PlanError("plan grid is empty");
  if (!std::is_sorted(plan.grid.begin(), plan.grid.end())) throw PlanError("plan grid must be ascending");
  if (plan.trials == 0) throw PlanError("plan needs at least one trial");
  (void)validate(plan.base);
  switch (plan.kind) {
    case PlanKind::losball_sweep:
      if (plan.family.empty()) throw PlanError("losball_sweep needs a lambda family");
      for (double r : plan.grid)
        if (!(r > plan.base.blockage_diameter)) throw PlanError("losball_sweep r_net values must exceed W");
      for (double l : plan.family)
        if (!(l > 0.0)) throw PlanError("losball_sweep lambda values must be positive");
      break;
    case PlanKind::mean_count_sweep:
      if (plan.family.empty()) throw PlanError("mean_count_sweep needs a W family");
      for (double l : plan.grid)
        if (!(l > 0.0)) throw PlanError("mean_count_sweep lambda values must be positive");
      for (double w : plan.family)
        if (!(w > 0.0 && w < plan.base.net_radius)) throw PlanError("mean_count_sweep W values must be in (0, r_net)");
      break;
    case PlanKind::nakagami_sweep:
      for (double m : plan.grid)
        if (m != std::floor(m) || m < 1 || m > kMaxNakagami)
          throw PlanError("nakagami_sweep varies m over integers in [1, 64]");
      break;
    case PlanKind::coverage_compare:
    case PlanKind::se_compare:
      if (!(plan.tolerance > 0.0)) throw PlanError("compare plans need a positive tolerance");
      if (plan.kind == PlanKind::se_compare && plan.grid.front() < 0.0)
        throw PlanError("spectral-efficiency grid must be nonnegative");
      break;
  }
}

double sup_norm(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sup_norm: size mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

namespace {

std::string fmt(double v) { return format_double(v); }

std::string tag(double v) {
  std::string s = format_double(v);
  std::replace(s.begin(), s.end(), '.', 'p');
  std::replace(s.begin(), s.end(), '-', 'm');
  return s;
}

struct Writer {
  const ExperimentPlan& plan;
  PlanSummary& summary;

  void emit(const std::string& name, const CsvTable& table) {
    const auto path = plan.out_dir / name;
    table.write(path);
    summary.artifacts.push_back(path);
  }
};

void run_losball_sweep(const ExperimentPlan& plan, PlanSummary& s, std::ostringstream& rep) {
  Writer w{plan, s};
  bool ok = true;
  for (double lambda : plan.family) {
    NetworkConfig cfg = plan.base;
    cfg.lambda = lambda;
    CsvTable t({"lambda", "W", "r_net", "mean_los", "r_los", "r_los_limit"}, config_hash(cfg), plan.seed);
    double prev = 0.0;
    for (double r : plan.grid) {
      const LosBallSummary b = los_ball_summary(lambda, cfg.blockage_diameter, r);
      t.add_row(std::vector<double>{lambda, cfg.blockage_diameter, r, b.mean_los_count, b.r_los, b.r_los_limit});
      ok = ok && b.r_los <= r && b.r_los >= prev;
      prev = b.r_los;
    }
    const double last = los_ball_radius(lambda, cfg.blockage_diameter, plan.grid.back());
    rep << "lambda_" << tag(lambda) << "_r_los_at_max_r_net = " << fmt(last) << '\n';
    rep << "lambda_" << tag(lambda) << "_r_los_limit = " << fmt(los_ball_radius_limit(lambda, cfg.blockage_diameter))
        << '\n';
    w.emit("losball_lambda_" + tag(lambda) + ".csv", t);
  }
  s.passed = ok;
}

void run_mean_count_sweep(const ExperimentPlan& plan, PlanSummary& s, std::ostringstream& rep) {
  Writer w{plan, s};
  bool ok = true;
  double worst = 0.0;
  for (double diam : plan.family) {
    NetworkConfig cfg = plan.base;
    cfg.blockage_diameter = diam;
    CsvTable t({"lambda", "W", "mean_los_analytic", "mean_los_mc", "mc_stderr", "z"}, config_hash(cfg), plan.seed);
    double prev = 0.0;
    bool first = true;
    for (double lambda : plan.grid) {
      cfg.lambda = lambda;
      const double exact = mean_los_interferers(lambda, diam, cfg.net_radius);
      const MeanEstimate est = estimate_mean_los_count(validate(cfg), plan.trials, plan.seed);
      const double z = est.std_error > 0.0 ? (est.mean - exact) / est.std_error : 0.0;
      worst = std::max(worst, std::abs(z));
      ok = ok && std::abs(z) <= 3.0 && (first || exact < prev);
      prev = exact;
      first = false;
      t.add_row(std::vector<double>{lambda, diam, exact, est.mean, est.std_error, z});
    }
    w.emit("mean_count_W_" + tag(diam) + ".csv", t);
  }
  rep << "max_abs_z = " << fmt(worst) << '\n';
  s.deviation = worst;
  s.passed = ok;
}

void run_coverage_compare(const ExperimentPlan& plan, PlanSummary& s, std::ostringstream& rep) {
  Writer w{plan, s};
  const ValidatedConfig cfg = validate(plan.base);
  const auto hash = config_hash(plan.base);
  std::vector<double> betas;
  for (double db : plan.grid) betas.push_back(db_to_linear(db));

  const CoverageCurve analytic = coverage_curve(betas, make_coverage_params(cfg));
  const EmpiricalDistribution sim = simulate_ccdf(SimMode::losball, cfg, plan.trials, betas, plan.seed);

  CsvTable ta({"beta_dB", "ccdf_analytic"}, hash, plan.seed);
  CsvTable ts({"beta_dB", "ccdf", "stderr"}, hash, plan.seed);
  std::size_t violations = 0;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    ta.add_row(std::vector<double>{plan.grid[i], analytic.ccdf[i]});
    ts.add_row(std::vector<double>{plan.grid[i], sim.values[i], sim.std_error[i]});
    if (analytic.ccdf[i] < sim.values[i] - 3.0 * sim.std_error[i]) ++violations;
  }
  w.emit("coverage_analytic.csv", ta);
  w.emit("coverage_losball.csv", ts);

  s.deviation = sup_norm(analytic.ccdf, sim.values);
  s.passed = s.deviation <= plan.tolerance && violations == 0;
  rep << "sup_norm = " << fmt(s.deviation) << '\n'
      << "tolerance = " << fmt(plan.tolerance) << '\n'
      << "bound_violations = " << violations << '\n';
}

void run_se_compare(const ExperimentPlan& plan, PlanSummary& s, std::ostringstream& rep) {
  Writer w{plan, s};
  const ValidatedConfig cfg = validate(plan.base);
  const auto hash = config_hash(plan.base);
  const SimulationSetup setup = make_setup(cfg);

  std::vector<EmpiricalDistribution> curves;
  for (SimMode mode : {SimMode::full, SimMode::losball, SimMode::annulus}) {
    const auto outcomes = run_trials(mode, setup, plan.trials, plan.seed);
    curves.push_back(spectral_efficiency_cdf(outcomes, plan.grid));
    CsvTable t({"eta_bps_hz", "cdf", "stderr"}, hash, plan.seed);
    for (std::size_t i = 0; i < plan.grid.size(); ++i)
      t.add_row(std::vector<double>{plan.grid[i], curves.back().values[i], curves.back().std_error[i]});
    w.emit(std::string("se_") + to_string(mode) + ".csv", t);
  }

  const CoverageParams params = make_coverage_params(cfg);
  CsvTable ta({"eta_bps_hz", "cdf_analytic"}, hash, plan.seed);
  for (double eta : plan.grid) ta.add_row(std::vector<double>{eta, 1.0 - spectral_efficiency_ccdf(eta, params)});
  w.emit("se_analytic.csv", ta);

  s.deviation = sup_norm(curves[0].values, curves[1].values);
  s.passed = s.deviation <= plan.tolerance;
  rep << "sup_norm_full_vs_losball = " << fmt(s.deviation) << '\n'
      << "sup_norm_annulus_vs_losball = " << fmt(sup_norm(curves[2].values, curves[1].values)) << '\n'
      << "tolerance = " << fmt(plan.tolerance) << '\n';
}

void run_nakagami_sweep(const ExperimentPlan& plan, PlanSummary& s, std::ostringstream& rep) {
  Writer w{plan, s};
  CsvTable t({"m", "ergodic_se_analytic", "ergodic_se_mc", "mc_stderr"}, config_hash(plan.base), plan.seed);
  bool monotone = true;
  std::size_t agree = 0;
  double prev = -1.0;
  for (double mv : plan.grid) {
    NetworkConfig c = plan.base;
    c.m_los = static_cast<int>(mv);
    const ValidatedConfig cfg = validate(c);
    const double analytic = ergodic_spectral_efficiency(make_coverage_params(cfg));
    const MeanEstimate mc = simulate_ergodic_se(SimMode::losball, cfg, plan.trials, plan.seed);
    t.add_row(std::vector<double>{mv, analytic, mc.mean, mc.std_error});
    monotone = monotone && analytic >= prev;
    prev = analytic;
    if (std::abs(analytic - mc.mean) <= 2.0 * mc.std_error) ++agree;
  }
  w.emit("nakagami_sweep.csv", t);
  s.passed = monotone;
  rep << "analytic_nondecreasing = " << (monotone ? "true" : "false") << '\n'
      << "points_within_2se = " << agree << '/' << plan.grid.size() << '\n';
}

}  // namespace

PlanSummary run_plan(const ExperimentPlan& plan) {
  check_plan(plan);
  PlanSummary s;
  std::ostringstream rep;
  rep << "plan = " << to_string(plan.kind) << '\n'
      << "config_hash = " << std::hex << config_hash(plan.base) << std::dec << '\n'
      << "seed = " << plan.seed << '\n'
      << "trials = " << plan.trials << '\n';
  switch (plan.kind) {
    case PlanKind::losball_sweep: run_losball_sweep(plan, s, rep); break;
    case PlanKind::mean_count_sweep: run_mean_count_sweep(plan, s, rep); break;
    case PlanKind::coverage_compare: run_coverage_compare(plan, s, rep); break;
    case PlanKind::se_compare: run_se_compare(plan, s, rep); break;
    case PlanKind::nakagami_sweep: run_nakagami_sweep(plan, s, rep); break;
  }
  rep << "passed = " << (s.passed ? "true" : "false") << '\n';
  s.report = rep.str();
  const auto path = plan.out_dir / "summary.txt";
  write_text_file(path, s.report);
  s.artifacts.push_back(path);
  return s;
}

namespace {

constexpr std::string_view kAntennas =
    "Gt_dB = 6\n"
    "gt_dB = -0.88\n"
    "theta_t_deg = 50\n"
    "Gr_dB = 6\n"
    "gr_dB = -0.88\n"
    "theta_r_deg = 50\n";

constexpr std::string_view kOpenPhysics =
    "alpha_L = REQUIRED\n"
    "alpha_N = REQUIRED\n"
    "R0 = REQUIRED\n"
    "noise_power = REQUIRED\n";

}  // namespace

std::string emit_figure_config(std::string_view figure_id) {
  std::string body;
  if (figure_id == "fig3") {
    body =
        "# LOS-ball radius vs network radius; lambda in {0.5, 1, 2, 3, 5}, r_net swept.\n"
        "lambda = 3\nW = 0.3\nr_net = 10\n";
    body += kAntennas;
    body += "p_t = 1\nm = 1\n";
  } else if (figure_id == "fig5") {
    body =
        "# Mean LOS interferer count vs lambda; W family swept.\n"
        "lambda = 3\nW = 0.3\nr_net = 10\n";
    body += kAntennas;
    body += "p_t = 1\nm = 1\n";
  } else if (figure_id == "fig6") {
    body =
        "# Spectral-efficiency CDF with and without weak-interference averaging.\n"
        "lambda = 3\nW = 0.3\n"
        "r_net = 10  # not stated for this figure\n";
    body += kAntennas;
    body += "p_t = 1\nm = 3  # not stated for this figure\n";
  } else if (figure_id == "fig7") {
    body =
        "# SINR CCDF, analytic vs LOS-ball simulation.\n"
        "lambda = 3\nW = 0.3\n"
        "r_net = 10  # not stated for this figure\n";
    body += kAntennas;
    body += "p_t = 0.8\nm = 3\n";
  } else if (figure_id == "fig8") {
    body =
        "# Ergodic spectral efficiency vs Nakagami m (m swept).\n"
        "lambda = 2\n"
        "W = 0.3  # not stated for this figure\n"
        "r_net = 10  # not stated for this figure\n";
    body += kAntennas;
    body += "p_t = 1\nm = 1\n";
  } else {
    throw UnknownFigure("unknown figure '" + std::string(figure_id) + "' (fig3, fig5, fig6, fig7, fig8)");
  }
  body += kOpenPhysics;
  body += "m_nlos = 1\npower_ratio = 1\n";
  return "# wearnet figure config: " + std::string(figure_id) + "\n" + body;
}

}  // namespace wearnet
