// wearnet: coverage and spectral efficiency of mmWave wearable links under
// body blockage. Subcommands: losball, coverage, simulate, se-cdf, compare,
// figure-config.

#include <omp.h>

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "wearnet/analytic.hpp"
#include "wearnet/config_io.hpp"
#include "wearnet/csv.hpp"
#include "wearnet/experiment.hpp"
#include "wearnet/losball.hpp"
#include "wearnet/mcsim.hpp"

namespace fs = std::filesystem;
using namespace wearnet;

namespace {

struct Globals {
  std::string config;
  std::string out_dir;
  std::uint64_t seed = 1;
  int threads = 0;
};

// Exit codes: 0 ok, 1 tolerance exceeded, 2 config/usage error, 3 I/O error.
constexpr int kToleranceExceeded = 1;
constexpr int kConfigError = 2;
constexpr int kIoError = 3;

NetworkConfig require_config(const Globals& g) {
  if (g.config.empty()) throw ConfigError("--config is required for this subcommand");
  return load_config(g.config, process_env());
}

fs::path resolve(const Globals& g, const std::string& out) {
  fs::path p(out);
  if (!g.out_dir.empty() && p.is_relative()) p = fs::path(g.out_dir) / p;
  return p;
}

void emit(const Globals& g, const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  write_text_file(resolve(g, out), text);
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    out.push_back(parse_double(std::string_view(s).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<double> grid_or_list(const std::string& s) {
  return s.find(':') != std::string::npos ? parse_grid(s) : parse_list(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wearnet: mmWave wearable network coverage under human-body blockage"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--config", g.config, "Network config file (key = value)")->envname("WEARNET_CONFIG");
  app.add_option("--out-dir", g.out_dir, "Directory for relative output paths")->envname("WEARNET_OUT_DIR");
  app.add_option("--seed", g.seed, "Master seed for Monte Carlo runs")->envname("WEARNET_SEED");
  app.add_option("--threads", g.threads, "Worker threads (0 = auto)")->envname("WEARNET_THREADS");

  // losball
  auto* losball = app.add_subcommand("losball", "LOS-ball radius table over (lambda, W, r_net) grids");
  std::string lb_lambda, lb_w, lb_rnet, lb_out;
  losball->add_option("--lambda", lb_lambda, "Density list or start:stop:step (default: from --config)");
  losball->add_option("--W", lb_w, "Blockage diameter list or grid (default: from --config)");
  losball->add_option("--r-net", lb_rnet, "Network radius list or grid (default: from --config)");
  losball->add_option("--out", lb_out, "Output CSV (default stdout)");

  // coverage
  auto* coverage = app.add_subcommand("coverage", "Analytic SINR CCDF on a threshold grid");
  std::string cov_grid = "-20:30:1", cov_out;
  coverage->add_option("--beta-grid-dB", cov_grid, "start:stop:step in dB");
  coverage->add_option("--out", cov_out, "Output CSV (default stdout)");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo SINR CCDF");
  std::string sim_mode = "losball", sim_grid = "-20:30:1", sim_out;
  std::size_t sim_trials = 100000;
  simulate->add_option("--mode", sim_mode, "full | losball | annulus");
  simulate->add_option("--trials", sim_trials, "Number of trials")->check(CLI::PositiveNumber);
  simulate->add_option("--beta-grid-dB", sim_grid, "start:stop:step in dB");
  simulate->add_option("--out", sim_out, "Output CSV (default stdout)");

  // se-cdf
  auto* se = app.add_subcommand("se-cdf", "Monte Carlo spectral-efficiency CDF");
  std::string se_mode = "losball", se_grid = "0:12:0.1", se_out;
  std::size_t se_trials = 100000;
  se->add_option("--mode", se_mode, "full | losball | annulus");
  se->add_option("--trials", se_trials, "Number of trials")->check(CLI::PositiveNumber);
  se->add_option("--eta-grid", se_grid, "start:stop:step in bits/s/Hz");
  se->add_option("--out", se_out, "Output CSV (default stdout)");

  // compare
  auto* compare = app.add_subcommand("compare", "Run an experiment plan and write CSVs plus summary.txt");
  std::string cmp_kind, cmp_grid, cmp_family;
  std::size_t cmp_trials = 0;
  double cmp_tol = 0.0;
  compare->add_option("--kind", cmp_kind,
                      "losball_sweep | mean_count_sweep | coverage_compare | se_compare | nakagami_sweep")
      ->required();
  compare->add_option("--grid", cmp_grid, "Override the swept grid (list or start:stop:step)");
  compare->add_option("--family", cmp_family, "Override the curve family (list or start:stop:step)");
  compare->add_option("--trials", cmp_trials, "Override the number of trials/deployments");
  compare->add_option("--tolerance", cmp_tol, "Override the sup-norm tolerance");

  // figure-config
  auto* figcfg = app.add_subcommand("figure-config", "Write the canonical config for a figure");
  std::string fig_id, fig_out;
  figcfg->add_option("--figure", fig_id, "fig3 | fig5 | fig6 | fig7 | fig8")->required();
  figcfg->add_option("--out", fig_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (g.threads > 0) omp_set_num_threads(g.threads);

  try {
    if (*losball) {
      std::optional<NetworkConfig> base;
      if (!g.config.empty()) base = require_config(g);
      auto pick = [&](const std::string& flag, auto member) {
        if (!flag.empty()) return grid_or_list(flag);
        if (!base) throw ConfigError("losball needs --config or explicit --lambda/--W/--r-net");
        return std::vector<double>{(*base).*member};
      };
      const auto lambdas = pick(lb_lambda, &NetworkConfig::lambda);
      const auto widths = pick(lb_w, &NetworkConfig::blockage_diameter);
      const auto radii = pick(lb_rnet, &NetworkConfig::net_radius);
      CsvTable t({"lambda", "W", "r_net", "mean_los", "r_los", "r_los_limit"}, base ? config_hash(*base) : 0, g.seed);
      for (double l : lambdas)
        for (double w : widths)
          for (double r : radii) {
            if (!(l > 0.0 && w > 0.0 && r > w)) throw ConfigError("losball grid needs lambda > 0, W > 0, r_net > W");
            const LosBallSummary s = los_ball_summary(l, w, r);
            t.add_row(std::vector<double>{l, w, r, s.mean_los_count, s.r_los, s.r_los_limit});
          }
      emit(g, lb_out, t.str());
    } else if (*coverage) {
      const NetworkConfig raw = require_config(g);
      const auto grid = parse_grid(cov_grid);
      std::vector<double> betas;
      for (double db : grid) betas.push_back(db_to_linear(db));
      const CoverageCurve curve = coverage_curve(betas, make_coverage_params(validate(raw)));
      CsvTable t({"beta_dB", "ccdf_analytic"}, config_hash(raw), g.seed);
      for (std::size_t i = 0; i < grid.size(); ++i) t.add_row(std::vector<double>{grid[i], curve.ccdf[i]});
      emit(g, cov_out, t.str());
    } else if (*simulate) {
      const NetworkConfig raw = require_config(g);
      const auto grid = parse_grid(sim_grid);
      std::vector<double> betas;
      for (double db : grid) betas.push_back(db_to_linear(db));
      const auto d = simulate_ccdf(parse_mode(sim_mode), validate(raw), sim_trials, betas, g.seed);
      CsvTable t({"beta_dB", "ccdf", "stderr"}, config_hash(raw), g.seed);
      for (std::size_t i = 0; i < grid.size(); ++i)
        t.add_row(std::vector<double>{grid[i], d.values[i], d.std_error[i]});
      emit(g, sim_out, t.str());
    } else if (*se) {
      const NetworkConfig raw = require_config(g);
      const auto grid = parse_grid(se_grid);
      const auto outcomes = run_trials(parse_mode(se_mode), make_setup(validate(raw)), se_trials, g.seed);
      const auto d = spectral_efficiency_cdf(outcomes, grid);
      CsvTable t({"eta_bps_hz", "cdf", "stderr"}, config_hash(raw), g.seed);
      for (std::size_t i = 0; i < grid.size(); ++i)
        t.add_row(std::vector<double>{grid[i], d.values[i], d.std_error[i]});
      emit(g, se_out, t.str());
    } else if (*compare) {
      ExperimentPlan plan = default_plan(parse_plan_kind(cmp_kind), require_config(g));
      if (!cmp_grid.empty()) plan.grid = grid_or_list(cmp_grid);
      if (!cmp_family.empty()) plan.family = grid_or_list(cmp_family);
      if (cmp_trials > 0) plan.trials = cmp_trials;
      if (cmp_tol > 0.0) plan.tolerance = cmp_tol;
      plan.seed = g.seed;
      plan.out_dir = g.out_dir.empty() ? fs::path(".") : fs::path(g.out_dir);
      const PlanSummary s = run_plan(plan);
      std::cout << s.report;
      return s.passed ? 0 : kToleranceExceeded;
    } else if (*figcfg) {
      emit(g, fig_out, emit_figure_config(fig_id));
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const PlanError& e) {
    std::cerr << "plan error: " << e.what() << '\n';
    return kConfigError;
  } catch (const UnknownFigure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
