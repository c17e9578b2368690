#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wearnet/netmodel.hpp"

namespace wearnet {

enum class PlanKind { losball_sweep, mean_count_sweep, coverage_compare, se_compare, nakagami_sweep };

PlanKind parse_plan_kind(std::string_view s);
const char* to_string(PlanKind kind);

class PlanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownFigure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One figure's worth of work.
///
/// | kind             | grid varies | family varies |
/// |------------------|-------------|---------------|
/// | losball_sweep    | r_net       | lambda        |
/// | mean_count_sweep | lambda      | W             |
/// | coverage_compare | beta (dB)   | -             |
/// | se_compare       | eta         | -             |
/// | nakagami_sweep   | m           | -             |
struct ExperimentPlan {
  PlanKind kind = PlanKind::coverage_compare;
  NetworkConfig base;
  std::vector<double> grid;
  std::vector<double> family;
  std::filesystem::path out_dir = ".";
  std::uint64_t seed = 1;
  std::size_t trials = 100000;
  double tolerance = 0.0;  // sup-norm bound for the compare kinds
};

/// Plan with the default grid, family and tolerance for its kind.
ExperimentPlan default_plan(PlanKind kind, const NetworkConfig& base);

/// Throws PlanError (or ConfigError) if the plan cannot run.
void check_plan(const ExperimentPlan& plan);

struct PlanSummary {
  bool passed = false;
  double deviation = 0.0;  // sup-norm for compare kinds, max |z| for mean_count_sweep
  std::vector<std::filesystem::path> artifacts;
  std::string report;  // key = value lines, also written to summary.txt
};

/// Runs the plan, writes one CSV per curve plus summary.txt into out_dir.
PlanSummary run_plan(const ExperimentPlan& plan);

/// Largest absolute difference between two curves sampled on the same grid.
double sup_norm(const std::vector<double>& a, const std::vector<double>& b);

/// Canonical config text for fig3, fig5, fig6, fig7 or fig8. Values the model
/// description leaves open are written as REQUIRED.
std::string emit_figure_config(std::string_view figure_id);

}  // namespace wearnet
