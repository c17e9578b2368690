#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "wearnet/blockgeo.hpp"
#include "wearnet/netmodel.hpp"
#include "wearnet/random.hpp"

namespace wearnet {

/// FULL: blockage geometry sampled explicitly, every interferer in the network
///       simulated with LOS/NLOS path loss.
/// LOSBALL: interferers only inside R_LOS, all LOS; weak interference replaced
///       by its mean.
/// ANNULUS: LOSBALL inside R_LOS plus the weak interferers outside it
///       simulated explicitly with NLOS path loss instead of averaged.
enum class SimMode { full, losball, annulus };

SimMode parse_mode(std::string_view s);
const char* to_string(SimMode mode);

struct TrialOutcome {
  double sinr = 0.0;
  std::uint32_t interferer_count_los = 0;
  double aggregate_interference = 0.0;  // simulated interferers only, excludes noise and mean NLOS power
};

/// Quantities derived once per config and shared read-only by all trials.
struct SimulationSetup {
  ValidatedConfig config;
  double r_los = 0.0;
  double sigma2_nlos = 0.0;
  double signal_scale = 0.0;  // G_t G_r R0^-alpha_L
};

SimulationSetup make_setup(const ValidatedConfig& config);

/// Unit-mean Gamma(m, 1/m) power gain.
double sample_nakagami_power(int m, RandomStream& rng);

TrialOutcome run_trial(SimMode mode, const SimulationSetup& setup, RandomStream& rng);

/// Trial k uses RandomStream::substream(master_seed, k).
std::vector<TrialOutcome> run_trials_serial(SimMode mode, const SimulationSetup& setup, std::size_t n_trials,
                                            std::uint64_t master_seed);
/// OpenMP version of run_trials_serial; results are identical.
std::vector<TrialOutcome> run_trials(SimMode mode, const SimulationSetup& setup, std::size_t n_trials,
                                     std::uint64_t master_seed);

struct EmpiricalDistribution {
  std::vector<double> thresholds;
  std::vector<double> values;  // CCDF (or CDF for spectral-efficiency curves)
  std::vector<double> std_error;  // sqrt(p (1 - p) / n)
  std::size_t trials = 0;
};

/// Fraction of outcomes with SINR > beta, at each (ascending) threshold.
EmpiricalDistribution sinr_ccdf(std::span<const TrialOutcome> outcomes, std::span<const double> thresholds);
/// Fraction of outcomes with log2(1 + SINR) <= t.
EmpiricalDistribution spectral_efficiency_cdf(std::span<const TrialOutcome> outcomes, std::span<const double> thresholds);

EmpiricalDistribution simulate_ccdf(SimMode mode, const ValidatedConfig& config, std::size_t n_trials,
                                    std::span<const double> thresholds, std::uint64_t master_seed);

struct MeanEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

/// Sample mean and standard error, Neumaier-compensated, in index order.
MeanEstimate mean_estimate(std::span<const double> samples);

/// Mean of log2(1 + SINR) over simulated trials.
MeanEstimate simulate_ergodic_se(SimMode mode, const ValidatedConfig& config, std::size_t n_trials,
                                 std::uint64_t master_seed);

/// Geometric count of non-blocked interferers per FULL deployment.
MeanEstimate estimate_mean_los_count(const ValidatedConfig& config, std::size_t n_deployments,
                                     std::uint64_t master_seed);

/// Interference power from the annulus r_los < r <= r_net with NLOS path
/// loss and fading order m_nlos, one sample per deployment.
double sample_annulus_interference(const SimulationSetup& setup, RandomStream& rng);
MeanEstimate estimate_nlos_mean_power(const ValidatedConfig& config, std::size_t n_deployments,
                                      std::uint64_t master_seed);

/// Fraction of deployments in which a point at distance r (uniform bearing)
/// is geometrically blocked; blockage centers on the disk r_net + W/2.
MeanEstimate estimate_blockage_frequency(double r, double lambda, double diameter, double net_radius,
                                         std::size_t n_deployments, std::uint64_t master_seed);

}  // namespace wearnet
