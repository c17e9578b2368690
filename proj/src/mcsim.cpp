#include "wearnet/mcsim.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "parallel.hpp"
#include "wearnet/analytic.hpp"
#include "wearnet/losball.hpp"

namespace wearnet {

SimMode parse_mode(std::string_view s) {
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (lower == "full") return SimMode::full;
  if (lower == "losball") return SimMode::losball;
  if (lower == "annulus") return SimMode::annulus;
  throw std::invalid_argument("unknown simulation mode '" + std::string(s) + "' (full|losball|annulus)");
}

const char* to_string(SimMode mode) {
  switch (mode) {
    case SimMode::full: return "full";
    case SimMode::losball: return "losball";
    case SimMode::annulus: return "annulus";
  }
  return "?";
}

SimulationSetup make_setup(const ValidatedConfig& config) {
  const NetworkConfig& c = config.raw();
  const double r_los = los_ball_radius(c.lambda, c.blockage_diameter, c.net_radius);
  return SimulationSetup{config, r_los, nlos_mean_power(config, r_los),
                         c.tx.main_gain * c.rx.main_gain * std::pow(c.ref_distance, -c.alpha_los)};
}

double sample_nakagami_power(int m, RandomStream& rng) { return rng.unit_gamma(m); }

namespace {

// Received power from one interferer at p: activity and transmit lobe per
// the categorical mark, receive lobe from the bearing (receiver points at 0).
double contribution(const NetworkConfig& c, Point2 p, double alpha, int fading, RandomStream& rng) {
  if (!(rng.uniform() < c.p_t)) return 0.0;
  const double tx = rng.uniform() < c.tx.main_fraction() ? c.tx.main_gain : c.tx.side_gain;
  const double rx = std::abs(p.angle()) <= 0.5 * c.rx.beamwidth ? c.rx.main_gain : c.rx.side_gain;
  const double h = rng.unit_gamma(fading);
  return c.power_ratio * tx * rx * h * std::pow(p.norm(), -alpha);
}

double ball_interference(const NetworkConfig& c, double r_los, RandomStream& rng, std::uint32_t& count) {
  const auto pts = sample_ppp_annulus(c.lambda, 0.0, r_los, rng);
  count = static_cast<std::uint32_t>(pts.size());
  double sum = 0.0;
  for (const auto& p : pts) sum += contribution(c, p, c.alpha_los, c.m_los, rng);
  return sum;
}

double annulus_interference(const NetworkConfig& c, double r_los, RandomStream& rng) {
  const auto pts = sample_ppp_annulus(c.lambda, r_los, c.net_radius, rng);
  double sum = 0.0;
  for (const auto& p : pts) sum += contribution(c, p, c.alpha_nlos, c.m_nlos, rng);
  return sum;
}

double ratio(double signal, double denom) {
  return denom > 0.0 ? signal / denom : std::numeric_limits<double>::infinity();
}

}  // namespace

double sample_annulus_interference(const SimulationSetup& setup, RandomStream& rng) {
  return annulus_interference(setup.config.raw(), setup.r_los, rng);
}

TrialOutcome run_trial(SimMode mode, const SimulationSetup& setup, RandomStream& rng) {
  const NetworkConfig& c = setup.config.raw();
  const double signal = setup.signal_scale * rng.unit_gamma(c.m_los);
  TrialOutcome out;

  switch (mode) {
    case SimMode::full: {
      const Deployment d = sample_deployment(c.lambda, c.net_radius, c.blockage_diameter, rng);
      const BlockageIndex index(d.blockages, c.blockage_diameter);
      double sum = 0.0;
      std::uint32_t los = 0;
      for (const auto& p : d.interferers) {
        if (index.blocked(p)) {
          sum += contribution(c, p, c.alpha_nlos, c.m_nlos, rng);
        } else {
          ++los;
          sum += contribution(c, p, c.alpha_los, c.m_los, rng);
        }
      }
      out.interferer_count_los = los;
      out.aggregate_interference = sum;
      out.sinr = ratio(signal, c.noise_power + sum);
      break;
    }
    case SimMode::losball: {
      out.aggregate_interference = ball_interference(c, setup.r_los, rng, out.interferer_count_los);
      out.sinr = ratio(signal, c.noise_power + setup.sigma2_nlos + out.aggregate_interference);
      break;
    }
    case SimMode::annulus: {
      const double ball = ball_interference(c, setup.r_los, rng, out.interferer_count_los);
      out.aggregate_interference = ball + annulus_interference(c, setup.r_los, rng);
      out.sinr = ratio(signal, c.noise_power + out.aggregate_interference);
      break;
    }
  }
  return out;
}

std::vector<TrialOutcome> run_trials_serial(SimMode mode, const SimulationSetup& setup, std::size_t n_trials,
                                            std::uint64_t master_seed) {
  return detail::serial_map<TrialOutcome>(n_trials, [&](std::size_t k) {
    RandomStream rng = RandomStream::substream(master_seed, k);
    return run_trial(mode, setup, rng);
  });
}

std::vector<TrialOutcome> run_trials(SimMode mode, const SimulationSetup& setup, std::size_t n_trials,
                                     std::uint64_t master_seed) {
  return detail::parallel_map<TrialOutcome>(n_trials, [&](std::size_t k) {
    RandomStream rng = RandomStream::substream(master_seed, k);
    return run_trial(mode, setup, rng);
  });
}

namespace {

EmpiricalDistribution finish(std::vector<double> thresholds, const std::vector<std::size_t>& hits, std::size_t n) {
  EmpiricalDistribution d;
  d.thresholds = std::move(thresholds);
  d.trials = n;
  for (std::size_t count : hits) {
    const double p = n ? static_cast<double>(count) / static_cast<double>(n) : 0.0;
    d.values.push_back(p);
    d.std_error.push_back(n ? std::sqrt(p * (1.0 - p) / static_cast<double>(n)) : 0.0);
  }
  return d;
}

}  // namespace

EmpiricalDistribution sinr_ccdf(std::span<const TrialOutcome> outcomes, std::span<const double> thresholds) {
  std::vector<std::size_t> hits(thresholds.size(), 0);
  for (std::size_t j = 0; j < thresholds.size(); ++j)
    for (const auto& o : outcomes)
      if (o.sinr > thresholds[j]) ++hits[j];
  return finish({thresholds.begin(), thresholds.end()}, hits, outcomes.size());
}

EmpiricalDistribution spectral_efficiency_cdf(std::span<const TrialOutcome> outcomes,
                                              std::span<const double> thresholds) {
  std::vector<double> eta;
  eta.reserve(outcomes.size());
  for (const auto& o : outcomes) eta.push_back(std::log2(1.0 + o.sinr));
  std::vector<std::size_t> hits(thresholds.size(), 0);
  for (std::size_t j = 0; j < thresholds.size(); ++j)
    for (double e : eta)
      if (e <= thresholds[j]) ++hits[j];
  return finish({thresholds.begin(), thresholds.end()}, hits, outcomes.size());
}

EmpiricalDistribution simulate_ccdf(SimMode mode, const ValidatedConfig& config, std::size_t n_trials,
                                    std::span<const double> thresholds, std::uint64_t master_seed) {
  const auto outcomes = run_trials(mode, make_setup(config), n_trials, master_seed);
  return sinr_ccdf(outcomes, thresholds);
}

MeanEstimate mean_estimate(std::span<const double> samples) {
  MeanEstimate est;
  est.samples = samples.size();
  if (samples.empty()) return est;
  auto compensated = [&](auto&& value) {
    double sum = 0.0, comp = 0.0;
    for (double s : samples) {
      const double x = value(s);
      const double t = sum + x;
      comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
      sum = t;
    }
    return sum + comp;
  };
  const double n = static_cast<double>(samples.size());
  est.mean = compensated([](double s) { return s; }) / n;
  if (samples.size() > 1) {
    const double ss = compensated([&](double s) { return (s - est.mean) * (s - est.mean); });
    est.std_error = std::sqrt(ss / (n - 1.0) / n);
  }
  return est;
}

MeanEstimate simulate_ergodic_se(SimMode mode, const ValidatedConfig& config, std::size_t n_trials,
                                 std::uint64_t master_seed) {
  const auto outcomes = run_trials(mode, make_setup(config), n_trials, master_seed);
  std::vector<double> eta;
  eta.reserve(outcomes.size());
  for (const auto& o : outcomes) eta.push_back(std::log2(1.0 + o.sinr));
  return mean_estimate(eta);
}

MeanEstimate estimate_mean_los_count(const ValidatedConfig& config, std::size_t n_deployments,
                                     std::uint64_t master_seed) {
  const NetworkConfig& c = config.raw();
  const auto counts = detail::parallel_map<double>(n_deployments, [&](std::size_t k) {
    RandomStream rng = RandomStream::substream(master_seed, k);
    const Deployment d = sample_deployment(c.lambda, c.net_radius, c.blockage_diameter, rng);
    const BlockageIndex index(d.blockages, c.blockage_diameter);
    double los = 0.0;
    for (const auto& p : d.interferers)
      if (!index.blocked(p)) los += 1.0;
    return los;
  });
  return mean_estimate(counts);
}

MeanEstimate estimate_nlos_mean_power(const ValidatedConfig& config, std::size_t n_deployments,
                                      std::uint64_t master_seed) {
  const SimulationSetup setup = make_setup(config);
  const auto samples = detail::parallel_map<double>(n_deployments, [&](std::size_t k) {
    RandomStream rng = RandomStream::substream(master_seed, k);
    return sample_annulus_interference(setup, rng);
  });
  return mean_estimate(samples);
}

MeanEstimate estimate_blockage_frequency(double r, double lambda, double diameter, double net_radius,
                                         std::size_t n_deployments, std::uint64_t master_seed) {
  // Only centers within r + W/2 of the receiver can touch the segment, and a
  // PPP restricted to a sub-disk is again a PPP, so sampling the smaller disk
  // gives the same law as sampling r_net + W/2 and discarding the rest.
  const double reach = std::min(r, net_radius) + 0.5 * diameter;
  const auto hits = detail::parallel_map<double>(n_deployments, [&](std::size_t k) {
    RandomStream rng = RandomStream::substream(master_seed, k);
    const Point2 x = Point2::polar(r, kTwoPi * rng.uniform() - kPi);
    const auto blockages = sample_ppp_annulus(lambda, 0.0, reach, rng);
    return is_blocked(x, blockages, diameter) ? 1.0 : 0.0;
  });
  return mean_estimate(hits);
}

}  // namespace wearnet
