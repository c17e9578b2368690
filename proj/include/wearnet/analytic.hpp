#pragma once

#include <span>
#include <vector>

#include "wearnet/netmodel.hpp"
#include "wearnet/quadrature.hpp"

namespace wearnet {

/// Everything the closed-form coverage expression needs, derived once per config.
struct CoverageParams {
  ValidatedConfig config;
  GainPairTable gains;
  double r_los = 0.0;
  double sigma2_nlos = 0.0;
  double sigma2_total = 0.0;  // noise + mean weak-interference power
  double m_tilde = 1.0;       // (m!)^{-1/m}
  QuadratureOptions quad{1e-12, 1e-10, 4000};
};

CoverageParams make_coverage_params(const ValidatedConfig& config);

/// Mean interference power from interferers in the annulus r_los < r <= r_net,
/// averaged over activity, lobe alignment and fading.
double nlos_mean_power(const ValidatedConfig& config, double r_los);

/// Normalized threshold beta * R0^alpha_L / (G_t G_r).
double normalized_threshold(double beta, const CoverageParams& params);

/// Per-interferer Laplace factor at distance R for receive gain `rx_gain`,
/// averaged over activity and transmit lobe.
double t_factor(double rx_gain, double R, int ell, double beta_tilde, const CoverageParams& params);

/// E[exp(-ell m m~ beta~ I)] over the LOS-ball interferer process.
double laplace_term(int ell, double beta_tilde, const CoverageParams& params);

/// SINR CCDF from the gamma-CDF lower bound; an upper bound on the true CCDF.
double coverage_ccdf(double beta, const CoverageParams& params);

/// P[log2(1 + SINR) > t].
double spectral_efficiency_ccdf(double t, const CoverageParams& params);

/// Integral of spectral_efficiency_ccdf over [0, t_max], t_max the first
/// doubling of t where the CCDF drops below 1e-6.
double ergodic_spectral_efficiency(const CoverageParams& params);

enum class CurveKind { analytic, empirical };

struct CoverageCurve {
  std::vector<double> thresholds;
  std::vector<double> ccdf;
  CurveKind kind = CurveKind::analytic;
  std::vector<double> ci_halfwidth;  // empty for analytic curves
};

/// Analytic CCDF on a threshold grid, thresholds evaluated in parallel.
CoverageCurve coverage_curve(std::span<const double> betas, const CoverageParams& params);
/// Single-threaded reference for coverage_curve.
CoverageCurve coverage_curve_serial(std::span<const double> betas, const CoverageParams& params);

}  // namespace wearnet
