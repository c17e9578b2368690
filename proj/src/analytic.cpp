#include "wearnet/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <iostream>

#include "wearnet/losball.hpp"

namespace wearnet {

namespace {

// Neumaier-compensated sum in extended precision; the binomial terms
// alternate in sign and grow like C(m, l).
class CompensatedSum {
 public:
  void add(long double x) {
    const long double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  long double value() const { return sum_ + comp_; }

 private:
  long double sum_ = 0.0L;
  long double comp_ = 0.0L;
};

long double binomial(int n, int k) {
  long double c = 1.0L;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// 1 - (1 + u)^{-m}, accurate for small u.
double one_minus_inv_pow(double u, int m) { return -std::expm1(-m * std::log1p(u)); }

}  // namespace

double nlos_mean_power(const ValidatedConfig& config, double r_los) {
  const NetworkConfig& c = config.raw();
  if (!(c.lambda > 0.0) || c.p_t == 0.0 || r_los >= c.net_radius) return 0.0;
  const double a = c.alpha_nlos;
  const double radial = (std::pow(r_los, 2.0 - a) - std::pow(c.net_radius, 2.0 - a)) / (a - 2.0);
  return c.power_ratio * kTwoPi * c.lambda * radial * c.p_t * gain_pairs(c.tx, c.rx).mean_gain();
}

CoverageParams make_coverage_params(const ValidatedConfig& config) {
  const NetworkConfig& c = config.raw();
  if (c.m_los > kNakagamiWarn)
    std::clog << "wearnet: warning: m = " << c.m_los
              << " is above " << kNakagamiWarn
              << "; the alternating binomial sum loses precision\n";
  const double r_los = los_ball_radius(c.lambda, c.blockage_diameter, c.net_radius);
  const double nlos = nlos_mean_power(config, r_los);
  return CoverageParams{config,
                        gain_pairs(c.tx, c.rx),
                        r_los,
                        nlos,
                        c.noise_power + nlos,
                        std::exp(-std::lgamma(c.m_los + 1.0) / c.m_los)};
}

double normalized_threshold(double beta, const CoverageParams& params) {
  const NetworkConfig& c = params.config.raw();
  return beta * std::pow(c.ref_distance, c.alpha_los) / (c.tx.main_gain * c.rx.main_gain);
}

double t_factor(double rx_gain, double R, int ell, double beta_tilde, const CoverageParams& params) {
  const NetworkConfig& c = params.config.raw();
  const double k = ell * params.m_tilde * beta_tilde * c.power_ratio * rx_gain * std::pow(R, -c.alpha_los);
  const double ft = c.tx.main_fraction();
  const double main = std::pow(1.0 + k * c.tx.main_gain, -c.m_los);
  const double side = std::pow(1.0 + k * c.tx.side_gain, -c.m_los);
  return (1.0 - c.p_t) + c.p_t * (ft * main + (1.0 - ft) * side);
}

double laplace_term(int ell, double beta_tilde, const CoverageParams& params) {
  const NetworkConfig& c = params.config.raw();
  const double R = params.r_los;
  if (!(c.lambda > 0.0) || c.p_t == 0.0 || !(R > 0.0) || !(beta_tilde > 0.0)) return 1.0;

  // R^2 - 2 sum q_i int (1 + k_i r^-a)^-m r dr, rewritten with sum q_i = 1
  // as 2 sum q_i int [1 - (1 + k_i r^-a)^-m] r dr to avoid cancellation.
  const double a = c.alpha_los;
  const int m = c.m_los;
  double deficit = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (params.gains.q[i] == 0.0) continue;
    const double k = ell * params.m_tilde * beta_tilde * c.power_ratio * params.gains.gain[i];
    auto f = [k, a, m](double r) {
      if (r <= 0.0) return 0.0;
      return one_minus_inv_pow(k * std::pow(r, -a), m) * r;
    };
    // The integrand bends at r ~ k^{1/a}; splitting there keeps panels short.
    const double knee = std::pow(k, 1.0 / a);
    double integral = 0.0;
    if (knee > 0.0 && knee < R)
      integral = integrate(f, 0.0, knee, params.quad) + integrate(f, knee, R, params.quad);
    else
      integral = integrate(f, 0.0, R, params.quad);
    deficit += params.gains.q[i] * integral;
  }
  return std::exp(-c.lambda * kPi * c.p_t * 2.0 * deficit);
}

double coverage_ccdf(double beta, const CoverageParams& params) {
  if (!(beta > 0.0)) return 1.0;
  const int m = params.config->m_los;
  const double bt = normalized_threshold(beta, params);
  const double mm = m * params.m_tilde * bt;
  CompensatedSum sum;
  for (int ell = 1; ell <= m; ++ell) {
    const long double sign = (ell % 2 == 1) ? 1.0L : -1.0L;
    const long double term = binomial(m, ell) * std::exp(-static_cast<long double>(ell) * mm * params.sigma2_total) *
                             laplace_term(ell, bt, params);
    sum.add(sign * term);
  }
  return std::clamp(static_cast<double>(sum.value()), 0.0, 1.0);
}

double spectral_efficiency_ccdf(double t, const CoverageParams& params) {
  if (!(t > 0.0)) return 1.0;
  return coverage_ccdf(std::expm1(t * std::log(2.0)), params);
}

double ergodic_spectral_efficiency(const CoverageParams& params) {
  double t_max = 1.0;
  while (spectral_efficiency_ccdf(t_max, params) >= 1e-6 && t_max < 1024.0) t_max *= 2.0;
  QuadratureOptions opts{1e-9, 1e-9, 2000};
  return std::max(0.0, integrate([&](double t) { return spectral_efficiency_ccdf(t, params); }, 0.0, t_max, opts));
}

CoverageCurve coverage_curve_serial(std::span<const double> betas, const CoverageParams& params) {
  CoverageCurve out;
  out.kind = CurveKind::analytic;
  out.thresholds.assign(betas.begin(), betas.end());
  out.ccdf.reserve(betas.size());
  for (double b : betas) out.ccdf.push_back(coverage_ccdf(b, params));
  return out;
}

CoverageCurve coverage_curve(std::span<const double> betas, const CoverageParams& params) {
  CoverageCurve out;
  out.kind = CurveKind::analytic;
  out.thresholds.assign(betas.begin(), betas.end());
  out.ccdf.assign(betas.size(), 0.0);
  std::exception_ptr failure;
  const auto n = static_cast<long>(betas.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    try {
      out.ccdf[static_cast<std::size_t>(i)] = coverage_ccdf(betas[static_cast<std::size_t>(i)], params);
    } catch (...) {
#pragma omp critical(wearnet_curve_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace wearnet
