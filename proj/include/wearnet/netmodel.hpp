#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wearnet {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double db_to_linear(double db);
double linear_to_db(double linear);
double deg_to_rad(double deg);
double rad_to_deg(double rad);

/// Sectorized antenna: constant main-lobe gain over the beamwidth, side-lobe gain elsewhere.
struct SectorPattern {
  double main_gain = 1.0;  // linear
  double side_gain = 1.0;  // linear
  double beamwidth = kTwoPi;  // radians

  /// Fraction of the circle covered by the main lobe.
  double main_fraction() const { return beamwidth / kTwoPi; }
};

/// Raw model parameters as parsed; not yet checked against the model invariants.
struct NetworkConfig {
  double lambda = 0.0;      // users per m^2
  double blockage_diameter = 0.0;  // W, m
  double net_radius = 0.0;  // m
  SectorPattern tx;
  SectorPattern rx;
  double p_t = 1.0;
  double alpha_los = 0.0;
  double alpha_nlos = 0.0;
  int m_los = 1;
  int m_nlos = 1;
  double ref_distance = 0.0;  // R_0, m
  double noise_power = 0.0;
  double power_ratio = 1.0;   // P_i / P_0
};

enum class Violation {
  LambdaNegative,
  BlockageDiameterNonPositive,
  NetRadiusNotAboveDiameter,
  TxGainOrder,
  TxSideGainNonPositive,
  TxBeamwidthRange,
  RxGainOrder,
  RxSideGainNonPositive,
  RxBeamwidthRange,
  TransmitProbabilityRange,
  AlphaLosNonPositive,
  AlphaNlosTooSmall,
  NakagamiLosRange,
  NakagamiNlosRange,
  RefDistanceNonPositive,
  NoisePowerNegative,
  PowerRatioNonPositive,
  NonFiniteValue,
};

const char* to_string(Violation v);

/// Raised by validate(); carries every invariant that failed, not just the first.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<Violation> violations);
  explicit ConfigError(const std::string& message);

  const std::vector<Violation>& violations() const { return violations_; }
  bool has(Violation v) const;

 private:
  std::vector<Violation> violations_;
};

/// Upper bound on the LOS Nakagami order; the alternating binomial sum in the
/// coverage expression loses all precision well before this.
constexpr int kMaxNakagami = 64;
/// Above this order a warning is logged by the coverage evaluation.
constexpr int kNakagamiWarn = 32;

/// A NetworkConfig that satisfied every invariant. Only validate() can build one.
class ValidatedConfig {
 public:
  const NetworkConfig& raw() const { return cfg_; }
  const NetworkConfig* operator->() const { return &cfg_; }

  /// Returns a copy with one field changed, re-validated.
  template <class Fn>
  ValidatedConfig with(Fn&& edit) const;

 private:
  friend ValidatedConfig validate(const NetworkConfig& config);
  explicit ValidatedConfig(const NetworkConfig& c) : cfg_(c) {}
  NetworkConfig cfg_;
};

/// Checks the model invariants. Throws ConfigError listing every violation.
///
/// λ = 0 is accepted (empty network); it is the degenerate case used to
/// check the noise-only link.
ValidatedConfig validate(const NetworkConfig& config);

template <class Fn>
ValidatedConfig ValidatedConfig::with(Fn&& edit) const {
  NetworkConfig c = cfg_;
  edit(c);
  return validate(c);
}

/// Joint (tx, rx) lobe alignment probabilities and gain products.
/// Entry order: main-main, side(tx)-main(rx), main(tx)-side(rx), side-side.
struct GainPairTable {
  std::array<double, 4> q{};
  std::array<double, 4> gain{};

  /// q^T G: mean combined gain over random lobe alignment.
  double mean_gain() const;
};

GainPairTable gain_pairs(const SectorPattern& tx, const SectorPattern& rx);

}  // namespace wearnet
