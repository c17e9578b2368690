#include "wearnet/netmodel.hpp"

#include <algorithm>
#include <cmath>

namespace wearnet {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }
double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

const char* to_string(Violation v) {
  switch (v) {
    case Violation::LambdaNegative: return "LambdaNegative";
    case Violation::BlockageDiameterNonPositive: return "BlockageDiameterNonPositive";
    case Violation::NetRadiusNotAboveDiameter: return "NetRadiusNotAboveDiameter";
    case Violation::TxGainOrder: return "TxGainOrder";
    case Violation::TxSideGainNonPositive: return "TxSideGainNonPositive";
    case Violation::TxBeamwidthRange: return "TxBeamwidthRange";
    case Violation::RxGainOrder: return "RxGainOrder";
    case Violation::RxSideGainNonPositive: return "RxSideGainNonPositive";
    case Violation::RxBeamwidthRange: return "RxBeamwidthRange";
    case Violation::TransmitProbabilityRange: return "TransmitProbabilityRange";
    case Violation::AlphaLosNonPositive: return "AlphaLosNonPositive";
    case Violation::AlphaNlosTooSmall: return "AlphaNlosTooSmall";
    case Violation::NakagamiLosRange: return "NakagamiLosRange";
    case Violation::NakagamiNlosRange: return "NakagamiNlosRange";
    case Violation::RefDistanceNonPositive: return "RefDistanceNonPositive";
    case Violation::NoisePowerNegative: return "NoisePowerNegative";
    case Violation::PowerRatioNonPositive: return "PowerRatioNonPositive";
    case Violation::NonFiniteValue: return "NonFiniteValue";
  }
  return "Unknown";
}

namespace {

std::string describe(const std::vector<Violation>& vs) {
  std::string msg = "invalid network config:";
  for (Violation v : vs) {
    msg += ' ';
    msg += to_string(v);
  }
  return msg;
}

void check_pattern(const SectorPattern& p, Violation order, Violation side, Violation width,
                   std::vector<Violation>& out) {
  if (!(p.side_gain > 0.0)) out.push_back(side);
  if (!(p.main_gain >= p.side_gain)) out.push_back(order);
  if (!(p.beamwidth > 0.0 && p.beamwidth <= kTwoPi)) out.push_back(width);
}

}  // namespace

ConfigError::ConfigError(std::vector<Violation> violations)
    : std::runtime_error(describe(violations)), violations_(std::move(violations)) {}

ConfigError::ConfigError(const std::string& message) : std::runtime_error(message) {}

bool ConfigError::has(Violation v) const {
  return std::find(violations_.begin(), violations_.end(), v) != violations_.end();
}

ValidatedConfig validate(const NetworkConfig& c) {
  std::vector<Violation> out;

  const double reals[] = {c.lambda,         c.blockage_diameter, c.net_radius,   c.tx.main_gain,
                          c.tx.side_gain,   c.tx.beamwidth,      c.rx.main_gain, c.rx.side_gain,
                          c.rx.beamwidth,   c.p_t,               c.alpha_los,    c.alpha_nlos,
                          c.ref_distance,   c.noise_power,       c.power_ratio};
  if (std::any_of(std::begin(reals), std::end(reals), [](double x) { return !std::isfinite(x); }))
    throw ConfigError(std::vector<Violation>{Violation::NonFiniteValue});

  if (c.lambda < 0.0) out.push_back(Violation::LambdaNegative);
  if (!(c.blockage_diameter > 0.0)) out.push_back(Violation::BlockageDiameterNonPositive);
  if (!(c.net_radius > c.blockage_diameter)) out.push_back(Violation::NetRadiusNotAboveDiameter);
  check_pattern(c.tx, Violation::TxGainOrder, Violation::TxSideGainNonPositive,
                Violation::TxBeamwidthRange, out);
  check_pattern(c.rx, Violation::RxGainOrder, Violation::RxSideGainNonPositive,
                Violation::RxBeamwidthRange, out);
  if (!(c.p_t >= 0.0 && c.p_t <= 1.0)) out.push_back(Violation::TransmitProbabilityRange);
  if (!(c.alpha_los > 0.0)) out.push_back(Violation::AlphaLosNonPositive);
  if (!(c.alpha_nlos > 2.0)) out.push_back(Violation::AlphaNlosTooSmall);
  if (c.m_los < 1 || c.m_los > kMaxNakagami) out.push_back(Violation::NakagamiLosRange);
  if (c.m_nlos < 1 || c.m_nlos > kMaxNakagami) out.push_back(Violation::NakagamiNlosRange);
  if (!(c.ref_distance > 0.0)) out.push_back(Violation::RefDistanceNonPositive);
  if (c.noise_power < 0.0) out.push_back(Violation::NoisePowerNegative);
  if (!(c.power_ratio > 0.0)) out.push_back(Violation::PowerRatioNonPositive);

  if (!out.empty()) throw ConfigError(std::move(out));
  return ValidatedConfig(c);
}

double GainPairTable::mean_gain() const {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) s += q[i] * gain[i];
  return s;
}

GainPairTable gain_pairs(const SectorPattern& tx, const SectorPattern& rx) {
  const double ft = tx.main_fraction();
  const double fr = rx.main_fraction();
  GainPairTable t;
  t.q = {ft * fr, (1.0 - ft) * fr, ft * (1.0 - fr), (1.0 - ft) * (1.0 - fr)};
  t.gain = {tx.main_gain * rx.main_gain, tx.side_gain * rx.main_gain,
            tx.main_gain * rx.side_gain, tx.side_gain * rx.side_gain};
  return t;
}

}  // namespace wearnet
