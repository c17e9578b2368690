#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wearnet/netmodel.hpp"

namespace wearnet {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Looks up an environment variable; empty optional when unset.
using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

EnvLookup process_env();

/// Parses the flat `key = value` config format.
///
/// Keys: lambda, W, r_net, Gt_dB, gt_dB, theta_t_deg, Gr_dB, gr_dB,
/// theta_r_deg, p_t, alpha_L, alpha_N, m, m_nlos, R0, noise_power,
/// power_ratio. `#` starts a comment. Unknown or duplicate keys and the
/// placeholder value `REQUIRED` are errors. m_nlos and power_ratio default
/// to 1; everything else must be present. Angles are converted to radians and
/// gains to linear here. When `env` is given, `WEARNET_<key>` overrides the
/// file value for that key.
NetworkConfig parse_config(std::string_view text, const EnvLookup& env = {});

NetworkConfig load_config(const std::filesystem::path& path, const EnvLookup& env = {});

/// Canonical text form (file units, fixed key order).
std::string format_config(const NetworkConfig& config);

/// FNV-1a of format_config().
std::uint64_t config_hash(const NetworkConfig& config);

}  // namespace wearnet
