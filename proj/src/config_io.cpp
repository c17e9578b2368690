#include "wearnet/config_io.hpp"

#include <array>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "wearnet/csv.hpp"

namespace wearnet {

namespace {

constexpr std::array<std::string_view, 17> kKeys = {
    "lambda", "W",     "r_net",   "Gt_dB", "gt_dB", "theta_t_deg", "Gr_dB",       "gr_dB",       "theta_r_deg",
    "p_t",    "alpha_L", "alpha_N", "m",   "m_nlos", "R0",         "noise_power", "power_ratio"};

bool known_key(std::string_view k) {
  for (auto key : kKeys)
    if (key == k) return true;
  return false;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double number(const std::map<std::string, std::string, std::less<>>& kv, std::string_view key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw ConfigError("missing required key '" + std::string(key) + "'");
  if (it->second == "REQUIRED")
    throw ConfigError("key '" + std::string(key) + "' is a REQUIRED placeholder; set a value");
  try {
    return parse_double(it->second);
  } catch (const std::invalid_argument&) {
    throw ConfigError("key '" + std::string(key) + "': not a number: '" + it->second + "'");
  }
}

int integer(const std::map<std::string, std::string, std::less<>>& kv, std::string_view key) {
  const double v = number(kv, key);
  if (v != static_cast<double>(static_cast<long>(v)) || v < -1e9 || v > 1e9)
    throw ConfigError("key '" + std::string(key) + "' must be an integer");
  return static_cast<int>(v);
}

}  // namespace

EnvLookup process_env() {
  return [](const std::string& name) -> std::optional<std::string> {
    if (const char* v = std::getenv(name.c_str())) return std::string(v);
    return std::nullopt;
  };
}

NetworkConfig parse_config(std::string_view text, const EnvLookup& env) {
  std::map<std::string, std::string, std::less<>> kv;
  std::size_t lineno = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (!known_key(key)) throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + std::string(key) + "'");
    if (!kv.emplace(std::string(key), std::string(value)).second)
      throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + std::string(key) + "'");
  }

  if (env) {
    for (auto key : kKeys) {
      if (auto v = env("WEARNET_" + std::string(key))) kv[std::string(key)] = std::string(trim(*v));
    }
  }

  kv.try_emplace("m_nlos", "1");
  kv.try_emplace("power_ratio", "1");

  NetworkConfig c;
  c.lambda = number(kv, "lambda");
  c.blockage_diameter = number(kv, "W");
  c.net_radius = number(kv, "r_net");
  c.tx.main_gain = db_to_linear(number(kv, "Gt_dB"));
  c.tx.side_gain = db_to_linear(number(kv, "gt_dB"));
  c.tx.beamwidth = deg_to_rad(number(kv, "theta_t_deg"));
  c.rx.main_gain = db_to_linear(number(kv, "Gr_dB"));
  c.rx.side_gain = db_to_linear(number(kv, "gr_dB"));
  c.rx.beamwidth = deg_to_rad(number(kv, "theta_r_deg"));
  c.p_t = number(kv, "p_t");
  c.alpha_los = number(kv, "alpha_L");
  c.alpha_nlos = number(kv, "alpha_N");
  c.m_los = integer(kv, "m");
  c.m_nlos = integer(kv, "m_nlos");
  c.ref_distance = number(kv, "R0");
  c.noise_power = number(kv, "noise_power");
  c.power_ratio = number(kv, "power_ratio");
  return c;
}

NetworkConfig load_config(const std::filesystem::path& path, const EnvLookup& env) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open config: " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), env);
}

std::string format_config(const NetworkConfig& c) {
  std::string out;
  auto put = [&](std::string_view k, double v) {
    out += k;
    out += " = ";
    out += format_double(v);
    out += '\n';
  };
  put("lambda", c.lambda);
  put("W", c.blockage_diameter);
  put("r_net", c.net_radius);
  put("Gt_dB", linear_to_db(c.tx.main_gain));
  put("gt_dB", linear_to_db(c.tx.side_gain));
  put("theta_t_deg", rad_to_deg(c.tx.beamwidth));
  put("Gr_dB", linear_to_db(c.rx.main_gain));
  put("gr_dB", linear_to_db(c.rx.side_gain));
  put("theta_r_deg", rad_to_deg(c.rx.beamwidth));
  put("p_t", c.p_t);
  put("alpha_L", c.alpha_los);
  put("alpha_N", c.alpha_nlos);
  put("m", c.m_los);
  put("m_nlos", c.m_nlos);
  put("R0", c.ref_distance);
  put("noise_power", c.noise_power);
  put("power_ratio", c.power_ratio);
  return out;
}

std::uint64_t config_hash(const NetworkConfig& config) { return fnv1a(format_config(config)); }

}  // namespace wearnet
