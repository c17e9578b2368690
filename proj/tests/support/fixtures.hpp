#pragma once

#include "wearnet/netmodel.hpp"

namespace fixtures {

/// Antennas G = 6 dB, g = -0.88 dB, 50 degree beams at both ends; lambda = 3,
/// W = 0.3, r_net = 10. Path-loss exponents, R0 and noise are our choices
/// (2, 4, 1 m, 0.5); the model leaves them open.
inline wearnet::NetworkConfig reference(double p_t = 0.8, int m = 3) {
  using namespace wearnet;
  NetworkConfig c;
  c.lambda = 3.0;
  c.blockage_diameter = 0.3;
  c.net_radius = 10.0;
  c.tx = {db_to_linear(6.0), db_to_linear(-0.88), deg_to_rad(50.0)};
  c.rx = c.tx;
  c.p_t = p_t;
  c.alpha_los = 2.0;
  c.alpha_nlos = 4.0;
  c.m_los = m;
  c.m_nlos = 1;
  c.ref_distance = 1.0;
  c.noise_power = 0.5;
  c.power_ratio = 1.0;
  return c;
}

}  // namespace fixtures
