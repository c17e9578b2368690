#pragma once

namespace wearnet {

struct LosBallSummary {
  double mean_los_count = 0.0;
  double r_los = 0.0;        // m
  double r_los_limit = 0.0;  // m, r_net -> infinity
};

/// Mean number of non-blocked interferers in the disk of radius r_net:
/// 2*pi*lambda * integral_0^r_net (1 - p_b(r)) r dr, in closed form.
/// lambda = 0 gives 0.
double mean_los_interferers(double lambda, double diameter, double net_radius);

/// Radius of the ball holding the same mean number of interferers.
/// For lambda = 0 this is the W -> 0 limit, r_net.
double los_ball_radius(double lambda, double diameter, double net_radius);

/// sqrt(2)/(lambda W) * exp(-lambda pi W^2 / 8).
double los_ball_radius_limit(double lambda, double diameter);

LosBallSummary los_ball_summary(double lambda, double diameter, double net_radius);

}  // namespace wearnet
