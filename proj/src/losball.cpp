#include "wearnet/losball.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wearnet/netmodel.hpp"

namespace wearnet {

namespace {

// 1 - e^{-x}(1 + x). Direct form cancels badly for small x; the series
// sum_{k>=2} (-1)^k (k-1) x^k / k! converges fast there.
double one_minus_exp_poly(double x) {
  if (x < 0.1) {
    double term = x;  // x^k / k! at k = 1
    double sum = 0.0;
    for (int k = 2; k < 30; ++k) {
      term *= -x / k;  // (-1)^(k-1) x^k / k!
      sum -= (k - 1) * term;
      if (std::abs(term) < 1e-20 * std::abs(sum)) break;
    }
    return sum;
  }
  return -std::expm1(-x) - x * std::exp(-x);
}

}  // namespace

double mean_los_interferers(double lambda, double diameter, double net_radius) {
  if (!(lambda > 0.0)) return 0.0;
  const double x = lambda * diameter * net_radius;
  const double scale = kTwoPi * std::exp(-lambda * kPi * diameter * diameter / 4.0);
  // f(x)/(W^2 lambda) = lambda r_net^2 * f(x)/x^2; the second form stays finite as W -> 0.
  if (x < 0.1) return scale * lambda * net_radius * net_radius * (one_minus_exp_poly(x) / (x * x));
  return scale / (diameter * diameter * lambda) * one_minus_exp_poly(x);
}

double los_ball_radius(double lambda, double diameter, double net_radius) {
  if (!(lambda > 0.0)) return net_radius;
  const double r = std::sqrt(mean_los_interferers(lambda, diameter, net_radius) / (lambda * kPi));
  return std::min(r, net_radius);
}

double los_ball_radius_limit(double lambda, double diameter) {
  if (!(lambda > 0.0)) return std::numeric_limits<double>::infinity();
  return std::sqrt(2.0) / (lambda * diameter) * std::exp(-lambda * kPi * diameter * diameter / 8.0);
}

LosBallSummary los_ball_summary(double lambda, double diameter, double net_radius) {
  return {mean_los_interferers(lambda, diameter, net_radius), los_ball_radius(lambda, diameter, net_radius),
          los_ball_radius_limit(lambda, diameter)};
}

}  // namespace wearnet
