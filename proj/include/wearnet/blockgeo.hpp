#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wearnet/random.hpp"

namespace wearnet {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  static Point2 polar(double r, double phi);
  double norm() const;
  double angle() const;  // in (-pi, pi]
};

/// One sampled realization of interferers and blockage centers.
struct Deployment {
  std::vector<Point2> interferers;
  std::vector<Point2> blockages;
};

/// PPP of density `lambda` on the annulus r_in <= |x| <= r_out. Radial law
/// 2r/(r_out^2 - r_in^2), angle uniform.
std::vector<Point2> sample_ppp_annulus(double lambda, double r_in, double r_out, RandomStream& rng);

/// Samples interferers on the disk of radius r_net and blockage centers on
/// radius r_net + W/2, so that no interferer's blocking region is truncated.
Deployment sample_deployment(double lambda, double net_radius, double diameter, RandomStream& rng);

/// Area of the stadium of blockage centers that block a link of length r.
double blocking_area(double r, double diameter);

/// Probability that an interferer at distance r is blocked by a PPP(lambda)
/// of diameter-W bodies: 1 - exp(-lambda * blocking_area(r, W)).
double blockage_probability(double r, double lambda, double diameter);

/// Distance from c to the segment [0, x].
double segment_distance(Point2 x, Point2 c);

/// Serial reference predicate: some blockage disk meets the segment [0, x].
/// Closed comparison (<= W/2).
bool is_blocked(Point2 x, std::span<const Point2> blockages, double diameter);

/// Angular-bin index over blockage centers. A blockage at (rho, psi) can only
/// block points whose bearing lies within asin(W / 2 rho) of psi, so each
/// query only runs the exact predicate on the blockages registered in its bin.
/// Agrees exactly with is_blocked().
class BlockageIndex {
 public:
  BlockageIndex(std::span<const Point2> blockages, double diameter, int bins = 256);

  bool blocked(Point2 x) const;

 private:
  struct Entry {
    Point2 c;
    double near;  // rho - W/2: no point closer than this can be blocked by it
  };

  int bin_of(double phi) const;

  double diameter_;
  double half_;
  int bins_;
  bool covers_origin_ = false;
  std::vector<std::uint32_t> offsets_;
  std::vector<Entry> entries_;
};

/// Debug dump: CSV with columns kind{I,B}, x, y.
std::string deployment_csv(const Deployment& d);

}  // namespace wearnet
