#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "wearnet/blockgeo.hpp"
#include "wearnet/mcsim.hpp"
#include "wearnet/netmodel.hpp"

using namespace wearnet;

TEST_SUITE("blockgeo") {
  TEST_CASE("blocking area is a stadium") {
    CHECK(blocking_area(0.0, 0.3) == doctest::Approx(0.0706858347).epsilon(1e-9));
    CHECK(blocking_area(0.5, 0.3) == doctest::Approx(0.2206858347).epsilon(1e-9));
    CHECK(blocking_area(1.0, 1e-12) == doctest::Approx(0.0));
  }

  TEST_CASE("blockage probability") {
    CHECK(blockage_probability(0.7, 0.0, 0.3) == 0.0);
    CHECK(blockage_probability(0.5, 3.0, 0.3) == doctest::Approx(0.4842).epsilon(1e-4));
    CHECK(blockage_probability(1.0, 3.0, 0.3) == doctest::Approx(0.67112).epsilon(1e-5));
    CHECK(blockage_probability(1e6, 3.0, 0.3) == 1.0);
    for (double lambda : {0.5, 1.0, 3.0})
      for (double w : {0.1, 0.3, 0.6})
        CHECK(blockage_probability(0.0, lambda, w) == doctest::Approx(1.0 - std::exp(-lambda * kPi * w * w / 4.0)).epsilon(1e-12));
  }

  TEST_CASE("blockage probability is monotone in r, lambda and W") {
    double prev = -1.0;
    for (int i = 0; i <= 100; ++i) {
      const double p = blockage_probability(0.1 * i, 3.0, 0.3);
      CHECK(p >= prev);
      prev = p;
    }
    CHECK(blockage_probability(1.0, 4.0, 0.3) > blockage_probability(1.0, 3.0, 0.3));
    CHECK(blockage_probability(1.0, 3.0, 0.4) > blockage_probability(1.0, 3.0, 0.3));
  }

  TEST_CASE("is_blocked boundary cases") {
    const Point2 x{2.0, 0.0};
    const double w = 0.3;
    const std::vector<Point2> mid{{1.0, 0.0}};
    CHECK(is_blocked(x, mid, w));
    const std::vector<Point2> just_out{{1.0, 0.15 + 1e-9}};
    CHECK_FALSE(is_blocked(x, just_out, w));
    const std::vector<Point2> just_in{{1.0, 0.15 - 1e-9}};
    CHECK(is_blocked(x, just_in, w));
    CHECK_FALSE(is_blocked(x, std::vector<Point2>{}, w));
    // Interferer inside a body beyond its own end of the segment.
    const std::vector<Point2> past_end{{2.1, 0.0}};
    CHECK(is_blocked(x, past_end, w));
    // Behind the receiver.
    const std::vector<Point2> behind{{-0.2, 0.0}};
    CHECK_FALSE(is_blocked(x, behind, w));
    const std::vector<Point2> on_receiver{{-0.1, 0.0}};
    CHECK(is_blocked(x, on_receiver, w));
  }

  TEST_CASE("is_blocked is rotation invariant and monotone in the blockage set") {
    RandomStream rng(11);
    for (int trial = 0; trial < 300; ++trial) {
      const Deployment d = sample_deployment(2.0, 3.0, 0.3, rng);
      const double rot = kTwoPi * rng.uniform();
      const double c = std::cos(rot), s = std::sin(rot);
      auto turn = [&](Point2 p) { return Point2{c * p.x - s * p.y, s * p.x + c * p.y}; };
      std::vector<Point2> turned;
      for (auto b : d.blockages) turned.push_back(turn(b));
      std::vector<Point2> fewer(d.blockages.begin(), d.blockages.begin() + static_cast<long>(d.blockages.size() / 2));
      for (const auto& x : d.interferers) {
        const bool base = is_blocked(x, d.blockages, 0.3);
        // Ties at exactly W/2 have measure zero; rotation only perturbs rounding.
        CHECK(is_blocked(turn(x), turned, 0.3) == base);
        if (is_blocked(x, fewer, 0.3)) CHECK(base);
      }
    }
  }

  TEST_CASE("angular index agrees with the brute-force predicate") {
    RandomStream rng(5);
    std::size_t checked = 0, blocked = 0;
    for (double lambda : {0.2, 1.0, 3.0, 6.0}) {
      for (int trial = 0; trial < 60; ++trial) {
        const Deployment d = sample_deployment(lambda, 6.0, 0.3, rng);
        for (int bins : {1, 7, 256}) {
          const BlockageIndex index(d.blockages, 0.3, bins);
          for (const auto& x : d.interferers) {
            const bool ref = is_blocked(x, d.blockages, 0.3);
            REQUIRE(index.blocked(x) == ref);
            ++checked;
            blocked += ref;
          }
        }
      }
    }
    CHECK(checked > 10000);
    CHECK(blocked > 0);
    CHECK(blocked < checked);
  }

  TEST_CASE("angular index: blockers straddling the -pi/pi seam") {
    const std::vector<Point2> b{{-1.0, 1e-3}, {-1.0, -1e-3}};
    const BlockageIndex index(b, 0.3, 64);
    for (double dy : {-0.1, -1e-6, 0.0, 1e-6, 0.1}) {
      const Point2 x{-3.0, dy};
      CHECK(index.blocked(x) == is_blocked(x, b, 0.3));
    }
  }

  TEST_CASE("PPP sampler: empty for zero density") {
    RandomStream rng(1);
    for (int i = 0; i < 100; ++i) CHECK(sample_ppp_annulus(0.0, 0.0, 5.0, rng).empty());
  }

  TEST_CASE("PPP sampler: mean count on a disk") {
    RandomStream rng(2);
    const int n = 10000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += static_cast<double>(sample_ppp_annulus(3.0, 0.0, 2.0, rng).size());
    const double mean = 12.0 * kPi;  // 37.70
    const double sigma = std::sqrt(mean / n);
    CHECK(std::abs(sum / n - mean) <= 3.0 * sigma);
  }

  TEST_CASE("PPP sampler: radial law r^2 / r_out^2 (KS at 1%)") {
    RandomStream rng(3);
    std::vector<double> radii;
    while (radii.size() < 100000)
      for (const auto& p : sample_ppp_annulus(3.0, 0.0, 2.0, rng)) radii.push_back(p.norm());
    radii.resize(100000);
    const double d = oracle::ks_statistic(radii, [](double r) { return r * r / 4.0; });
    CHECK(d < oracle::ks_critical_1pct(radii.size()));
  }

  TEST_CASE("PPP sampler: annulus radial law and bearing") {
    RandomStream rng(4);
    std::vector<double> radii, bearings;
    while (radii.size() < 50000)
      for (const auto& p : sample_ppp_annulus(1.0, 1.5, 4.0, rng)) {
        radii.push_back(p.norm());
        bearings.push_back(p.angle());
      }
    for (double r : radii) CHECK(r >= 1.5 - 1e-12);
    const double dr = oracle::ks_statistic(radii, [](double r) { return (r * r - 2.25) / (16.0 - 2.25); });
    CHECK(dr < oracle::ks_critical_1pct(radii.size()));
    const double da = oracle::ks_statistic(bearings, [](double a) { return (a + kPi) / kTwoPi; });
    CHECK(da < oracle::ks_critical_1pct(bearings.size()));
  }

  TEST_CASE("deployments cover the enlarged blockage disk") {
    RandomStream rng(6);
    double max_i = 0.0, max_b = 0.0;
    for (int i = 0; i < 200; ++i) {
      const Deployment d = sample_deployment(3.0, 2.0, 0.4, rng);
      for (auto p : d.interferers) max_i = std::max(max_i, p.norm());
      for (auto p : d.blockages) max_b = std::max(max_b, p.norm());
    }
    CHECK(max_i <= 2.0);
    CHECK(max_b <= 2.2);
    CHECK(max_b > 2.0);
  }

  TEST_CASE("geometric blockage frequency matches the closed form") {
    // 1e5 independent deployments per radius, 3-sigma binomial band.
    for (double r : {0.5, 1.0, 2.0}) {
      const MeanEstimate est = estimate_blockage_frequency(r, 3.0, 0.3, 10.0, 100000, 1234);
      const double p = blockage_probability(r, 3.0, 0.3);
      const double sigma = std::sqrt(p * (1.0 - p) / 1e5);
      CHECK_MESSAGE(std::abs(est.mean - p) <= 3.0 * sigma, "r = " << r << " est " << est.mean << " p " << p);
    }
  }

  TEST_CASE("deployment dump") {
    Deployment d;
    d.interferers = {{1.0, 2.0}};
    d.blockages = {{-0.5, 0.25}};
    CHECK(deployment_csv(d) == "kind,x,y\nI,1,2\nB,-0.5,0.25\n");
  }
}
