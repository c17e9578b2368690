#include <doctest.h>

#include <omp.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "wearnet/analytic.hpp"
#include "wearnet/losball.hpp"
#include "wearnet/mcsim.hpp"

using namespace wearnet;

TEST_SUITE("mcsim") {
  TEST_CASE("mode names") {
    CHECK(parse_mode("full") == SimMode::full);
    CHECK(parse_mode("LOSBALL") == SimMode::losball);
    CHECK(std::string(to_string(SimMode::annulus)) == "annulus");
    CHECK_THROWS(parse_mode("ball"));
  }

  TEST_CASE("Nakagami power has unit mean and variance 1/m") {
    for (int m : {1, 3, 10}) {
      RandomStream rng(100 + m);
      const int n = 200000;
      std::vector<double> xs(n);
      for (auto& x : xs) x = sample_nakagami_power(m, rng);
      const auto est = mean_estimate(xs);
      CHECK(std::abs(est.mean - 1.0) <= 4.0 * est.std_error);
      double ss = 0.0;
      for (double x : xs) ss += (x - est.mean) * (x - est.mean);
      CHECK(ss / (n - 1) == doctest::Approx(1.0 / m).epsilon(0.03));
      // Gamma(m, 1/m) CDF via the Erlang sum.
      const double d = oracle::ks_statistic(xs, [m](double x) {
        double term = 1.0, s = 1.0;
        for (int k = 1; k < m; ++k) s += (term *= m * x / k);
        return 1.0 - std::exp(-m * x) * s;
      });
      CHECK(d < oracle::ks_critical_1pct(xs.size()));
    }
  }

  TEST_CASE("Nakagami power at the m cap is tight around one") {
    RandomStream rng(9);
    std::vector<double> xs(20000);
    for (auto& x : xs) x = sample_nakagami_power(kMaxNakagami, rng);
    const auto est = mean_estimate(xs);
    CHECK(est.std_error * std::sqrt(20000.0) < 0.13);
  }

  TEST_CASE("no interferers: SINR is signal over noise") {
    auto c = fixtures::reference(0.8, 2);
    c.lambda = 0.0;
    const auto setup = make_setup(validate(c));
    for (auto mode : {SimMode::full, SimMode::losball, SimMode::annulus}) {
      RandomStream a = RandomStream::substream(3, 0), b = RandomStream::substream(3, 0);
      const auto o = run_trial(mode, setup, a);
      const double h = sample_nakagami_power(2, b);
      CHECK(o.sinr == doctest::Approx(setup.signal_scale * h / c.noise_power).epsilon(1e-14));
      CHECK(o.aggregate_interference == 0.0);
    }
  }

  TEST_CASE("silent interferers contribute nothing") {
    const auto setup = make_setup(validate(fixtures::reference(0.0)));
    CHECK(setup.sigma2_nlos == 0.0);
    const auto out = run_trials(SimMode::full, setup, 200, 4);
    for (const auto& o : out) CHECK(o.aggregate_interference == 0.0);
  }

  TEST_CASE("zero noise and no interference gives infinite SINR") {
    auto c = fixtures::reference(0.0);
    c.noise_power = 0.0;
    const auto setup = make_setup(validate(c));
    RandomStream rng(1);
    CHECK(std::isinf(run_trial(SimMode::losball, setup, rng).sinr));
  }

  TEST_CASE("empirical CCDF and CDF bookkeeping") {
    std::vector<TrialOutcome> o(4);
    o[0].sinr = 0.0;
    o[1].sinr = 1.0;
    o[2].sinr = 3.0;
    o[3].sinr = 7.0;
    const std::vector<double> b{0.0, 1.0, 10.0};
    const auto cc = sinr_ccdf(o, b);
    CHECK(cc.values == std::vector<double>{0.75, 0.5, 0.0});
    CHECK(cc.std_error[0] == doctest::Approx(std::sqrt(0.75 * 0.25 / 4)));
    const auto cdf = spectral_efficiency_cdf(o, std::vector<double>{0.0, 1.0, 2.0, 3.0});
    CHECK(cdf.values == std::vector<double>{0.25, 0.5, 0.75, 1.0});
  }

  TEST_CASE("tiny thresholds are covered in every trial") {
    const auto v = validate(fixtures::reference());
    const auto d = simulate_ccdf(SimMode::full, v, 2000, std::vector<double>{0.0}, 8);
    CHECK(d.values[0] == 1.0);
  }

  TEST_CASE("LOS-ball interference mean matches the radial integral") {
    // alpha_L < 2 keeps the mean finite at the origin.
    auto c = fixtures::reference(0.8, 2);
    c.alpha_los = 0.8;
    const auto v = validate(c);
    const auto setup = make_setup(v);
    const auto out = run_trials(SimMode::losball, setup, 200000, 12);
    std::vector<double> xs;
    for (const auto& o : out) xs.push_back(o.aggregate_interference);
    const auto est = mean_estimate(xs);
    const double radial = oracle::integrate([&](double r) { return std::pow(r, 1.0 - c.alpha_los); }, 0.0,
                                            setup.r_los, 1e-14, 1e-12);
    const double expected = 2.0 * kPi * c.lambda * c.p_t * gain_pairs(c.tx, c.rx).mean_gain() * radial;
    CHECK_MESSAGE(std::abs(est.mean - expected) <= 4.0 * est.std_error, est.mean << " vs " << expected);
  }

  TEST_CASE("fixed seed reproduces; parallel equals serial") {
    const auto setup = make_setup(validate(fixtures::reference()));
    for (auto mode : {SimMode::full, SimMode::losball, SimMode::annulus}) {
      const auto ser = run_trials_serial(mode, setup, 3000, 99);
      const int saved = omp_get_max_threads();
      omp_set_num_threads(4);
      const auto par = run_trials(mode, setup, 3000, 99);
      omp_set_num_threads(1);
      const auto one = run_trials(mode, setup, 3000, 99);
      omp_set_num_threads(saved);
      bool same = true;
      for (std::size_t i = 0; i < ser.size(); ++i)
        same = same && ser[i].sinr == par[i].sinr && ser[i].sinr == one[i].sinr &&
               ser[i].interferer_count_los == par[i].interferer_count_los &&
               ser[i].aggregate_interference == par[i].aggregate_interference;
      CHECK_MESSAGE(same, to_string(mode));
      const auto other = run_trials(mode, setup, 100, 100);
      CHECK(other[0].sinr != ser[0].sinr);
    }
  }

  TEST_CASE("mean LOS count from geometry matches the closed form") {
    auto c = fixtures::reference();
    c.net_radius = 5.0;
    const auto est = estimate_mean_los_count(validate(c), 20000, 31);
    const double expected = mean_los_interferers(c.lambda, c.blockage_diameter, c.net_radius);
    CHECK_MESSAGE(std::abs(est.mean - expected) <= 3.0 * est.std_error, est.mean << " vs " << expected);
  }

  TEST_CASE("mean LOS count without blockage is the PPP mean") {
    auto c = fixtures::reference();
    c.net_radius = 3.0;
    c.blockage_diameter = 1e-3;
    const auto est = estimate_mean_los_count(validate(c), 20000, 32);
    const double expected = c.lambda * kPi * 9.0;
    CHECK(est.mean == doctest::Approx(expected).epsilon(0.01));
  }

  TEST_CASE("mean LOS count falls with density") {
    auto c = fixtures::reference();
    c.net_radius = 5.0;
    double prev = 1e300;
    for (double lambda : {2.0, 3.0, 5.0}) {
      c.lambda = lambda;
      const double v = estimate_mean_los_count(validate(c), 5000, 40).mean;
      CHECK(v < prev);
      prev = v;
    }
  }

  TEST_CASE("ergodic spectral efficiency estimate") {
    auto c = fixtures::reference(0.8, 1);
    c.lambda = 0.0;
    const auto v = validate(c);
    const auto est = simulate_ergodic_se(SimMode::losball, v, 100000, 2);
    const double ana = ergodic_spectral_efficiency(make_coverage_params(v));
    CHECK(std::abs(est.mean - ana) <= 4.0 * est.std_error);
  }
}
