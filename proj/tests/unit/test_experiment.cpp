#include <doctest.h>

#include <fstream>
#include <sstream>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "wearnet/config_io.hpp"
#include "wearnet/csv.hpp"
#include "wearnet/experiment.hpp"

using namespace wearnet;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("experiment") {
  TEST_CASE("figure configs carry the stated values and leave the rest open") {
    const std::string fig7 = emit_figure_config("fig7");
    CHECK(fig7.find("p_t = 0.8") != std::string::npos);
    CHECK(fig7.find("m = 3") != std::string::npos);
    CHECK(fig7.find("alpha_L = REQUIRED") != std::string::npos);
    CHECK(emit_figure_config("fig8").find("lambda = 2") != std::string::npos);
    for (const char* f : {"fig3", "fig5", "fig6", "fig7", "fig8"})
      CHECK_THROWS_WITH_AS(parse_config(emit_figure_config(f)), doctest::Contains("REQUIRED"), ConfigError);
    CHECK_THROWS_AS(emit_figure_config("fig4"), UnknownFigure);
  }

  TEST_CASE("figure config parses once the open values are filled") {
    std::string text = emit_figure_config("fig7");
    for (auto [key, val] : {std::pair{"alpha_L = REQUIRED", "alpha_L = 2"}, std::pair{"alpha_N = REQUIRED", "alpha_N = 4"},
                            std::pair{"R0 = REQUIRED", "R0 = 1"}, std::pair{"noise_power = REQUIRED", "noise_power = 0.5"}})
      text.replace(text.find(key), std::string(key).size(), val);
    const NetworkConfig c = parse_config(text);
    CHECK(c.p_t == 0.8);
    CHECK(c.lambda == 3.0);
    CHECK_NOTHROW(validate(c));
  }

  TEST_CASE("plan kinds") {
    CHECK(parse_plan_kind("se_compare") == PlanKind::se_compare);
    CHECK_THROWS_AS(parse_plan_kind("fig7"), PlanError);
  }

  TEST_CASE("check_plan rejects malformed plans") {
    auto p = default_plan(PlanKind::coverage_compare, fixtures::reference());
    CHECK_NOTHROW(check_plan(p));
    auto q = p;
    q.grid.clear();
    CHECK_THROWS_AS(check_plan(q), PlanError);
    q = p;
    q.grid = {3, 1};
    CHECK_THROWS_AS(check_plan(q), PlanError);
    q = p;
    q.tolerance = 0.0;
    CHECK_THROWS_AS(check_plan(q), PlanError);
    q = p;
    q.base.alpha_nlos = 2.0;
    CHECK_THROWS_AS(check_plan(q), ConfigError);
    auto n = default_plan(PlanKind::nakagami_sweep, fixtures::reference());
    n.grid = {1, 2.5};
    CHECK_THROWS_AS(check_plan(n), PlanError);
    auto l = default_plan(PlanKind::losball_sweep, fixtures::reference());
    l.grid = {0.1, 1};
    CHECK_THROWS_AS(check_plan(l), PlanError);
  }

  TEST_CASE("sup norm") {
    CHECK(sup_norm({0.1, 0.5, 0.9}, {0.1, 0.4, 1.0}) == doctest::Approx(0.1));
    CHECK(sup_norm({}, {}) == 0.0);
    CHECK_THROWS(sup_norm({1.0}, {}));
  }

  TEST_CASE("LOS-ball sweep writes one curve per density") {
    auto p = default_plan(PlanKind::losball_sweep, fixtures::reference());
    p.out_dir = oracle::temp_dir("losball_sweep");
    const auto s = run_plan(p);
    CHECK(s.passed);
    CHECK(s.artifacts.size() == p.family.size() + 1);
    const std::string csv = slurp(p.out_dir / "losball_lambda_3.csv");
    CHECK(csv.rfind("# wearnet config_hash=", 0) == 0);
    CHECK(csv.find("lambda,W,r_net,mean_los,r_los,r_los_limit\n") != std::string::npos);
    CHECK(std::filesystem::exists(p.out_dir / "losball_lambda_0p5.csv"));
    CHECK(slurp(p.out_dir / "summary.txt").find("passed = true") != std::string::npos);
  }

  TEST_CASE("coverage comparison is reproducible byte for byte") {
    auto p = default_plan(PlanKind::coverage_compare, fixtures::reference());
    p.grid = parse_grid("-10:10:5");
    p.trials = 20000;
    p.out_dir = oracle::temp_dir("cov_a");
    run_plan(p);
    auto q = p;
    q.out_dir = oracle::temp_dir("cov_b");
    run_plan(q);
    for (const char* f : {"coverage_analytic.csv", "coverage_losball.csv", "summary.txt"})
      CHECK_MESSAGE(slurp(p.out_dir / f) == slurp(q.out_dir / f), f);
    q.seed = 2;
    q.out_dir = oracle::temp_dir("cov_c");
    run_plan(q);
    CHECK(slurp(p.out_dir / "coverage_losball.csv") != slurp(q.out_dir / "coverage_losball.csv"));
  }

  TEST_CASE("mean count sweep agrees with the closed form") {
    auto c = fixtures::reference();
    c.net_radius = 4.0;
    auto p = default_plan(PlanKind::mean_count_sweep, c);
    p.grid = {1, 3};
    p.trials = 4000;
    p.out_dir = oracle::temp_dir("mean_count");
    const auto s = run_plan(p);
    CHECK(s.deviation <= 3.0);
    CHECK(s.passed);
  }
}
