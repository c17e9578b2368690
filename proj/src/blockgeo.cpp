#include "wearnet/blockgeo.hpp"

#include <algorithm>
#include <cmath>

#include "wearnet/csv.hpp"
#include "wearnet/netmodel.hpp"

namespace wearnet {

namespace {

double segment_distance2(Point2 x, Point2 c) {
  const double xx = x.x * x.x + x.y * x.y;
  double t = xx > 0.0 ? (c.x * x.x + c.y * x.y) / xx : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const double dx = c.x - t * x.x;
  const double dy = c.y - t * x.y;
  return dx * dx + dy * dy;
}

// Slack on the index's conservative filters; the exact predicate decides.
constexpr double kSlack = 1e-9;

}  // namespace

Point2 Point2::polar(double r, double phi) { return {r * std::cos(phi), r * std::sin(phi)}; }
double Point2::norm() const { return std::hypot(x, y); }
double Point2::angle() const { return std::atan2(y, x); }

std::vector<Point2> sample_ppp_annulus(double lambda, double r_in, double r_out, RandomStream& rng) {
  std::vector<Point2> pts;
  if (!(lambda > 0.0) || !(r_out > r_in)) return pts;
  const double in2 = r_in * r_in;
  const double span2 = r_out * r_out - in2;
  const auto n = rng.poisson(lambda * kPi * span2);
  pts.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const double r = std::sqrt(in2 + rng.uniform() * span2);
    const double phi = kTwoPi * rng.uniform() - kPi;
    pts.push_back(Point2::polar(r, phi));
  }
  return pts;
}

Deployment sample_deployment(double lambda, double net_radius, double diameter, RandomStream& rng) {
  Deployment d;
  d.interferers = sample_ppp_annulus(lambda, 0.0, net_radius, rng);
  d.blockages = sample_ppp_annulus(lambda, 0.0, net_radius + 0.5 * diameter, rng);
  return d;
}

double blocking_area(double r, double diameter) { return r * diameter + kPi * diameter * diameter / 4.0; }

double blockage_probability(double r, double lambda, double diameter) {
  return -std::expm1(-lambda * blocking_area(r, diameter));
}

double segment_distance(Point2 x, Point2 c) { return std::sqrt(segment_distance2(x, c)); }

bool is_blocked(Point2 x, std::span<const Point2> blockages, double diameter) {
  const double h2 = 0.25 * diameter * diameter;
  return std::any_of(blockages.begin(), blockages.end(),
                     [&](const Point2& c) { return segment_distance2(x, c) <= h2; });
}

BlockageIndex::BlockageIndex(std::span<const Point2> blockages, double diameter, int bins)
    : diameter_(diameter), half_(0.5 * diameter), bins_(std::max(1, bins)) {
  const double width = kTwoPi / bins_;
  std::vector<std::uint32_t> counts(static_cast<std::size_t>(bins_) + 1, 0);

  struct Span {
    long k0, k1;
  };
  std::vector<Span> spans;
  spans.reserve(blockages.size());
  for (const auto& c : blockages) {
    const double rho = c.norm();
    if (rho <= half_) {
      covers_origin_ = true;
      spans.push_back({1, 0});
      continue;
    }
    const double delta = std::asin(half_ / rho) + kSlack;
    const double psi = c.angle();
    const long k0 = static_cast<long>(std::floor((psi - delta + kPi) / width));
    const long k1 = static_cast<long>(std::floor((psi + delta + kPi) / width));
    spans.push_back({k0, k1});
    for (long k = k0; k <= k1; ++k) ++counts[static_cast<std::size_t>(((k % bins_) + bins_) % bins_) + 1];
  }

  offsets_.assign(counts.begin(), counts.end());
  for (std::size_t b = 1; b < offsets_.size(); ++b) offsets_[b] += offsets_[b - 1];
  entries_.resize(offsets_.back());
  std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < blockages.size(); ++i) {
    const Entry e{blockages[i], blockages[i].norm() - half_};
    for (long k = spans[i].k0; k <= spans[i].k1; ++k) {
      const auto b = static_cast<std::size_t>(((k % bins_) + bins_) % bins_);
      entries_[cursor[b]++] = e;
    }
  }
}

int BlockageIndex::bin_of(double phi) const {
  double t = (phi + kPi) / kTwoPi;
  t -= std::floor(t);
  return std::min(static_cast<int>(t * bins_), bins_ - 1);
}

bool BlockageIndex::blocked(Point2 x) const {
  if (covers_origin_) return true;
  const double r = x.norm();
  const double reach = r + kSlack * (1.0 + r);
  const double h2 = half_ * half_;
  const auto b = static_cast<std::size_t>(bin_of(x.angle()));
  for (std::uint32_t i = offsets_[b]; i < offsets_[b + 1]; ++i) {
    const Entry& e = entries_[i];
    if (e.near <= reach && segment_distance2(x, e.c) <= h2) return true;
  }
  return false;
}

std::string deployment_csv(const Deployment& d) {
  std::string out = "kind,x,y\n";
  auto put = [&](char kind, const Point2& p) {
    out += kind;
    out += ',';
    out += format_double(p.x);
    out += ',';
    out += format_double(p.y);
    out += '\n';
  };
  for (const auto& p : d.interferers) put('I', p);
  for (const auto& p : d.blockages) put('B', p);
  return out;
}

}  // namespace wearnet
