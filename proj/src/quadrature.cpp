#include "wearnet/quadrature.hpp"

#include <cmath>
#include <queue>
#include <string>

#include "wearnet/netmodel.hpp"

namespace wearnet {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    nodes[static_cast<std::size_t>(i)] = -z;
    nodes[static_cast<std::size_t>(n - 1 - i)] = z;
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    weights[static_cast<std::size_t>(i)] = w;
    weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
}

namespace {

constexpr int kOrder = 10;

struct Rule {
  std::vector<double> x, w;
  Rule() { gauss_legendre(kOrder, x, w); }
};

const Rule& rule() {
  static const Rule r;
  return r;
}

double panel(const std::function<double(double)>& f, double a, double b) {
  const Rule& r = rule();
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < kOrder; ++i) s += r.w[static_cast<std::size_t>(i)] * f(c + h * r.x[static_cast<std::size_t>(i)]);
  return s * h;
}

struct Interval {
  double a, b, value, error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

Interval estimate(const std::function<double(double)>& f, double a, double b) {
  const double m = 0.5 * (a + b);
  const double coarse = panel(f, a, b);
  const double fine = panel(f, a, m) + panel(f, m, b);
  return {a, b, fine, std::abs(fine - coarse)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& opts) {
  QuadratureResult res;
  if (a == b) {
    res.converged = true;
    return res;
  }
  std::priority_queue<Interval> heap;
  heap.push(estimate(f, a, b));
  double value = heap.top().value;
  double error = heap.top().error;
  int panels = 1;
  // The running sums drift; they are recomputed from the heap at the end.
  while (error > std::max(opts.abs_tol, opts.rel_tol * std::abs(value)) && panels < opts.max_panels) {
    const Interval worst = heap.top();
    heap.pop();
    const double m = 0.5 * (worst.a + worst.b);
    if (!(m > worst.a && m < worst.b)) {
      heap.push(worst);
      break;
    }
    const Interval left = estimate(f, worst.a, m);
    const Interval right = estimate(f, m, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++panels;
  }
  value = 0.0;
  error = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  res.value = value;
  res.error = error;
  res.panels = panels;
  res.converged = error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(value));
  return res;
}

double integrate(const std::function<double(double)>& f, double a, double b, const QuadratureOptions& opts) {
  const QuadratureResult r = integrate_adaptive(f, a, b, opts);
  if (!r.converged)
    throw QuadratureNotConverged("quadrature on [" + std::to_string(a) + ", " + std::to_string(b) +
                                 "] stopped at error " + std::to_string(r.error) + " after " +
                                 std::to_string(r.panels) + " panels");
  return r.value;
}

}  // namespace wearnet
