#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace wearnet {

class QuadratureNotConverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_panels = 4000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int panels = 0;
  bool converged = false;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Globally adaptive Gauss-Legendre: each panel is estimated with a 10-point
/// rule on the whole panel and on both halves; the panel with the largest
/// discrepancy is bisected until the summed estimate meets
/// max(abs_tol, rel_tol * |value|).
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& opts = {});

/// As integrate_adaptive, but throws QuadratureNotConverged on failure.
double integrate(const std::function<double(double)>& f, double a, double b, const QuadratureOptions& opts = {});

}  // namespace wearnet
