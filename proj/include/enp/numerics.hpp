#pragma once

#include "enp/core.hpp"

#include <utility>
#include <vector>

namespace enp {

/// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  std::vector<double> x(n), w(n);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[n - 1 - i] = t;
    w[n - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
  return {x, w};
}

/// Same rule mapped to [a,b].
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n, double a,
                                                                          double b) {
  auto [x, w] = gauss_legendre(n);
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    x[i] = c + h * x[i];
    w[i] *= h;
  }
  return {x, w};
}

/// Quintic smoothstep: 0 for t<=0, 1 for t>=1, C^2 at the joins.
inline double smoothstep5(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

/// C-infinity transition built from exp(-1/t): 0 for t<=0, 1 for t>=1.
inline double smooth_transition(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

/// Plateau bump of |t|: 1 for |t|<=inner, 0 for |t|>=outer.
class SmoothBump {
 public:
  SmoothBump() : inner_(0), outer_(1) {}
  SmoothBump(double inner, double outer) : inner_(inner), outer_(outer) {}
  double operator()(double t) const {
    const double a = std::abs(t);
    if (a <= inner_) return 1.0;
    if (a >= outer_) return 0.0;
    return smooth_transition((outer_ - a) / (outer_ - inner_));
  }
  double inner() const { return inner_; }
  double outer() const { return outer_; }

 private:
  double inner_, outer_;
};

/// Taper used by the singular quadrature: 1 near 0, 0 beyond 1,
/// transition on [1/2, 1].
inline double patch_taper(double s) {
  if (s <= 0.5) return 1.0;
  if (s >= 1.0) return 0.0;
  return 1.0 - smoothstep5(2.0 * s - 1.0);
}

/// Least-squares slope of y against x.
inline double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const int n = static_cast<int>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace enp
