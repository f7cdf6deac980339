#pragma once

#include "enp/core.hpp"
#include "enp/numerics.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace enp {

/// Position with first and second parameter derivatives of a chart map.
struct Jet2 {
  Vec3 x;
  Vec3 d1, d2;
  Vec3 d11, d12, d22;
};

/// First fundamental form at a chart point.
struct MetricTensor {
  double g11, g12, g22;
  double det;
  double inv11, inv12, inv22;

  static MetricTensor from_derivatives(const Vec3& d1, const Vec3& d2);

  Mat2 matrix() const {
    Mat2 g;
    g << g11, g12, g12, g22;
    return g;
  }
  Mat2 inverse() const {
    Mat2 g;
    g << inv11, inv12, inv12, inv22;
    return g;
  }
  /// G^{-1/2}, used for metric-ball polar coordinates.
  Mat2 inv_sqrt() const;
  double quadratic(const Vec2& v) const {
    return g11 * v(0) * v(0) + 2.0 * g12 * v(0) * v(1) + g22 * v(1) * v(1);
  }
  double inv_quadratic(const Vec2& xi) const {
    return inv11 * xi(0) * xi(0) + 2.0 * inv12 * xi(0) * xi(1) + inv22 * xi(1) * xi(1);
  }
};

/// One parametrized patch of a surface. The map is analytic on a
/// neighbourhood of the stated domain; domain checks apply to the
/// user-facing accessors, not to jet evaluation (local patch quadrature
/// may step slightly past the nominal bounds).
class Chart {
 public:
  using MapFn = std::function<Jet2(const Vec2&)>;

  Chart(std::string name, MapFn map, Vec2 lo, Vec2 hi, bool periodic1, bool periodic2,
        SmoothBump chi1, SmoothBump chi2, std::function<double(const Vec2&)> cutoff_arg,
        std::function<double(const Vec2&)> pu_latitude, double orientation_sign = 1.0)
      : name_(std::move(name)),
        map_(std::move(map)),
        lo_(lo),
        hi_(hi),
        periodic1_(periodic1),
        periodic2_(periodic2),
        chi1_(chi1),
        chi2_(chi2),
        cutoff_arg_(std::move(cutoff_arg)),
        pu_latitude_(std::move(pu_latitude)),
        orientation_(orientation_sign) {}

  const std::string& name() const { return name_; }
  Vec2 lo() const { return lo_; }
  Vec2 hi() const { return hi_; }
  bool periodic1() const { return periodic1_; }
  bool periodic2() const { return periodic2_; }
  double orientation() const { return orientation_; }

  Jet2 jet(const Vec2& u) const { return map_(u); }
  Vec3 position(const Vec2& u) const { return map_(u).x; }

  bool in_domain(const Vec2& u) const {
    return u(0) >= lo_(0) && u(0) <= hi_(0) && u(1) >= lo_(1) && u(1) <= hi_(1);
  }
  void require_in_domain(const Vec2& u) const {
    if (!in_domain(u)) throw GeometryError(name_ + ": parameter outside chart domain");
  }

  MetricTensor metric_at(const Vec2& u) const;

  /// Cross-product normal in the chart's own orientation.
  Vec3 chart_normal(const Vec2& u) const;
  /// Outward unit normal (orientation sign applied).
  Vec3 normal_at(const Vec2& u) const { return orientation_ * chart_normal(u); }
  double area_element(const Vec2& u) const;

  double chi1(const Vec2& u) const { return chi1_(cutoff_arg_(u)); }
  double chi2(const Vec2& u) const { return chi2_(cutoff_arg_(u)); }
  const SmoothBump& chi1_bump() const { return chi1_; }
  const SmoothBump& chi2_bump() const { return chi2_; }
  double cutoff_arg(const Vec2& u) const { return cutoff_arg_(u); }

  /// Latitude coordinate of the unit-sphere preimage, shared across charts;
  /// drives the quadrature partition of unity.
  double pu_latitude(const Vec2& u) const { return pu_latitude_(u); }

 private:
  std::string name_;
  MapFn map_;
  Vec2 lo_, hi_;
  bool periodic1_, periodic2_;
  SmoothBump chi1_, chi2_;
  std::function<double(const Vec2&)> cutoff_arg_;
  std::function<double(const Vec2&)> pu_latitude_;
  double orientation_;
};

enum class SurfaceKind { Sphere, Ellipsoid, StarSphere, FlatTorus };

/// A smooth closed surface (or the flat periodic test cell) with its atlas.
class SurfaceSpec {
 public:
  static SurfaceSpec sphere(double radius = 1.0);
  static SurfaceSpec ellipsoid(double a, double b, double c);
  static SurfaceSpec star_sphere(double epsilon, int l = 3, int m = 2);
  static SurfaceSpec flat_torus(double length, double normal_sign = 1.0);
  static SurfaceSpec by_name(const std::string& name, double a, double b, double c,
                             double epsilon);

  SurfaceKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const std::vector<Chart>& charts() const { return charts_; }
  bool closed() const { return kind_ != SurfaceKind::FlatTorus; }
  double length_scale() const { return scale_; }

  /// Quadrature partition of unity over the atlas; weights sum to one.
  double pu_weight(int chart_id, const Vec2& u) const;

 private:
  SurfaceKind kind_;
  std::string name_;
  std::vector<Chart> charts_;
  double scale_ = 1.0;
};

/// |Phi(u)-Phi(v)|^2 - <u-v, G(u)(u-v)>; cubically small in |u-v|.
double taylor_metric_residual(const Chart& chart, const Vec2& u, const Vec2& v);

/// Linear-term coefficient pairs of the scalar kernels K12, K13, K23
/// in chart coordinates (chart-oriented normal):
///   k_ij(Phi(u),Phi(v)) = a*(u1-v1) - b*(u2-v2) + O(|u-v|^2).
struct ChartKernelCoefficients {
  Vec2 c12, c13, c23;  // (a, b) per kernel
};
ChartKernelCoefficients chart_kernel_coefficients(const Chart& chart, const Vec2& u);

}  // namespace enp
