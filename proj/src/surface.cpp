#include "enp/surface.hpp"

#include <Eigen/Eigenvalues>

namespace enp {

namespace {

constexpr double kDegenerateJacobian = 1e-10;

// Unit-sphere jet in polar coordinates u = (theta, phi).
Jet2 sphere_jet(const Vec2& u) {
  const double st = std::sin(u(0)), ct = std::cos(u(0));
  const double sp = std::sin(u(1)), cp = std::cos(u(1));
  Jet2 j;
  j.x = Vec3(st * cp, st * sp, ct);
  j.d1 = Vec3(ct * cp, ct * sp, -st);
  j.d2 = Vec3(-st * sp, st * cp, 0.0);
  j.d11 = -j.x;
  j.d12 = Vec3(-ct * sp, ct * cp, 0.0);
  j.d22 = Vec3(-st * cp, -st * sp, 0.0);
  return j;
}

Mat3 rotated_frame(int chart_id) {
  if (chart_id == 0) return Mat3::Identity();
  Mat3 r;  // maps e3 -> e1: the second chart's poles sit on the x-axis
  r << 0, 0, 1, 0, 1, 0, -1, 0, 0;
  return r;
}

Jet2 apply_linear(const Mat3& m, const Jet2& j) {
  Jet2 o;
  o.x = m * j.x;
  o.d1 = m * j.d1;
  o.d2 = m * j.d2;
  o.d11 = m * j.d11;
  o.d12 = m * j.d12;
  o.d22 = m * j.d22;
  return o;
}

// Real solid harmonic used for the star-shaped perturbation, with gradient,
// Hessian and sup norm over the unit sphere.
struct Harmonic {
  std::function<double(const Vec3&)> value;
  std::function<Vec3(const Vec3&)> grad;
  std::function<Mat3(const Vec3&)> hess;
  double sup;
};

Harmonic harmonic_poly(int l, int m) {
  if (l == 2 && m == 0) {
    return {[](const Vec3& x) { return 2 * x(2) * x(2) - x(0) * x(0) - x(1) * x(1); },
            [](const Vec3& x) { return Vec3(-2 * x(0), -2 * x(1), 4 * x(2)); },
            [](const Vec3&) { return Mat3(Vec3(-2, -2, 4).asDiagonal()); }, 2.0};
  }
  if (l == 2 && m == 2) {
    return {[](const Vec3& x) { return x(0) * x(0) - x(1) * x(1); },
            [](const Vec3& x) { return Vec3(2 * x(0), -2 * x(1), 0.0); },
            [](const Vec3&) { return Mat3(Vec3(2, -2, 0).asDiagonal()); }, 1.0};
  }
  if (l == 3 && m == 2) {
    return {[](const Vec3& x) { return x(2) * (x(0) * x(0) - x(1) * x(1)); },
            [](const Vec3& x) {
              return Vec3(2 * x(0) * x(2), -2 * x(1) * x(2), x(0) * x(0) - x(1) * x(1));
            },
            [](const Vec3& x) {
              Mat3 h;
              h << 2 * x(2), 0, 2 * x(0), 0, -2 * x(2), -2 * x(1), 2 * x(0), -2 * x(1), 0;
              return h;
            },
            2.0 / (3.0 * std::sqrt(3.0))};
  }
  throw ConfigError("star_sphere: unsupported harmonic (l,m)=(" + std::to_string(l) + "," +
                    std::to_string(m) + "); available: (2,0), (2,2), (3,2)");
}

SmoothBump polar_chi1() { return SmoothBump(0.25 * kPi / 2.0, 0.35 * kPi / 2.0); }
SmoothBump polar_chi2() { return SmoothBump(0.36 * kPi / 2.0, 0.45 * kPi / 2.0); }

Chart make_polar_chart(const std::string& name, int chart_id, Chart::MapFn map) {
  const Mat3 rot = rotated_frame(chart_id);
  auto latitude = [rot](const Vec2& u) { return (rot * sphere_jet(u).x)(2); };
  return Chart(name, std::move(map), Vec2(0.0, 0.0), Vec2(kPi, 2.0 * kPi),
               /*periodic1=*/false, /*periodic2=*/true, polar_chi1(), polar_chi2(),
               [](const Vec2& u) { return u(0) - kPi / 2.0; }, latitude);
}

// Quadrature partition of unity: chart 0 owns latitudes below 0.80 in
// absolute value, chart 1 the polar caps, smooth handover up to 0.95.
const SmoothBump kPuBump(0.80, 0.95);

}  // namespace

MetricTensor MetricTensor::from_derivatives(const Vec3& d1, const Vec3& d2) {
  MetricTensor g;
  g.g11 = d1.squaredNorm();
  g.g12 = d1.dot(d2);
  g.g22 = d2.squaredNorm();
  g.det = g.g11 * g.g22 - g.g12 * g.g12;
  if (!(g.g11 > 0.0) || !(g.g22 > 0.0) || !(g.det > 0.0))
    throw GeometryError("metric tensor not positive definite");
  g.inv11 = g.g22 / g.det;
  g.inv12 = -g.g12 / g.det;
  g.inv22 = g.g11 / g.det;
  return g;
}

Mat2 MetricTensor::inv_sqrt() const {
  Eigen::SelfAdjointEigenSolver<Mat2> es(matrix());
  return es.operatorInverseSqrt();
}

MetricTensor Chart::metric_at(const Vec2& u) const {
  require_in_domain(u);
  const Jet2 j = map_(u);
  return MetricTensor::from_derivatives(j.d1, j.d2);
}

Vec3 Chart::chart_normal(const Vec2& u) const {
  const Jet2 j = map_(u);
  const Vec3 c = j.d1.cross(j.d2);
  const double n = c.norm();
  if (n < kDegenerateJacobian) throw GeometryError(name_ + ": degenerate Jacobian");
  return c / n;
}

double Chart::area_element(const Vec2& u) const {
  const Jet2 j = map_(u);
  return j.d1.cross(j.d2).norm();
}

SurfaceSpec SurfaceSpec::sphere(double radius) {
  SurfaceSpec s = ellipsoid(radius, radius, radius);
  s.kind_ = SurfaceKind::Sphere;
  s.name_ = "sphere";
  return s;
}

SurfaceSpec SurfaceSpec::ellipsoid(double a, double b, double c) {
  if (!(a > 0) || !(b > 0) || !(c > 0))
    throw ConfigError("ellipsoid: semi-axes must be positive");
  SurfaceSpec s;
  s.kind_ = SurfaceKind::Ellipsoid;
  s.name_ = "ellipsoid";
  s.scale_ = std::max({a, b, c});
  const Mat3 scale = Vec3(a, b, c).asDiagonal();
  for (int id = 0; id < 2; ++id) {
    const Mat3 m = scale * rotated_frame(id);
    s.charts_.push_back(
        make_polar_chart(id == 0 ? "polar" : "rotated", id,
                         [m](const Vec2& u) { return apply_linear(m, sphere_jet(u)); }));
  }
  return s;
}

SurfaceSpec SurfaceSpec::star_sphere(double epsilon, int l, int m) {
  if (std::abs(epsilon) > 0.2) throw ConfigError("star_sphere: |epsilon| must be <= 0.2");
  SurfaceSpec s;
  s.kind_ = SurfaceKind::StarSphere;
  s.name_ = "star_sphere";
  s.scale_ = 1.0 + std::abs(epsilon);
  const Harmonic h = harmonic_poly(l, m);
  for (int id = 0; id < 2; ++id) {
    const Mat3 rot = rotated_frame(id);
    const double amp = epsilon / h.sup;
    auto map = [rot, h, amp](const Vec2& u) {
      const Jet2 base = apply_linear(rot, sphere_jet(u));
      const Vec3& X = base.x;
      const double rho = 1.0 + amp * h.value(X);
      const Vec3 g = amp * h.grad(X);
      const Mat3 H = amp * h.hess(X);
      const double r1 = g.dot(base.d1), r2 = g.dot(base.d2);
      const double r11 = base.d1.dot(H * base.d1) + g.dot(base.d11);
      const double r12 = base.d1.dot(H * base.d2) + g.dot(base.d12);
      const double r22 = base.d2.dot(H * base.d2) + g.dot(base.d22);
      Jet2 o;
      o.x = rho * X;
      o.d1 = r1 * X + rho * base.d1;
      o.d2 = r2 * X + rho * base.d2;
      o.d11 = r11 * X + 2.0 * r1 * base.d1 + rho * base.d11;
      o.d12 = r12 * X + r1 * base.d2 + r2 * base.d1 + rho * base.d12;
      o.d22 = r22 * X + 2.0 * r2 * base.d2 + rho * base.d22;
      return o;
    };
    s.charts_.push_back(make_polar_chart(id == 0 ? "polar" : "rotated", id, map));
  }
  return s;
}

SurfaceSpec SurfaceSpec::flat_torus(double length, double normal_sign) {
  if (!(length > 0)) throw ConfigError("flat_torus: length must be positive");
  if (std::abs(normal_sign) != 1.0) throw ConfigError("flat_torus: normal_sign must be +-1");
  SurfaceSpec s;
  s.kind_ = SurfaceKind::FlatTorus;
  s.name_ = "flat_torus";
  s.scale_ = length;
  const Vec2 center(length / 2.0, length / 2.0);
  auto map = [](const Vec2& u) {
    Jet2 j;
    j.x = Vec3(u(0), u(1), 0.0);
    j.d1 = Vec3(1, 0, 0);
    j.d2 = Vec3(0, 1, 0);
    j.d11 = j.d12 = j.d22 = Vec3::Zero();
    return j;
  };
  const double r = length / 2.0;
  s.charts_.push_back(Chart("flat", map, Vec2(0, 0), Vec2(length, length), true, true,
                            SmoothBump(0.25 * r, 0.35 * r), SmoothBump(0.36 * r, 0.45 * r),
                            [center](const Vec2& u) { return (u - center).norm(); },
                            [](const Vec2&) { return 0.0; }, normal_sign));
  return s;
}

SurfaceSpec SurfaceSpec::by_name(const std::string& name, double a, double b, double c,
                                 double epsilon) {
  if (name == "sphere") return sphere(a > 0 ? a : 1.0);
  if (name == "ellipsoid") return ellipsoid(a, b, c);
  if (name == "star_sphere") return star_sphere(epsilon);
  if (name == "flat_torus") return flat_torus(a > 0 ? a : 2.0 * kPi);
  throw ConfigError("unknown surface kind: '" + name +
                    "' (expected sphere | ellipsoid | star_sphere | flat_torus)");
}

double SurfaceSpec::pu_weight(int chart_id, const Vec2& u) const {
  if (charts_.size() == 1) return 1.0;
  const double lat = std::abs(charts_[chart_id].pu_latitude(u));
  const double w0 = kPuBump(lat);
  return chart_id == 0 ? w0 : 1.0 - w0;
}

double taylor_metric_residual(const Chart& chart, const Vec2& u, const Vec2& v) {
  chart.require_in_domain(u);
  chart.require_in_domain(v);
  const Vec3 dx = chart.position(u) - chart.position(v);
  const Jet2 j = chart.jet(u);
  const MetricTensor g = MetricTensor::from_derivatives(j.d1, j.d2);
  return dx.squaredNorm() - g.quadratic(u - v);
}

ChartKernelCoefficients chart_kernel_coefficients(const Chart& chart, const Vec2& u) {
  const Jet2 j = chart.jet(u);
  const MetricTensor g = MetricTensor::from_derivatives(j.d1, j.d2);
  const double cross = j.d1.cross(j.d2).norm();
  if (cross < kDegenerateJacobian)
    throw GeometryError("chart_kernel_coefficients: degenerate Jacobian");
  auto pair_for = [&](int comp) {
    return Vec2((g.g11 * j.d2(comp) - g.g12 * j.d1(comp)) / cross,
                (g.g22 * j.d1(comp) - g.g12 * j.d2(comp)) / cross);
  };
  // k_ij = z_i n_j - z_j n_i with the chart normal; the (1,3) pair keeps the
  // sign of the phi_2 form, the cyclic pairs flip it.
  ChartKernelCoefficients c;
  c.c12 = -pair_for(2);
  c.c13 = pair_for(1);
  c.c23 = -pair_for(0);
  return c;
}

}  // namespace enp
