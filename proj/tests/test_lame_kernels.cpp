#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "enp/lame.hpp"

#include <random>

using namespace enp;

namespace {

std::mt19937_64 rng(20240811ull);

Vec3 random_unit() {
  std::normal_distribution<double> g;
  Vec3 v{g(rng), g(rng), g(rng)};
  return v.normalized();
}

// Conormal derivative of w -> Gamma(w - y) b at x, by central differences.
Vec3 fd_conormal_column(const LameParameters& p, const SurfacePoint& x, const Vec3& y,
                        const Vec3& b, double h) {
  Mat3 grad;  // grad(i,k) = d_k u_i
  for (int k = 0; k < 3; ++k) {
    Vec3 e = Vec3::Zero();
    e(k) = h;
    const Vec3 up = kelvin_matrix(p, x.position + e - y) * b;
    const Vec3 um = kelvin_matrix(p, x.position - e - y) * b;
    grad.col(k) = (up - um) / (2.0 * h);
  }
  const double div = grad.trace();
  const Mat3 eps = 0.5 * (grad + grad.transpose());
  return p.lambda() * div * x.normal + 2.0 * p.mu() * (eps * x.normal);
}

}  // namespace

TEST_CASE("kelvin matrix closed-form values") {
  LameParameters p(1.0, 1.0);
  CHECK(p.alpha1() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(p.alpha2() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(p.k0() == doctest::Approx(1.0 / 6.0).epsilon(1e-15));

  const Mat3 g = kelvin_matrix(p, Vec3(1, 0, 0));
  CHECK(g(0, 0) == doctest::Approx(-1.0 / (4.0 * kPi)).epsilon(1e-14));
  CHECK(g(1, 1) == doctest::Approx(-1.0 / (6.0 * kPi)).epsilon(1e-14));
  CHECK(g(2, 2) == doctest::Approx(-1.0 / (6.0 * kPi)).epsilon(1e-14));
  CHECK(std::abs(g(0, 1)) + std::abs(g(0, 2)) + std::abs(g(1, 2)) < 1e-16);
}

TEST_CASE("kelvin coefficients for lambda=0, mu=1/2") {
  LameParameters p(0.0, 0.5);
  CHECK(p.alpha1() == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(p.alpha2() == doctest::Approx(0.5).epsilon(1e-15));
  const Vec3 x(0.3, -0.7, 0.2);
  const double r = x.norm();
  const Mat3 expect = -(1.5 / (4 * kPi * r)) * Mat3::Identity() -
                      (0.5 / (4 * kPi * r * r * r)) * (x * x.transpose());
  CHECK((kelvin_matrix(p, x) - expect).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("kelvin homogeneity of degree -1 and symmetry") {
  LameParameters p(2.3, 0.9);
  std::uniform_real_distribution<double> us(0.1, 10.0);
  for (int t = 0; t < 200; ++t) {
    const Vec3 x = random_unit() * us(rng);
    const double s = us(rng);
    const Mat3 a = kelvin_matrix(p, s * x);
    const Mat3 b = kelvin_matrix(p, x) / s;
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-13 * b.cwiseAbs().maxCoeff());
    const Mat3 g = kelvin_matrix(p, x);
    CHECK((g - g.transpose()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("k1 kernel worked example and structure") {
  const SurfacePoint x = make_surface_point(Vec3::Zero(), Vec3(0, 0, 1));
  const Mat3 k1 = k1_kernel(x, Vec3(1, 0, 0));
  Mat3 expect;
  expect << 0, 0, -1, 0, 0, 0, 1, 0, 0;
  expect /= 2.0 * kPi;
  CHECK((k1 - expect).cwiseAbs().maxCoeff() < 1e-16);

  for (int t = 0; t < 500; ++t) {
    const SurfacePoint xs = make_surface_point(random_unit() * 2.0, random_unit());
    const Vec3 y = random_unit() * 1.3;
    const Mat3 a = k1_kernel(xs, y);
    CHECK((a + a.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(a.diagonal().cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("k2 kernel vanishes on the tangent plane and is symmetric") {
  LameParameters p(1.7, 0.6);
  for (int t = 0; t < 500; ++t) {
    const Vec3 n = random_unit();
    const SurfacePoint x = make_surface_point(random_unit(), n);
    // y in the tangent plane through x
    Vec3 tdir = n.cross(random_unit());
    if (tdir.norm() < 1e-8) tdir = n.cross(Vec3(0.3, 1.0, -0.2));
    const Vec3 y = x.position + tdir.normalized() * 0.37;
    CHECK(k2_kernel(p, x, y).cwiseAbs().maxCoeff() < 1e-15);

    const Vec3 y2 = x.position + random_unit() * 0.8;
    const Mat3 k2 = k2_kernel(p, x, y2);
    CHECK((k2 - k2.transpose()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("split identity conormal = k0 K1 - K2 on random sphere pairs") {
  LameParameters p(1.0, 1.0);
  double worst = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const Vec3 a = random_unit();
    Vec3 b = random_unit();
    if ((a - b).norm() < 1e-6) b = -b;
    const SurfacePoint x = make_surface_point(a, a);
    const Mat3 c = conormal_kernel(p, x, b);
    const Mat3 split = p.k0() * k1_kernel(x, b) - k2_kernel(p, x, b);
    const double scale = std::max(1.0, k1_kernel(x, b).cwiseAbs().maxCoeff());
    worst = std::max(worst, (c - split).cwiseAbs().maxCoeff() / scale);
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("conormal kernel matches finite differences of the Kelvin field") {
  for (auto [lam, mu] : {std::pair{1.0, 1.0}, {2.5, 0.7}, {0.0, 0.5}}) {
    LameParameters p(lam, mu);
    for (int t = 0; t < 25; ++t) {
      const Vec3 pos = random_unit();
      const SurfacePoint x = make_surface_point(pos, random_unit());
      const Vec3 y = pos + random_unit() * 1.1;
      const Mat3 m = conormal_kernel(p, x, y);
      for (int c = 0; c < 3; ++c) {
        const Vec3 b = Vec3::Unit(c);
        const Vec3 fd = fd_conormal_column(p, x, y, b, 1e-5);
        CHECK((m.col(c) - fd).norm() < 1e-8 * std::max(1.0, m.col(c).norm()));
      }
    }
  }
}

TEST_CASE("finite-difference consistency is second order") {
  LameParameters p(1.0, 1.0);
  const SurfacePoint x = make_surface_point(Vec3(0.2, 0.1, 0.9), Vec3(0, 0, 1));
  const Vec3 y(1.1, -0.4, 0.3);
  const Vec3 b(0.3, -1.0, 0.5);
  const Vec3 exact = conormal_kernel(p, x, y) * b;
  const double e1 = (fd_conormal_column(p, x, y, b, 1e-3) - exact).norm();
  const double e2 = (fd_conormal_column(p, x, y, b, 5e-4) - exact).norm();
  CHECK(e1 / e2 > 3.5);
  CHECK(e1 / e2 < 4.5);
}

TEST_CASE("weak singularity witness on the unit sphere") {
  LameParameters p(1.0, 1.0);
  double sup = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const Vec3 a = random_unit();
    Vec3 b = random_unit();
    if ((a - b).norm() < 1e-9) continue;
    const SurfacePoint x = make_surface_point(a, a);
    const double r = (a - b).norm();
    // on the unit sphere (x-y).n_x = r^2/2 exactly
    CHECK(std::abs((a - b).dot(a) - 0.5 * r * r) < 1e-12);
    sup = std::max(sup, k2_kernel(p, x, b).norm() * r);
  }
  CHECK(sup < 1.0);

  // K2*r and K1*r^2 stay bounded as the pair distance shrinks
  for (double s : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const Vec3 a = random_unit();
    Mat3 rot = Eigen::AngleAxisd(s, a.cross(random_unit()).normalized()).toRotationMatrix();
    const Vec3 b = rot * a;
    const SurfacePoint x = make_surface_point(a, a);
    const double r = (a - b).norm();
    CHECK(k2_kernel(p, x, b).norm() * r < 1.0);
    CHECK(k1_kernel(x, b).norm() * r * r < 1.0);
  }
}

TEST_CASE("k1 scalar entries fill the displayed block pattern") {
  const SurfacePoint x = make_surface_point(Vec3(0.4, -0.2, 0.8), random_unit());
  const Vec3 y(1.0, 0.5, -0.3);
  const Mat3 k1 = k1_kernel(x, y);
  const double c = 1.0 / (2.0 * kPi * std::pow((x.position - y).norm(), 3));
  CHECK(k1(0, 1) == doctest::Approx(c * k1_scalar(0, 1, x, y)).epsilon(1e-13));
  CHECK(k1(0, 2) == doctest::Approx(c * k1_scalar(0, 2, x, y)).epsilon(1e-13));
  CHECK(k1(1, 2) == doctest::Approx(c * k1_scalar(1, 2, x, y)).epsilon(1e-13));
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(LameParameters(1.0, -1.0), ConfigError);
  CHECK_THROWS_AS(LameParameters(-10.0, 1.0), ConfigError);
  LameParameters p(1.0, 1.0);
  CHECK_THROWS_AS(kelvin_matrix(p, Vec3::Zero()), SingularEvaluationError);
  const SurfacePoint x = make_surface_point(Vec3(1, 0, 0), Vec3(1, 0, 0));
  CHECK_THROWS_AS(k1_kernel(x, x.position), SingularEvaluationError);
  CHECK_THROWS_AS(k2_kernel(p, x, x.position), SingularEvaluationError);
  CHECK_THROWS_AS(conormal_kernel(p, x, x.position), SingularEvaluationError);
  CHECK_THROWS_AS(make_surface_point(Vec3::Zero(), Vec3(1, 1, 0)), GeometryError);
}
