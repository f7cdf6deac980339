#pragma once

#include "enp/core.hpp"

namespace enp {

// Closed-form elasticity kernels. Throughout, z = x - y and r = |z|.
//
// The traction kernel of the Kelvin matrix splits algebraically as
//   conormal_kernel = k0 * k1_kernel - k2_kernel,
// with k1 carrying the full r^-2 singularity (antisymmetric dyad) and k2
// weakly singular on smooth surfaces since (x-y).n_x = O(r^2).

namespace detail {
inline void require_separated(double r2, const char* who) {
  if (!(r2 > 0.0)) throw SingularEvaluationError(std::string(who) + ": coincident points");
}
}  // namespace detail

/// Kelvin matrix of the fundamental solution,
///   Gamma_ij(x) = -(alpha1/4pi) delta_ij/|x| - (alpha2/4pi) x_i x_j/|x|^3.
inline Mat3 kelvin_matrix(const LameParameters& p, const Vec3& x) {
  const double r2 = x.squaredNorm();
  detail::require_separated(r2, "kelvin_matrix");
  const double r = std::sqrt(r2);
  const double c1 = -p.alpha1() / (4.0 * kPi * r);
  const double c2 = -p.alpha2() / (4.0 * kPi * r * r2);
  // outer product materialized first so scaling keeps exact entrywise symmetry
  const Mat3 xx = x * x.transpose();
  return c1 * Mat3::Identity() + c2 * xx;
}

/// Singular antisymmetric kernel, K1 = [z n^T - n z^T] / (2 pi r^3).
inline Mat3 k1_kernel(const SurfacePoint& x, const Vec3& y) {
  const Vec3 z = x.position - y;
  const double r2 = z.squaredNorm();
  detail::require_separated(r2, "k1_kernel");
  const double c = 1.0 / (2.0 * kPi * r2 * std::sqrt(r2));
  Mat3 d = z * x.normal.transpose();
  return c * (d - d.transpose());
}

/// Weakly singular symmetric remainder. With zn = (x-y).n_x,
///   K2 = -[mu/(2mu+lambda)] zn/(4pi r^3) I
///        -[3(mu+lambda)/(2mu+lambda)] zn/(4pi r^5) z z^T.
inline Mat3 k2_kernel(const LameParameters& p, const SurfacePoint& x, const Vec3& y) {
  const Vec3 z = x.position - y;
  const double r2 = z.squaredNorm();
  detail::require_separated(r2, "k2_kernel");
  const double r = std::sqrt(r2);
  const double zn = z.dot(x.normal);
  const double denom = 2.0 * p.mu() + p.lambda();
  const double cI = -p.mu() / denom * zn / (4.0 * kPi * r * r2);
  const double cz = -3.0 * (p.mu() + p.lambda()) / denom * zn / (4.0 * kPi * r * r2 * r2);
  const Mat3 zz = z * z.transpose();
  return cI * Mat3::Identity() + cz * zz;
}

/// Conormal derivative of the Kelvin matrix, assembled from the split.
inline Mat3 conormal_kernel(const LameParameters& p, const SurfacePoint& x, const Vec3& y) {
  return p.k0() * k1_kernel(x, y) - k2_kernel(p, x, y);
}

/// Scalar entries of K1 in its antisymmetric block pattern:
///   2 pi r^3 K1 = [[0, k12, k13], [-k12, 0, k23], [-k13, -k23, 0]]
/// with k_ij(x,y) = z_i n_j(x) - z_j n_i(x).
inline double k1_scalar(int i, int j, const SurfacePoint& x, const Vec3& y) {
  const Vec3 z = x.position - y;
  return z(i) * x.normal(j) - z(j) * x.normal(i);
}

}  // namespace enp
