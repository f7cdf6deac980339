#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace enp {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using Mat32 = Eigen::Matrix<double, 3, 2>;

inline constexpr double kPi = 3.14159265358979323846;

/// Evaluating a kernel at coincident (or zero-separation) points.
struct SingularEvaluationError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Degenerate chart Jacobian, point outside a chart, patch not fitting, ...
struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid run configuration (maps to CLI exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Resource ceiling exceeded (maps to CLI exit code 3).
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Eigensolver or other numeric backend failure.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Isotropic Lame pair (lambda, mu) under strong convexity, with the
/// derived Kelvin coefficients and the spectral constant k0.
class LameParameters {
 public:
  LameParameters(double lambda, double mu) : lambda_(lambda), mu_(mu) {
    if (!(mu > 0.0) || !(3.0 * lambda + 2.0 * mu > 0.0))
      throw ConfigError("Lame parameters violate strong convexity: lambda=" +
                        std::to_string(lambda) + " mu=" + std::to_string(mu));
    alpha1_ = 0.5 * (1.0 / mu + 1.0 / (2.0 * mu + lambda));
    alpha2_ = 0.5 * (1.0 / mu - 1.0 / (2.0 * mu + lambda));
    k0_ = mu / (2.0 * (2.0 * mu + lambda));
  }

  double lambda() const { return lambda_; }
  double mu() const { return mu_; }
  double alpha1() const { return alpha1_; }
  double alpha2() const { return alpha2_; }
  double k0() const { return k0_; }

 private:
  double lambda_, mu_;
  double alpha1_, alpha2_, k0_;
};

/// A point on the boundary with its outward unit normal.
struct SurfacePoint {
  Vec3 position;
  Vec3 normal;
};

inline SurfacePoint make_surface_point(const Vec3& position, const Vec3& normal) {
  if (std::abs(normal.norm() - 1.0) > 1e-12)
    throw GeometryError("surface normal is not unit length");
  return SurfacePoint{position, normal};
}

}  // namespace enp
