#pragma once

#include "enp/core.hpp"

#include <array>
#include <complex>
#include <functional>

namespace enp {

using ArrayXXd = Eigen::ArrayXXd;
using ArrayXXcd = Eigen::ArrayXXcd;
using cd = std::complex<double>;

/// Uniform periodic grid over a rectangle [o1,o1+L1) x [o2,o2+L2).
/// Index (i,j) samples u = origin + (i*L1/n1, j*L2/n2).
struct PeriodicGrid {
  int n1 = 0, n2 = 0;
  double L1 = 2.0 * kPi, L2 = 2.0 * kPi;
  Vec2 origin = Vec2::Zero();

  PeriodicGrid() = default;
  PeriodicGrid(int n, double L) : n1(n), n2(n), L1(L), L2(L) {}
  PeriodicGrid(int n1_, int n2_, double L1_, double L2_, const Vec2& o)
      : n1(n1_), n2(n2_), L1(L1_), L2(L2_), origin(o) {}

  double dx1() const { return L1 / n1; }
  double dx2() const { return L2 / n2; }
  Vec2 point(int i, int j) const {
    return origin + Vec2(i * dx1(), j * dx2());
  }
  static int signed_index(int k, int n) { return 2 * k < n ? k : k - n; }
  Vec2 xi(int k1, int k2) const {
    return Vec2(2.0 * kPi * signed_index(k1, n1) / L1,
                2.0 * kPi * signed_index(k2, n2) / L2);
  }
  bool nyquist(int k1, int k2) const {
    return (n1 % 2 == 0 && k1 == n1 / 2) || (n2 % 2 == 0 && k2 == n2 / 2);
  }
  long size() const { return static_cast<long>(n1) * n2; }
};

/// Real scalar samples over a periodic grid.
struct PeriodicGridFunction {
  PeriodicGrid grid;
  ArrayXXd values;  // shape n1 x n2
};

/// Three-component samples over a periodic grid.
struct VectorGridFunction {
  PeriodicGrid grid;
  std::array<ArrayXXd, 3> comp;
};

ArrayXXcd fft2(const ArrayXXcd& a);
ArrayXXcd ifft2(const ArrayXXcd& a);
ArrayXXcd fft2(const ArrayXXd& a);

/// Scalar Fourier multiplier with explicit zero-mode and Nyquist policy.
/// Conjugate-symmetric symbols map real data to real data; Nyquist lines
/// are zeroed when requested so odd imaginary symbols stay real-to-real.
class MultiplierOperator {
 public:
  MultiplierOperator(std::function<cd(const Vec2&)> symbol, cd zero_mode = cd(0, 0),
                     bool zero_nyquist = false)
      : symbol_(std::move(symbol)), zero_mode_(zero_mode), zero_nyquist_(zero_nyquist) {}

  ArrayXXcd apply_hat(const PeriodicGrid& g, const ArrayXXcd& fhat) const;
  PeriodicGridFunction apply(const PeriodicGridFunction& f) const;

 private:
  std::function<cd(const Vec2&)> symbol_;
  cd zero_mode_;
  bool zero_nyquist_;
};

/// Flat Riesz transform R_j, j in {1,2}: multiplier -i xi_j / |xi|,
/// zero frequency mapped to 0.
PeriodicGridFunction riesz_apply(int j, const PeriodicGridFunction& f);

/// Half-space operator [[0,0,R1],[0,0,R2],[-R1,-R2,0]] applied componentwise.
VectorGridFunction halfspace_T_apply(const VectorGridFunction& f);

/// Its 3x3 symbol at frequency xi (unit-normalized internally).
Eigen::Matrix3cd halfspace_symbol(const Vec2& xi);

double linf_norm(const ArrayXXd& a);
double l2_norm(const VectorGridFunction& f);

}  // namespace enp
