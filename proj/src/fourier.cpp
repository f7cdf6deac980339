#include "enp/fourier.hpp"

#include <unsupported/Eigen/FFT>

namespace enp {

namespace {

void fft_all(ArrayXXcd& a, bool inverse) {
  Eigen::FFT<double> fft;
  const int n1 = static_cast<int>(a.rows());
  const int n2 = static_cast<int>(a.cols());
  Eigen::VectorXcd in(n1), out(n1);
  for (int j = 0; j < n2; ++j) {
    in = a.col(j).matrix();
    if (inverse)
      fft.inv(out, in);
    else
      fft.fwd(out, in);
    a.col(j) = out.array();
  }
  Eigen::VectorXcd rin(n2), rout(n2);
  for (int i = 0; i < n1; ++i) {
    rin = a.row(i).matrix().transpose();
    if (inverse)
      fft.inv(rout, rin);
    else
      fft.fwd(rout, rin);
    a.row(i) = rout.array().transpose();
  }
}

}  // namespace

ArrayXXcd fft2(const ArrayXXcd& a) {
  ArrayXXcd r = a;
  fft_all(r, false);
  return r;
}

ArrayXXcd ifft2(const ArrayXXcd& a) {
  ArrayXXcd r = a;
  fft_all(r, true);
  return r;
}

ArrayXXcd fft2(const ArrayXXd& a) { return fft2(ArrayXXcd(a.cast<cd>())); }

ArrayXXcd MultiplierOperator::apply_hat(const PeriodicGrid& g, const ArrayXXcd& fhat) const {
  ArrayXXcd out(g.n1, g.n2);
  for (int k2 = 0; k2 < g.n2; ++k2) {
    for (int k1 = 0; k1 < g.n1; ++k1) {
      cd m;
      if (k1 == 0 && k2 == 0)
        m = zero_mode_;
      else if (zero_nyquist_ && g.nyquist(k1, k2))
        m = cd(0, 0);
      else
        m = symbol_(g.xi(k1, k2));
      out(k1, k2) = m * fhat(k1, k2);
    }
  }
  return out;
}

PeriodicGridFunction MultiplierOperator::apply(const PeriodicGridFunction& f) const {
  const ArrayXXcd fhat = fft2(f.values);
  const ArrayXXcd ghat = apply_hat(f.grid, fhat);
  return {f.grid, ifft2(ghat).real()};
}

PeriodicGridFunction riesz_apply(int j, const PeriodicGridFunction& f) {
  if (j != 1 && j != 2) throw ConfigError("riesz_apply: component must be 1 or 2");
  MultiplierOperator op(
      [j](const Vec2& xi) { return cd(0.0, -xi(j - 1) / xi.norm()); },
      cd(0, 0), /*zero_nyquist=*/true);
  return op.apply(f);
}

VectorGridFunction halfspace_T_apply(const VectorGridFunction& f) {
  const PeriodicGridFunction f1{f.grid, f.comp[0]}, f2{f.grid, f.comp[1]},
      f3{f.grid, f.comp[2]};
  VectorGridFunction out;
  out.grid = f.grid;
  out.comp[0] = riesz_apply(1, f3).values;
  out.comp[1] = riesz_apply(2, f3).values;
  out.comp[2] = -(riesz_apply(1, f1).values + riesz_apply(2, f2).values);
  return out;
}

Eigen::Matrix3cd halfspace_symbol(const Vec2& xi) {
  const Vec2 xh = xi.normalized();
  const cd a(0.0, -xh(0)), b(0.0, -xh(1));
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
  m(0, 2) = a;
  m(1, 2) = b;
  m(2, 0) = -a;
  m(2, 1) = -b;
  return m;
}

double linf_norm(const ArrayXXd& a) { return a.cwiseAbs().maxCoeff(); }

double l2_norm(const VectorGridFunction& f) {
  double s = 0.0;
  for (const auto& c : f.comp) s += c.square().sum();
  return std::sqrt(s);
}

}  // namespace enp
