#include "slicereg/evaluation.hpp"

#include <algorithm>
#include <cmath>

#include "slicereg/config.hpp"

namespace slicereg {

Quaternion eval(const PowerSeries& f, const Quaternion& q) {
  const auto& a = f.coeffs();
  Quaternion v = a.back();
  for (int n = static_cast<int>(a.size()) - 2; n >= 0; --n) v = q * v + a[n];
  return v;
}

EvalResult eval_checked(const PowerSeries& f, const Quaternion& q) {
  Quaternion v = eval(f, q);
  // geometric extrapolation of the dropped tail from the last ratio
  int N = f.truncation_order();
  double r = abs(q);
  double tail = 0;
  double aN = abs(f.coeff(N));
  double aN1 = N >= 1 ? abs(f.coeff(N - 1)) : 0;
  if (aN > 0) {
    double ratio = (aN1 > 0 ? aN / aN1 : 1.0) * r;
    double head = aN * std::pow(r, N) * ratio;
    tail = ratio < 1.0 ? head / (1.0 - ratio) : std::numeric_limits<double>::infinity();
  }
  return {v, tail};
}

std::complex<double> SliceComplexSeries::eval_F(std::complex<double> z) const {
  std::complex<double> v = 0;
  for (auto it = F.rbegin(); it != F.rend(); ++it) v = v * z + *it;
  return v;
}

std::complex<double> SliceComplexSeries::eval_G(std::complex<double> z) const {
  std::complex<double> v = 0;
  for (auto it = G.rbegin(); it != G.rend(); ++it) v = v * z + *it;
  return v;
}

Quaternion SliceComplexSeries::reassemble(std::complex<double> z) const {
  std::complex<double> fv = eval_F(z), gv = eval_G(z);
  Quaternion vi = I.value(), vj = J.value();
  Quaternion F_q = Quaternion{fv.real(), 0, 0, 0} + fv.imag() * vi;
  Quaternion G_q = Quaternion{gv.real(), 0, 0, 0} + gv.imag() * vi;
  return F_q + G_q * vj;
}

SliceComplexSeries split(const PowerSeries& f, const ImaginaryUnit& I, const ImaginaryUnit& J) {
  if (std::abs(axis_dot(I, J)) > config().eps_sphere)
    fail(Errc::not_orthogonal, "split requires J perpendicular to I");
  Quaternion vi = I.value(), vj = J.value(), vij = vi * vj;
  SliceComplexSeries out{{}, {}, I, J};
  out.F.reserve(f.coeffs().size());
  out.G.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) {
    // a = c0 + c1 I + c2 J + c3 IJ with real c_l (orthonormal basis of H)
    double c0 = real(a);
    double c1 = a.x * vi.x + a.y * vi.y + a.z * vi.z;
    double c2 = a.x * vj.x + a.y * vj.y + a.z * vj.z;
    double c3 = a.x * vij.x + a.y * vij.y + a.z * vij.z;
    out.F.emplace_back(c0, c1);
    out.G.emplace_back(c2, c3);
  }
  return out;
}

Quaternion represent(const Quaternion& f_plus, const Quaternion& f_minus, const ImaginaryUnit& J,
                     const ImaginaryUnit& I) {
  Quaternion ij = I.value() * J.value();
  return 0.5 * ((f_plus - ij * f_plus) + (f_minus + ij * f_minus));
}

SphereAffineData sphere_data(const PowerSeries& f, double x, double y) {
  ImaginaryUnit J = ImaginaryUnit::i();
  Quaternion fp = eval(f, Quaternion{x, 0, 0, 0} + y * J.value());
  Quaternion fm = eval(f, Quaternion{x, 0, 0, 0} - y * J.value());
  Quaternion a = 0.5 * (fp + fm);
  Quaternion b = 0.5 * (J.value() * (fm - fp));
  return {a, b};
}

SphereExtremes sphere_extremes(const SphereAffineData& d) {
  double base = norm_sq(d.a) + norm_sq(d.b);
  Quaternion ca = conj(d.a);
  double vx = real(ca * Quaternion::i() * d.b);
  double vy = real(ca * Quaternion::j() * d.b);
  double vz = real(ca * Quaternion::k() * d.b);
  double amp = 2.0 * std::sqrt(vx * vx + vy * vy + vz * vz);
  return {std::sqrt(std::max(0.0, base - amp)), std::sqrt(base + amp)};
}

SphereExtremes sphere_extremes(const PowerSeries& f, double x, double y) {
  return sphere_extremes(sphere_data(f, x, y));
}

}  // namespace slicereg
