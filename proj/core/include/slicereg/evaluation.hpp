#ifndef SLICEREG_EVALUATION_HPP
#define SLICEREG_EVALUATION_HPP

#include <complex>
#include <vector>

#include "slicereg/series.hpp"

namespace slicereg {

/// Value of f at q plus a tail-bound estimate: sum_{n>N} |a_n||q|^n
/// extrapolated geometrically from the last coefficient ratio.
struct EvalResult {
  Quaternion value;
  double tail_bound;
};

/// Horner evaluation from the top degree down, multiplying by q on the left
/// to respect the left-power / right-coefficient convention.
Quaternion eval(const PowerSeries& f, const Quaternion& q);
EvalResult eval_checked(const PowerSeries& f, const Quaternion& q);

/// Splitting of the restriction f_I = F + G J into two complex series on the
/// slice C_I, with J perpendicular to I.
struct SliceComplexSeries {
  std::vector<std::complex<double>> F;
  std::vector<std::complex<double>> G;
  ImaginaryUnit I;
  ImaginaryUnit J;

  std::complex<double> eval_F(std::complex<double> z) const;
  std::complex<double> eval_G(std::complex<double> z) const;
  /// Reassembles f(x+Iy) = F(z) + G(z) J as a quaternion.
  Quaternion reassemble(std::complex<double> z) const;
};

/// Resolves each coefficient in the basis {1, I, J, IJ}. Requires J ⟂ I.
SliceComplexSeries split(const PowerSeries& f, const ImaginaryUnit& I, const ImaginaryUnit& J);

/// Representation Formula: f(x+Iy) = (1-IJ)/2 f(x+Jy) + (1+IJ)/2 f(x-Jy).
Quaternion represent(const Quaternion& f_plus, const Quaternion& f_minus, const ImaginaryUnit& J,
                     const ImaginaryUnit& I);

/// The affine data of f on the sphere x + S y: f(x+Iy) = a + I b for all I.
struct SphereAffineData {
  Quaternion a;
  Quaternion b;
};
SphereAffineData sphere_data(const PowerSeries& f, double x, double y);

/// Closed-form extremes of |a + I b| over I in S:
/// |a+Ib|^2 = |a|^2+|b|^2 + 2<conj(a) I b>_R, linear in I, so the extreme
/// values are |a|^2+|b|^2 ± 2|v| with v_l = Re(conj(a) e_l b).
struct SphereExtremes {
  double min;
  double max;
};
SphereExtremes sphere_extremes(const SphereAffineData& d);
SphereExtremes sphere_extremes(const PowerSeries& f, double x, double y);

}  // namespace slicereg

#endif
