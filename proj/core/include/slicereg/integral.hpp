#ifndef SLICEREG_INTEGRAL_HPP
#define SLICEREG_INTEGRAL_HPP

#include <span>

#include "slicereg/growth.hpp"
#include "slicereg/series.hpp"

namespace slicereg {

/// An origin- or real-centered circle in the slice C_I, discretized with a
/// power-of-two node count (>= 64).
struct ContourSpec {
  ImaginaryUnit slice = ImaginaryUnit::i();
  double center = 0;
  double radius = 1;
  int nodes = 256;

  static ContourSpec make(const ImaginaryUnit& I, double radius, int nodes, double center = 0);
};

/// Slice Cauchy formula: value (n = 0) or n-th slice derivative of f at q
/// from quadrature of the left Cauchy kernel over the contour. The node
/// count doubles until the step change drops under the quadrature tolerance.
Quaternion cauchy_eval(const PowerSeries& f, const Quaternion& q, int n, const ContourSpec& C);

/// Cauchy estimates |f^(n)(q)| <= n!/R^n max_{boundary} |f| for n <= n_max,
/// one report row per order.
std::vector<CheckRow> cauchy_estimate_check(const PowerSeries& f, const Quaternion& q, double R,
                                            int n_max);
/// Same rows, but with externally supplied derivative magnitudes (negative
/// controls in tests).
std::vector<CheckRow> cauchy_estimate_check_with(std::span<const double> derivative_magnitudes,
                                                 const PowerSeries& f, const Quaternion& q,
                                                 double R);

/// Schwarz formula: reconstructs f(q) from boundary samples of
/// alpha(x, y) = (f(x+Iy) + f(x-Iy))/2 on |z| = r in C_I. The kernel
/// (re^{It} - q)^{-⋆} ⋆ (re^{It} + q) is evaluated in the closed form
/// (q^2 - 2 Re(c) q + |c|^2)^{-1} (|c|^2 + q (conj(c) - c) - q^2).
/// Requires f(0) real; the sample mean detects violations.
Quaternion schwarz_eval(std::span<const Quaternion> alpha_samples, double r,
                        const ImaginaryUnit& I, const Quaternion& q);
Quaternion schwarz_eval(const PowerSeries& f, const ContourSpec& C, const Quaternion& q);

/// Poisson kernel of the unit ball, (1-r^2)/(1-2r cos(theta)+r^2), r < 1.
double poisson(double r, double theta);

/// Borel transform of f = sum q^k a_k / k!: phi(q) = sum q^{-(k+1)} a_k,
/// slice regular for |q| > sigma (the exponential type).
struct BorelSeries {
  std::vector<Quaternion> coeffs;  // a_k
  double sigma = 0;

  Quaternion eval(const Quaternion& w) const;
};
BorelSeries borel(const PowerSeries& f);

/// Inversion: f(q) = (1/2pi) int e_⋆^{qw} dw_I phi(w) over a contour of
/// radius > sigma.
Quaternion borel_invert(const BorelSeries& phi, const Quaternion& q, const ContourSpec& C);

/// e_⋆^{qw}: the slice regular extension of z -> e^{zw} off the slice of w.
Quaternion exp_qw(const Quaternion& q, const Quaternion& w);

}  // namespace slicereg

#endif
