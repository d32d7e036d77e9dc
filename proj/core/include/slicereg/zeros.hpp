#ifndef SLICEREG_ZEROS_HPP
#define SLICEREG_ZEROS_HPP

#include <span>
#include <vector>

#include "slicereg/series.hpp"

namespace slicereg {

/// A classified zero: a real point, an isolated nonreal point, or a whole
/// 2-sphere x + S y. Isolated multiplicity counts the deflation chain on the
/// sphere; spherical multiplicity counts real-quadratic factors.
struct ZeroRecord {
  enum class Kind { real, isolated, sphere };
  Kind kind;
  double x = 0;       // real root, or Re of the sphere
  double y = 0;       // |Im| of the sphere (> 0)
  Quaternion point;   // isolated zero
  int multiplicity = 1;

  double modulus() const;

  static ZeroRecord real_root(double x, int mult = 1);
  static ZeroRecord isolated(const Quaternion& p, int mult = 1);
  static ZeroRecord sphere(double x, double y, int mult = 1);
};

/// Zeros ordered by nondecreasing modulus; conjugate pairs of a sphere are a
/// single record, so they stay together by construction. Equal moduli are
/// ordered by (Re, |Im|, components), spheres before isolated points.
struct ZeroList {
  std::vector<ZeroRecord> records;

  void sort_canonical();
  /// Total count with spheres counted twice per multiplicity (the gamma_n
  /// sequence length for polynomials: equals the degree).
  int total_count() const;
  /// Moduli of the gamma_n sequence (spheres contribute 2 per multiplicity),
  /// nondecreasing.
  std::vector<double> moduli_expanded() const;
  /// Isolated multiplicity at the point plus the spherical multiplicity of
  /// its sphere: the multiplicity the point carries inside the zero set.
  int total_multiplicity_at(const Quaternion& p) const;
};

/// Zero classification and deflation.
///
/// find_zeros factors the zero set of a ⋆-polynomial: it peels the smallest
/// remaining sphere of the symmetrization's root set (Aberth-Ehrlich roots,
/// multiplicity-aware Newton refinement), classifies it on the working
/// polynomial (whole sphere / point / real), deflates, and repeats; point
/// representatives are then re-extracted from the original polynomial since
/// linear deflation rotates later zeros. The degree accounting
/// sum(real) + sum(isolated) + 2 sum(sphere) = deg P is enforced.
ZeroList find_zeros(const PowerSeries& P, bool assume_polynomial = true);

struct SphereLocation {
  enum class Kind { whole_sphere, point, none } kind;
  Quaternion point;  // set for Kind::point
};

/// Decides how P meets the sphere x + S y from its affine data (a, b):
/// both negligible -> the whole sphere vanishes; otherwise a single point
/// x + I y with I = -a b^{-1} when that I lands on S; otherwise no zero.
SphereLocation locate_on_sphere(const PowerSeries& P, double x, double y);

/// Removes one verified zero: spheres divide out the real quadratic
/// (q-x)^2 + y^2, points divide out the left factor (q-p) by the top-down
/// synthetic recursion. NotAZero when the division residual is too large.
PowerSeries deflate(const PowerSeries& P, const ZeroRecord& z);

struct ZeroStatistics {
  std::vector<double> t_grid;
  std::vector<double> counting;   // n(t) with spheres counted twice
  double convergence_exponent;
  double upper_density;
};

/// Counting function, convergence exponent (tail fit of log n(r)/log r) and
/// upper density sup n(r)/r^rho1 over the tail grid.
ZeroStatistics zero_statistics(const ZeroList& Z, std::span<const double> t_grid);

}  // namespace slicereg

#endif
