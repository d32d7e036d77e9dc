#ifndef SLICEREG_GROWTH_HPP
#define SLICEREG_GROWTH_HPP

#include <string>
#include <vector>

#include "slicereg/factor_form.hpp"
#include "slicereg/zeros.hpp"

namespace slicereg {

/// Order/type estimate with the method that produced it and its fit residual.
struct GrowthEstimate {
  double order = 0;
  double type = 0;
  bool order_infinite = false;
  enum class TypeClass { minimal, normal, maximal, undefined } type_class = TypeClass::undefined;
  std::string method;
  double fit_residual = 0;
};

/// One row of a verification report: lhs/rhs of the checked relation and the
/// slack rhs - lhs (nonnegative when the check holds as an inequality).
struct CheckRow {
  std::string name;
  std::string params;
  double lhs = 0;
  double rhs = 0;
  double slack = 0;
  bool pass = false;
};

/// Maximum modulus over the sphere |q| = r with the per-sphere closed-form
/// extremes, refined around the best grid angle; A_f(r) is the analogous
/// maximum of |alpha|. Intrinsic inputs take the single-slice shortcut.
struct ModulusMaxima {
  double M;  // max |f|
  double A;  // max |alpha|
};
ModulusMaxima max_modulus(const PowerSeries& f, double r, int grid = 0);
ModulusMaxima max_modulus(const FactorForm& f, double r, int grid = 0);

/// Order and type from the Taylor tail: least squares of
/// ln(1/|a_n|) = (1/rho) n ln n + c n (+ lower-order regressors) over the
/// window [N/2, N]; sigma from (sigma e rho)^{1/rho} via the fitted c.
GrowthEstimate order_type_from_coeffs(const PowerSeries& f);

/// Order and type from modulus samples (r, M_f(r)): slope of log log M
/// against log r; polynomial growth reports order 0.
GrowthEstimate order_type_from_modulus(const std::vector<std::pair<double, double>>& samples);

/// Jensen identity for f = g h with g intrinsic (spherical/real zeros) and h
/// carrying the isolated zeros: compares the zero-counting integral with the
/// boundary means of log|g| and log|h^s|/2; also evaluates the Jensen
/// inequality n_f(r) <= log(M_g(er) M_h(er)) when |g(0)| = |h(0)| = 1.
struct JensenReport {
  double lhs = 0;
  double rhs = 0;
  double residual = 0;
  double used_radius = 0;
  bool radius_nudged = false;
  bool inequality_applicable = false;
  bool inequality_holds = true;
  double count_lhs = 0;
  double bound_rhs = 0;
};
JensenReport jensen_check(const FactorForm& g, const FactorForm& h, double R);

/// Carathéodory, Harnack, zero-free log lower bound, and maximum/minimum
/// modulus surrogate checks on grids. Hypothesis failures are reported as
/// rows with pass = false and "hypothesis" in the name rather than thrown,
/// except for structurally impossible requests.
std::vector<CheckRow> inequality_suite(const PowerSeries& f, const Quaternion& q0, double r,
                                       double R);

/// Exclusion region built from axially symmetric sets
/// D(center, radius) = { x+Iy : (x-u)^2 + (y-v)^2 <= r^2, I in S }:
/// 4-balls when the center is real, solid tori otherwise.
struct ExclusionRegion {
  struct Disk {
    Quaternion center;  // u + v i canonical representative
    double radius;
  };
  std::vector<Disk> disks;
  double certified_bound = 0;
  double gamma_radius = 0;  // Ehrenpreis-Malgrange sphere radius, when built
  bool contains(const Quaternion& q) const;
};

enum class LowerBoundMode { origin, general, exterior };

/// Ehrenpreis-Malgrange lower bounds: a sphere (origin mode, bound
/// |a_m| (R/(2(M+1)))^m with M = distinct spheres + distinct isolated), a
/// hypersurface around a general center (bound |a_m| (R/(2(2m+1)))^m), or the
/// exterior of <= m disks where the general bound holds.
ExclusionRegion lower_bound_region(const FactorForm& P, const Quaternion& q0, double R,
                                   LowerBoundMode mode);

/// Cartan exclusion balls: either one doubled ball when a half-plane disk of
/// radius H holds all zeros, or the rank construction with radii lambda H/n;
/// after doubling the radii sum to exactly 2H and |P| > (H/e)^n outside.
ExclusionRegion cartan_balls(const ZeroList& Z, double H);

/// Order/type of f, g and f ⋆ g side by side with the product law verdict.
struct StarGrowthReport {
  GrowthEstimate f, g, product;
  double expected_order = 0;
  bool order_law_holds = false;
};
StarGrowthReport star_product_growth(const PowerSeries& f, const PowerSeries& g);

}  // namespace slicereg

#endif
