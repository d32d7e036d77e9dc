#ifndef SLICEREG_FACTORIZATION_HPP
#define SLICEREG_FACTORIZATION_HPP

#include <span>

#include "slicereg/factor_form.hpp"
#include "slicereg/zeros.hpp"

namespace slicereg {

/// Exponent choice for elementary factors: a uniform constant or p_n = n.
struct PRule {
  enum class Kind { constant, linear_n } kind = Kind::linear_n;
  int value = 0;

  static PRule constant(int p) { return {Kind::constant, p}; }
  static PRule linear() { return {Kind::linear_n, 0}; }
  int at(int n) const { return kind == Kind::constant ? value : n; }
};

/// Modulus law of a zero sequence: |gamma_n| = c * growth^n, c * n^alpha, or
/// c * log(n+1).
struct ModulusRule {
  enum class Kind { geometric, power_law, logarithmic } kind;
  double c = 1;
  double param = 1;  // growth ratio or alpha

  double modulus(int n) const;
};

/// Elementary factor (1 - q a^{-1}) ⋆ e_p(q, a^{-1}); the exponential part
/// never vanishes, so the factor vanishes exactly at a.
FactorForm elementary_factor(const Quaternion& a, int p);

struct WeierstrassCertificate {
  bool certified = false;
  double condition_sum = 0;       // sum (r/|a_n|)^{p_n+1} (+ analytic tail)
  double tail_factor_bound = 0;   // bound on sum |1 - P_n(q)| past the built factors
  int factors_built = 0;
};

/// Certification of Eq-style condition sum (r/|a_n|)^{p_n+1} < inf for a
/// modulus rule on the working radius; analytic tail bounds, never
/// "looks converged".
WeierstrassCertificate certify_weierstrass(const ModulusRule& rule, const PRule& p, double radius,
                                           int built);

/// Canonical Weierstrass product for a finite zero list: spherical pairs fold
/// into real-coefficient factors, isolated roots get the running-rotation
/// corrected representative. Throws ConvergenceNotCertified when a rule-based
/// call fails certification.
FactorForm weierstrass_product(const ZeroList& zeros, const PRule& p, double radius,
                               WeierstrassCertificate* cert = nullptr);
FactorForm weierstrass_product(const ModulusRule& rule, const PRule& p, double radius, int count,
                               WeierstrassCertificate* cert = nullptr);

struct GenusResult {
  int genus = 0;
  bool infinite = false;
};

/// Smallest p with sum |gamma_n|^{-(p+1)} convergent under the modulus rule;
/// infinite when no power converges.
GenusResult genus(const ModulusRule& rule);

enum class BlaschkeKind { point, sphere };

/// Blaschke factor at a point (unique zero q = a) or at the sphere [a]
/// (real-coefficient ratio). Requires 0 < |a| < 1.
FactorForm blaschke_factor(const Quaternion& a, BlaschkeKind kind);

struct BlaschkeZeroSpec {
  std::vector<std::pair<Quaternion, int>> points;   // (a_j, n_j)
  std::vector<std::pair<Quaternion, int>> spheres;  // (c_j, m_j)
};

struct BlaschkeCertificate {
  bool certified = false;
  double condition_sum = 0;  // sum n_i (1-|a_i|) + 2 m_j (1-|c_j|)
};

/// Blaschke product with prescribed zeros: spherical factors first (they are
/// intrinsic and commute), then point factors with representatives corrected
/// greedily against the running product, B_{r-1}(a_r)^{-1} a_r B_{r-1}(a_r).
FactorForm blaschke_product(const BlaschkeZeroSpec& spec, BlaschkeCertificate* cert = nullptr);

/// 1 - |a_j| = c * ratio^j (geometric) or c * j^{-alpha} (power);
/// the convergence condition sums these with an analytic tail.
struct BlaschkeRule {
  enum class Kind { geometric, power } kind;
  double c = 1;
  double param = 0.5;  // ratio or alpha
};
BlaschkeCertificate blaschke_condition(const BlaschkeRule& rule);

struct ProductConvergenceReport {
  std::vector<Quaternion> partial_products;  // p_N
  std::vector<double> star_partials;         // p*_N
  double abs_sum = 0;
  bool bound_term_ok = true;   // |p_N - 1| <= p*_N - 1 at every N
  bool bound_exp_ok = true;    // p*_N <= exp(|a_1|+...+|a_N|)
  bool log_criterion = false;  // sum |Log(1+a_n)| bounded (skipped if undefined)
  bool convergent = false;
};

/// Partial products of prod (1 + a_n) with the modulus bounds of the
/// convergence theory checked at every N.
ProductConvergenceReport quaternion_product_convergence(std::span<const Quaternion> a);

}  // namespace slicereg

#endif
