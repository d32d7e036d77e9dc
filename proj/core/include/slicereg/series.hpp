#ifndef SLICEREG_SERIES_HPP
#define SLICEREG_SERIES_HPP

#include <optional>
#include <vector>

#include "slicereg/quaternion.hpp"

namespace slicereg {

/// Truncated power series f(q) = sum_{n<=N} q^n a_n. Powers of q stand on the
/// left, coefficients on the right, always. The truncated() flag records
/// whether any producing operation dropped terms beyond the configured cap.
class PowerSeries {
 public:
  PowerSeries() : coeffs_(1) {}
  explicit PowerSeries(std::vector<Quaternion> coeffs, bool truncated = false);

  static PowerSeries zero(int order = 0) { return PowerSeries(std::vector<Quaternion>(order + 1)); }
  static PowerSeries constant(const Quaternion& c) { return PowerSeries({c}); }
  /// The identity series q.
  static PowerSeries variable() { return PowerSeries({Quaternion::zero(), Quaternion::one()}); }
  /// q^n * c.
  static PowerSeries monomial(int n, const Quaternion& c);

  int truncation_order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Quaternion>& coeffs() const { return coeffs_; }
  const Quaternion& coeff(int n) const;
  bool truncated() const { return truncated_; }
  void mark_truncated() { truncated_ = true; }

  /// Largest n with a_n significantly nonzero; -1 for the zero series.
  int degree() const;
  bool is_zero() const { return degree() < 0; }
  /// Valuation: least n with a_n != 0. The zero series reports N+1 with
  /// is_zero() set (finite stand-in for the omega = +infinity convention).
  int valuation() const;
  /// max |a_n|, the natural magnitude scale of the series.
  double scale() const;
  /// True when every coefficient is real within eps_rel * scale.
  bool has_real_coeffs() const;

  PowerSeries truncated_to(int order) const;

 private:
  std::vector<Quaternion> coeffs_;
  bool truncated_ = false;
};

PowerSeries operator+(const PowerSeries& f, const PowerSeries& g);
PowerSeries operator-(const PowerSeries& f, const PowerSeries& g);
PowerSeries operator*(const PowerSeries& f, double s);
PowerSeries operator*(double s, const PowerSeries& f);
/// Right multiplication by a constant: coefficients a_n c.
PowerSeries times_const(const PowerSeries& f, const Quaternion& c);
/// Left multiplication by a constant: coefficients c a_n.
PowerSeries const_times(const Quaternion& c, const PowerSeries& f);

/// Slice regular product: c_n = sum_{r=0}^n a_r b_{n-r}, truncated at
/// min(N_f + N_g, cap). Associative and distributive, not commutative.
PowerSeries star_mul(const PowerSeries& f, const PowerSeries& g, std::optional<int> cap = {});

/// n-th ⋆-power.
PowerSeries star_pow(const PowerSeries& f, int n, std::optional<int> cap = {});

/// Conjugate series f^c: coefficients conj(a_n).
PowerSeries conjugate(const PowerSeries& f);

/// Symmetrization (normal form) f^s = f ⋆ f^c = f^c ⋆ f; real coefficients.
PowerSeries symmetrize(const PowerSeries& f, std::optional<int> cap = {});

/// ⋆-inverse computed as (f^s)^{-1} ⋆ f^c, with (f^s)^{-1} the reciprocal of
/// a real-coefficient series. Requires a_0 != 0 (SingularAtOrigin otherwise).
/// Satisfies f ⋆ f^{-⋆} = 1 + O(q^{N+1}).
PowerSeries star_inverse(const PowerSeries& f, std::optional<int> cap = {});

/// Composition g • w = sum_n (w(q))^{⋆n} a_n. Requires w(0) = 0
/// (NonzeroConstantTerm otherwise). Not associative in general; associative
/// when the inner series has real coefficients.
PowerSeries bullet_compose(const PowerSeries& g, const PowerSeries& w, std::optional<int> cap = {});

enum class InverseSide { left, right };

/// Compositional inverse: right side solves g • g_r = q, left solves
/// g_l • g = q, both to the truncation order. Requires g(0) = 0 and
/// g'(0) != 0 (NotInvertible otherwise).
PowerSeries compose_inverse(const PowerSeries& g, InverseSide side, std::optional<int> cap = {});

/// Slice derivative: coefficients n a_n shifted down one degree.
PowerSeries derivative(const PowerSeries& f);

/// Radius of convergence estimate 1/limsup |a_n|^{1/n} over the tail window.
/// infinite is set when the limsup estimate is below the configured floor or
/// the window root sequence decays like a negative power of n.
struct RadiusEstimate {
  double radius;
  bool infinite;
  double limsup_estimate;
};
RadiusEstimate radius(const PowerSeries& f);

enum class Transcendental { exp, sin, cos };

/// ⋆-transcendental of a finite polynomial p: exp gives sum (p)^{⋆n}/n!,
/// sin/cos the alternating variants. When p's coefficients lie in one slice,
/// the restriction to that slice is the classical complex composition.
PowerSeries transcend(Transcendental kind, const PowerSeries& p, std::optional<int> cap = {});

/// Convenience: truncated exponential series e^q = sum q^n/n!.
PowerSeries exp_series(int order);

}  // namespace slicereg

#endif
