#ifndef SLICEREG_FACTOR_FORM_HPP
#define SLICEREG_FACTOR_FORM_HPP

#include <optional>
#include <variant>
#include <vector>

#include "slicereg/series.hpp"

namespace slicereg {

/// (q - a)
struct LinearFactor {
  Quaternion a;
};

/// q^2 - 2 Re(w) q + |w|^2, real coefficients; vanishes on the sphere [w].
struct SphericalQuadratic {
  double x;  // Re(w)
  double y;  // |Im(w)| > 0
};

/// e_p(q, a^{-1}) = exp_⋆(q a^{-1} + q^2 a^{-2}/2 + ... + q^p a^{-p}/p):
/// the nonvanishing tail of a Weierstrass elementary factor. Coefficients
/// live in the slice of a, so values come from the complex exponential via
/// the Representation Formula rather than a truncated series.
struct ElementaryExpFactor {
  Quaternion a;
  int p;
};

/// Folded elementary exponential of a sphere pair beta, conj(beta):
/// exp(sum_k 2 q^k Re(beta^k)/(k |beta|^{2k})), real coefficients.
struct SphericalElementaryExp {
  Quaternion beta;
  int p;
};

/// Blaschke factor B_a(q) = (1 - q conj(a))^{-⋆} ⋆ (a - q) conj(a)/|a|,
/// evaluated through its pointwise rewriting.
struct BlaschkeLinear {
  Quaternion a;
};

/// Blaschke factor at the sphere [a]: a real-coefficient ratio.
struct BlaschkeSpherical {
  Quaternion a;
};

/// 1 - q a^{-1}: the linear part of an elementary factor, kept whole so no
/// constant needs to commute past later factors.
struct ElementaryLinear {
  Quaternion a;
};

/// 1 - 2 Re(beta) q / |beta|^2 + q^2/|beta|^2: folded linear pair of a
/// spherical zero, real coefficients.
struct ElementarySpherical {
  Quaternion beta;
};

using Factor = std::variant<LinearFactor, SphericalQuadratic, ElementaryExpFactor,
                            SphericalElementaryExp, BlaschkeLinear, BlaschkeSpherical,
                            ElementaryLinear, ElementarySpherical>;

/// A symbolic ⋆-product of factors with a right constant multiplier,
/// evaluable without expanding the product.
struct FactorForm {
  std::vector<Factor> factors;
  Quaternion constant = Quaternion::one();

  static FactorForm one() { return {}; }
};

/// Value of a single factor at a point.
Quaternion eval_factor(const Factor& f, const Quaternion& s);

/// Left-to-right evaluation by the pointwise-product theorem: keep the
/// running value v and rotate the point, p~ = v^{-1} p v, before each new
/// factor; a vanishing prefix makes the whole product vanish.
Quaternion eval_factored(const FactorForm& F, const Quaternion& p);

/// Expansion into a truncated power series (for cross-checks and analysis).
PowerSeries expand(const FactorForm& F, std::optional<int> cap = {});

/// Degree of the polynomial part (exponential factors excluded).
int polynomial_degree(const FactorForm& F);

/// True when every factor has real coefficients.
bool is_intrinsic(const FactorForm& F);

}  // namespace slicereg

#endif
