#include "slicereg/factor_form.hpp"

#include <cmath>
#include <complex>

#include "slicereg/config.hpp"
#include "slicereg/evaluation.hpp"

namespace slicereg {

namespace {

// a as the complex number Re(a) + i |Im(a)| on its own slice
std::complex<double> slice_complex(const Quaternion& a) { return {real(a), abs_imag(a)}; }

// exponent polynomial of e_p(q, a^{-1}): sum_{k=1..p} q^k a^{-k}/k
std::vector<std::complex<double>> elementary_exponent(const Quaternion& a, int p) {
  std::complex<double> ainv = 1.0 / slice_complex(a);
  std::vector<std::complex<double>> c(p + 1, 0.0);
  std::complex<double> pw = 1.0;
  for (int k = 1; k <= p; ++k) {
    pw *= ainv;
    c[k] = pw / static_cast<double>(k);
  }
  return c;
}

std::complex<double> ceval(const std::vector<std::complex<double>>& c, std::complex<double> z) {
  std::complex<double> v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + *it;
  return v;
}

// slice regular extension of a complex function given on C_I by its values
// at z and conj(z): ext(h)(s) = (h(z)+h(zbar))/2 + I_s I (h(zbar)-h(z))/2
Quaternion extend_from_slice(std::complex<double> hz, std::complex<double> hzbar,
                             const ImaginaryUnit& I, const Quaternion& s) {
  Quaternion vi = I.value();
  Quaternion h1 = Quaternion{hz.real(), 0, 0, 0} + hz.imag() * vi;
  Quaternion h2 = Quaternion{hzbar.real(), 0, 0, 0} + hzbar.imag() * vi;
  Quaternion is = axis_of(s).value();
  return 0.5 * (h1 + h2) + 0.5 * (is * (vi * (h2 - h1)));
}

std::complex<double> cexp(std::complex<double> z) { return std::exp(z); }

// real coefficients of the folded sphere-pair exponent:
// sum_{k=1..p} q^k 2 Re(beta^k)/(k |beta|^{2k})
std::vector<double> folded_exponent(const Quaternion& beta, int p) {
  std::complex<double> b = slice_complex(beta);
  double b2 = std::norm(b);
  std::vector<double> c(p + 1, 0.0);
  std::complex<double> pw = 1.0;
  double scale = 1.0;
  for (int k = 1; k <= p; ++k) {
    pw *= b;
    scale *= b2;
    c[k] = 2.0 * pw.real() / (k * scale);
  }
  return c;
}

Quaternion eval_real_poly(const std::vector<double>& c, const Quaternion& s) {
  Quaternion v{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = s * v + Quaternion{*it, 0, 0, 0};
  return v;
}

}  // namespace

Quaternion eval_factor(const Factor& f, const Quaternion& s) {
  return std::visit(
      [&](const auto& fac) -> Quaternion {
        using T = std::decay_t<decltype(fac)>;
        if constexpr (std::is_same_v<T, LinearFactor>) {
          return s - fac.a;
        } else if constexpr (std::is_same_v<T, SphericalQuadratic>) {
          double m2 = fac.x * fac.x + fac.y * fac.y;
          return s * s - 2.0 * fac.x * s + Quaternion{m2, 0, 0, 0};
        } else if constexpr (std::is_same_v<T, ElementaryExpFactor>) {
          if (fac.p == 0) return Quaternion::one();
          auto w = elementary_exponent(fac.a, fac.p);
          ImaginaryUnit I = axis_of(fac.a);
          std::complex<double> z{real(s), abs_imag(s)};
          return extend_from_slice(cexp(ceval(w, z)), cexp(ceval(w, std::conj(z))), I, s);
        } else if constexpr (std::is_same_v<T, SphericalElementaryExp>) {
          if (fac.p == 0) return Quaternion::one();
          return qexp(eval_real_poly(folded_exponent(fac.beta, fac.p), s));
        } else if constexpr (std::is_same_v<T, BlaschkeLinear>) {
          const Quaternion& a = fac.a;
          Quaternion lc = Quaternion::one() - s * a;  // lambda^c(s), lambda = 1 - q conj(a)
          Quaternion st = conjugate_by(lc, s);
          return inv(Quaternion::one() - st * conj(a)) * (a - st) * (conj(a) / abs(a));
        } else if constexpr (std::is_same_v<T, BlaschkeSpherical>) {
          const Quaternion& a = fac.a;
          double m2 = norm_sq(a), re2 = 2.0 * real(a);
          Quaternion den = Quaternion::one() - re2 * s + (s * s) * m2;
          Quaternion num = Quaternion{m2, 0, 0, 0} - re2 * s + s * s;
          return inv(den) * num;
        } else if constexpr (std::is_same_v<T, ElementaryLinear>) {
          return Quaternion::one() - s * inv(fac.a);
        } else {
          double b2 = norm_sq(fac.beta);
          return Quaternion::one() - (2.0 * real(fac.beta) / b2) * s + (s * s) / b2;
        }
      },
      f);
}

Quaternion eval_factored(const FactorForm& F, const Quaternion& p) {
  Quaternion v = Quaternion::one();
  for (const auto& fac : F.factors) {
    double nv = abs(v);
    if (nv == 0.0) return Quaternion::zero();
    Quaternion u = v / nv;
    Quaternion pt = conj(u) * p * u;
    v = v * eval_factor(fac, pt);
  }
  return v * F.constant;
}

PowerSeries expand(const FactorForm& F, std::optional<int> cap) {
  PowerSeries acc = PowerSeries::constant(Quaternion::one());
  for (const auto& fac : F.factors) {
    PowerSeries piece = std::visit(
        [&](const auto& f) -> PowerSeries {
          using T = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<T, LinearFactor>) {
            return PowerSeries({-f.a, Quaternion::one()});
          } else if constexpr (std::is_same_v<T, SphericalQuadratic>) {
            return PowerSeries({Quaternion{f.x * f.x + f.y * f.y, 0, 0, 0},
                                Quaternion{-2.0 * f.x, 0, 0, 0}, Quaternion::one()});
          } else if constexpr (std::is_same_v<T, ElementaryExpFactor>) {
            auto w = elementary_exponent(f.a, f.p);
            ImaginaryUnit I = axis_of(f.a);
            std::vector<Quaternion> c(w.size());
            for (size_t k = 0; k < w.size(); ++k)
              c[k] = Quaternion{w[k].real(), 0, 0, 0} + w[k].imag() * I.value();
            return transcend(Transcendental::exp, PowerSeries(std::move(c)), cap);
          } else if constexpr (std::is_same_v<T, SphericalElementaryExp>) {
            auto g = folded_exponent(f.beta, f.p);
            std::vector<Quaternion> c(g.size());
            for (size_t k = 0; k < g.size(); ++k) c[k] = Quaternion{g[k], 0, 0, 0};
            return transcend(Transcendental::exp, PowerSeries(std::move(c)), cap);
          } else if constexpr (std::is_same_v<T, BlaschkeLinear>) {
            PowerSeries lam({Quaternion::one(), -conj(f.a)});
            int n = cap.value_or(config().truncation_cap);
            PowerSeries linv = star_inverse(lam.truncated_to(n), n);
            PowerSeries num({f.a, -Quaternion::one()});
            return times_const(star_mul(linv, num, cap), conj(f.a) / abs(f.a));
          } else if constexpr (std::is_same_v<T, BlaschkeSpherical>) {
            double m2 = norm_sq(f.a), re2 = 2.0 * real(f.a);
            PowerSeries den({Quaternion::one(), Quaternion{-re2, 0, 0, 0}, Quaternion{m2, 0, 0, 0}});
            PowerSeries num({Quaternion{m2, 0, 0, 0}, Quaternion{-re2, 0, 0, 0}, Quaternion::one()});
            int n = cap.value_or(config().truncation_cap);
            return star_mul(star_inverse(den.truncated_to(n), n), num, cap);
          } else if constexpr (std::is_same_v<T, ElementaryLinear>) {
            return PowerSeries({Quaternion::one(), -inv(f.a)});
          } else {
            double b2 = norm_sq(f.beta);
            return PowerSeries({Quaternion::one(), Quaternion{-2.0 * real(f.beta) / b2, 0, 0, 0},
                                Quaternion{1.0 / b2, 0, 0, 0}});
          }
        },
        fac);
    acc = star_mul(acc, piece, cap);
  }
  return times_const(acc, F.constant);
}

int polynomial_degree(const FactorForm& F) {
  int deg = 0;
  for (const auto& fac : F.factors) {
    if (std::holds_alternative<LinearFactor>(fac)) deg += 1;
    else if (std::holds_alternative<SphericalQuadratic>(fac)) deg += 2;
    else return -1;
  }
  return deg;
}

bool is_intrinsic(const FactorForm& F) {
  double tol = config().eps_sphere;
  if (abs_imag(F.constant) > tol * std::max(1.0, abs(F.constant))) return false;
  for (const auto& fac : F.factors) {
    bool ok = std::visit(
        [&](const auto& f) -> bool {
          using T = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<T, LinearFactor>)
            return abs_imag(f.a) <= tol * std::max(1.0, abs(f.a));
          else if constexpr (std::is_same_v<T, ElementaryLinear>)
            return abs_imag(f.a) <= tol * std::max(1.0, abs(f.a));
          else if constexpr (std::is_same_v<T, ElementaryExpFactor>)
            return abs_imag(f.a) <= tol * std::max(1.0, abs(f.a));
          else if constexpr (std::is_same_v<T, BlaschkeLinear>)
            return false;
          else
            return true;
        },
        fac);
    if (!ok) return false;
  }
  return true;
}

}  // namespace slicereg
