#include "slicereg/series.hpp"

#include <algorithm>
#include <cmath>

#include "slicereg/config.hpp"

namespace slicereg {

namespace {

int effective_cap(std::optional<int> cap) { return cap.value_or(config().truncation_cap); }

}  // namespace

PowerSeries::PowerSeries(std::vector<Quaternion> coeffs, bool truncated)
    : coeffs_(std::move(coeffs)), truncated_(truncated) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

PowerSeries PowerSeries::monomial(int n, const Quaternion& c) {
  std::vector<Quaternion> v(n + 1);
  v[n] = c;
  return PowerSeries(std::move(v));
}

const Quaternion& PowerSeries::coeff(int n) const {
  static const Quaternion kZero{};
  if (n < 0 || n >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[n];
}

int PowerSeries::degree() const {
  double tol = config().eps_rel * scale();
  for (int n = truncation_order(); n >= 0; --n)
    if (abs(coeffs_[n]) > tol) return n;
  return -1;
}

int PowerSeries::valuation() const {
  double tol = config().eps_rel * scale();
  for (int n = 0; n <= truncation_order(); ++n)
    if (abs(coeffs_[n]) > tol) return n;
  return truncation_order() + 1;
}

double PowerSeries::scale() const {
  double m = 0;
  for (const auto& c : coeffs_) m = std::max(m, abs(c));
  return m;
}

bool PowerSeries::has_real_coeffs() const {
  double tol = config().eps_rel * std::max(1.0, scale());
  for (const auto& c : coeffs_)
    if (abs_imag(c) > tol) return false;
  return true;
}

PowerSeries PowerSeries::truncated_to(int order) const {
  if (order >= truncation_order()) {
    auto v = coeffs_;
    v.resize(order + 1);
    return PowerSeries(std::move(v), truncated_);
  }
  std::vector<Quaternion> v(coeffs_.begin(), coeffs_.begin() + order + 1);
  bool dropped = false;
  for (int n = order + 1; n <= truncation_order(); ++n)
    if (abs(coeffs_[n]) > 0) dropped = true;
  return PowerSeries(std::move(v), truncated_ || dropped);
}

PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
  std::vector<Quaternion> v(std::max(f.coeffs().size(), g.coeffs().size()));
  for (size_t n = 0; n < v.size(); ++n) v[n] = f.coeff(static_cast<int>(n)) + g.coeff(static_cast<int>(n));
  return PowerSeries(std::move(v), f.truncated() || g.truncated());
}

PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) {
  std::vector<Quaternion> v(std::max(f.coeffs().size(), g.coeffs().size()));
  for (size_t n = 0; n < v.size(); ++n) v[n] = f.coeff(static_cast<int>(n)) - g.coeff(static_cast<int>(n));
  return PowerSeries(std::move(v), f.truncated() || g.truncated());
}

PowerSeries operator*(const PowerSeries& f, double s) {
  auto v = f.coeffs();
  for (auto& c : v) c = s * c;
  return PowerSeries(std::move(v), f.truncated());
}
PowerSeries operator*(double s, const PowerSeries& f) { return f * s; }

PowerSeries times_const(const PowerSeries& f, const Quaternion& c) {
  auto v = f.coeffs();
  for (auto& a : v) a = a * c;
  return PowerSeries(std::move(v), f.truncated());
}

PowerSeries const_times(const Quaternion& c, const PowerSeries& f) {
  auto v = f.coeffs();
  for (auto& a : v) a = c * a;
  return PowerSeries(std::move(v), f.truncated());
}

PowerSeries star_mul(const PowerSeries& f, const PowerSeries& g, std::optional<int> cap) {
  int full = f.truncation_order() + g.truncation_order();
  int keep = std::min(full, effective_cap(cap));
  std::vector<Quaternion> v(keep + 1);
  for (int i = 0; i <= f.truncation_order(); ++i) {
    const Quaternion& a = f.coeffs()[i];
    if (a == Quaternion::zero()) continue;
    int jmax = std::min(g.truncation_order(), keep - i);
    for (int j = 0; j <= jmax; ++j) v[i + j] += a * g.coeffs()[j];
  }
  return PowerSeries(std::move(v), f.truncated() || g.truncated() || keep < full);
}

PowerSeries star_pow(const PowerSeries& f, int n, std::optional<int> cap) {
  PowerSeries acc = PowerSeries::constant(Quaternion::one());
  for (int k = 0; k < n; ++k) acc = star_mul(acc, f, cap);
  return acc;
}

PowerSeries conjugate(const PowerSeries& f) {
  auto v = f.coeffs();
  for (auto& c : v) c = conj(c);
  return PowerSeries(std::move(v), f.truncated());
}

PowerSeries symmetrize(const PowerSeries& f, std::optional<int> cap) {
  return star_mul(f, conjugate(f), cap);
}

PowerSeries star_inverse(const PowerSeries& f, std::optional<int> cap) {
  int keep = cap.value_or(f.truncation_order());
  double tol = config().eps_rel * std::max(1.0, f.scale());
  if (abs(f.coeff(0)) <= tol) fail(Errc::singular_at_origin, "star_inverse requires a_0 != 0");

  PowerSeries fs = symmetrize(f, keep);
  // reciprocal of the real-coefficient series f^s
  std::vector<double> s(keep + 1);
  for (int n = 0; n <= keep; ++n) s[n] = real(fs.coeff(n));
  std::vector<double> r(keep + 1);
  r[0] = 1.0 / s[0];
  for (int n = 1; n <= keep; ++n) {
    double acc = 0;
    for (int k = 1; k <= n; ++k) acc += s[k] * r[n - k];
    r[n] = -acc / s[0];
  }
  PowerSeries fc = conjugate(f);
  std::vector<Quaternion> v(keep + 1);
  for (int n = 0; n <= keep; ++n) {
    Quaternion acc{};
    for (int k = 0; k <= n; ++k) acc += r[k] * fc.coeff(n - k);
    v[n] = acc;
  }
  return PowerSeries(std::move(v), true);
}

PowerSeries bullet_compose(const PowerSeries& g, const PowerSeries& w, std::optional<int> cap) {
  int keep = effective_cap(cap);
  double tol = config().eps_rel * std::max(1.0, w.scale());
  if (abs(w.coeff(0)) > tol) fail(Errc::nonzero_constant_term, "bullet composition requires w(0) = 0");

  PowerSeries acc = PowerSeries::constant(g.coeff(0));
  PowerSeries wp = PowerSeries::constant(Quaternion::one());
  int wval = std::max(1, w.valuation());
  for (int n = 1; n <= g.truncation_order(); ++n) {
    if (static_cast<long long>(n) * wval > keep) {
      // all remaining terms start beyond the cap
      bool nonzero_rest = false;
      for (int m = n; m <= g.truncation_order(); ++m)
        if (abs(g.coeff(m)) > 0) nonzero_rest = true;
      if (nonzero_rest) acc.mark_truncated();
      break;
    }
    wp = star_mul(wp, w, keep);
    acc = acc + times_const(wp, g.coeff(n));
  }
  if (g.truncated() || w.truncated()) acc.mark_truncated();
  return acc;
}

PowerSeries compose_inverse(const PowerSeries& g, InverseSide side, std::optional<int> cap) {
  int keep = std::max(cap.value_or(g.truncation_order()), 1);
  double tol = config().eps_rel * std::max(1.0, g.scale());
  if (abs(g.coeff(0)) > tol || abs(g.coeff(1)) <= tol)
    fail(Errc::not_invertible, "compositional inverse requires g(0) = 0 and g'(0) != 0");
  const Quaternion a1_inv = inv(g.coeff(1));

  std::vector<Quaternion> b(keep + 1);
  if (side == InverseSide::right) {
    // g • b = q: the coefficient of q^n in sum_m (b)^{⋆m} a_m vanishes for
    // n >= 2; only the m = 1 term involves b_n.
    b[1] = a1_inv;
    for (int n = 2; n <= keep; ++n) {
      PowerSeries bpart(std::vector<Quaternion>(b.begin(), b.begin() + n));
      PowerSeries wp = bpart;
      Quaternion rhs{};
      for (int m = 2; m <= n; ++m) {
        wp = star_mul(wp, bpart, n);
        rhs += wp.coeff(n) * g.coeff(m);
      }
      b[n] = -(rhs * a1_inv);
    }
  } else {
    // b • g = q: sum_m (g)^{⋆m} b_m = q is triangular in the b_m since
    // omega(g^{⋆m}) >= m with leading coefficient a_1^m.
    std::vector<PowerSeries> gpow(keep + 1, PowerSeries::constant(Quaternion::one()));
    for (int m = 1; m <= keep; ++m) gpow[m] = star_mul(gpow[m - 1], g, keep);
    for (int n = 1; n <= keep; ++n) {
      Quaternion rhs = (n == 1) ? Quaternion::one() : Quaternion::zero();
      for (int m = 1; m < n; ++m) rhs -= gpow[m].coeff(n) * b[m];
      b[n] = inv(gpow[n].coeff(n)) * rhs;
    }
  }
  return PowerSeries(std::move(b), true);
}

PowerSeries derivative(const PowerSeries& f) {
  if (f.truncation_order() == 0) return PowerSeries::zero();
  std::vector<Quaternion> v(f.truncation_order());
  for (int n = 1; n <= f.truncation_order(); ++n) v[n - 1] = static_cast<double>(n) * f.coeff(n);
  return PowerSeries(std::move(v), f.truncated());
}

RadiusEstimate radius(const PowerSeries& f) {
  int N = f.truncation_order();
  int lo = (N + 1) / 2;
  double est = 0;
  std::vector<double> ln_n, ln_root;
  double tol = config().eps_rel * std::max(1.0, f.scale());
  for (int n = std::max(1, lo); n <= N; ++n) {
    double a = abs(f.coeff(n));
    if (a <= tol) continue;
    double root = std::pow(a, 1.0 / n);
    est = std::max(est, root);
    ln_n.push_back(std::log(static_cast<double>(n)));
    ln_root.push_back(std::log(root));
  }
  if (ln_n.empty()) return {std::numeric_limits<double>::infinity(), true, 0.0};
  // slope of log |a_n|^{1/n} against log n: persistent decay means limsup 0
  double slope = 0;
  if (ln_n.size() >= 3) {
    double mx = 0, my = 0;
    for (size_t k = 0; k < ln_n.size(); ++k) { mx += ln_n[k]; my += ln_root[k]; }
    mx /= ln_n.size(); my /= ln_n.size();
    double sxx = 0, sxy = 0;
    for (size_t k = 0; k < ln_n.size(); ++k) {
      sxx += (ln_n[k] - mx) * (ln_n[k] - mx);
      sxy += (ln_n[k] - mx) * (ln_root[k] - my);
    }
    if (sxx > 0) slope = sxy / sxx;
  }
  bool infinite = est < 1e-6 || slope <= -0.5;
  return {infinite ? std::numeric_limits<double>::infinity() : 1.0 / est, infinite, est};
}

PowerSeries transcend(Transcendental kind, const PowerSeries& p, std::optional<int> cap) {
  int keep = effective_cap(cap);
  PowerSeries acc = PowerSeries::zero(0);
  PowerSeries wp = PowerSeries::constant(Quaternion::one());
  int pval = p.is_zero() ? keep + 1 : p.valuation();
  double inv_fact = 1.0;
  int stall = 0;
  const int max_terms = 2000;
  for (int n = 0; n <= max_terms; ++n) {
    if (n > 0) {
      if (pval >= 1 && static_cast<long long>(n) * pval > keep) break;
      wp = star_mul(wp, p, keep);
      inv_fact /= n;
    }
    double w = 0;  // term weight
    switch (kind) {
      case Transcendental::exp: w = inv_fact; break;
      case Transcendental::sin: w = (n % 2 == 1) ? ((n / 2) % 2 == 0 ? inv_fact : -inv_fact) : 0.0; break;
      case Transcendental::cos: w = (n % 2 == 0) ? ((n / 2) % 2 == 0 ? inv_fact : -inv_fact) : 0.0; break;
    }
    if (w != 0.0) {
      PowerSeries term = wp * w;
      acc = acc + term;
      double inc = term.scale();
      if (pval == 0) {  // constant term present: run until increments stall
        stall = (inc <= 1e-18 * std::max(1.0, acc.scale())) ? stall + 1 : 0;
        if (stall >= 8) break;
      }
    }
  }
  return acc;
}

PowerSeries exp_series(int order) {
  std::vector<Quaternion> v(order + 1);
  double f = 1;
  v[0] = Quaternion::one();
  for (int n = 1; n <= order; ++n) {
    f /= n;
    v[n] = Quaternion{f, 0, 0, 0};
  }
  return PowerSeries(std::move(v));
}

}  // namespace slicereg
