#include "slicereg/integral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "slicereg/config.hpp"
#include "slicereg/evaluation.hpp"

namespace slicereg {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

Quaternion pairwise_sum(std::vector<Quaternion>& vals) {
  size_t n = vals.size();
  for (size_t width = 1; width < n; width *= 2)
    for (size_t i = 0; i + width < n; i += 2 * width) vals[i] += vals[i + width];
  return n ? vals[0] : Quaternion::zero();
}

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// (q - c)^{(n)⋆} coefficients: binomial powers of the constant -c
std::vector<Quaternion> star_linear_power(const Quaternion& c, int n) {
  std::vector<Quaternion> out(n + 1);
  Quaternion ck = Quaternion::one();
  double binom = 1;
  for (int k = 0; k <= n; ++k) {
    out[n - k] = binom * ck;
    ck = ck * (-c);
    binom = binom * (n - k) / (k + 1);
  }
  return out;
}

Quaternion eval_coeffs(const std::vector<Quaternion>& c, const Quaternion& q) {
  Quaternion v = c.back();
  for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) v = q * v + c[k];
  return v;
}

}  // namespace

ContourSpec ContourSpec::make(const ImaginaryUnit& I, double radius, int nodes, double center) {
  if (radius <= 0) fail(Errc::invariant_violation, "contour radius must be positive");
  if (nodes < 64 || !power_of_two(nodes))
    fail(Errc::invariant_violation, "node count must be a power of two >= 64");
  return ContourSpec{I, center, radius, nodes};
}

Quaternion cauchy_eval(const PowerSeries& f, const Quaternion& q, int n, const ContourSpec& C) {
  if (n < 0 || n > config().max_derivative_order)
    fail(Errc::domain_error, "derivative order out of range");
  double dist = abs(q - Quaternion{C.center, 0, 0, 0});
  double band = config().eps_sphere * std::max(1.0, C.radius);
  if (std::abs(dist - C.radius) <= band) fail(Errc::point_on_contour, "q sits on the contour");
  if (dist > C.radius) fail(Errc::point_outside, "q lies outside the contour");

  const Quaternion I = C.slice.value();
  double fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  double sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{n+1}

  auto estimate = [&](int nodes) {
    std::vector<Quaternion> vals(nodes);
    for (int k = 0; k < nodes; ++k) {
      double t = kTwoPi * k / nodes;
      Quaternion e_it = std::cos(t) * Quaternion::one() + std::sin(t) * I;
      Quaternion s = Quaternion{C.center, 0, 0, 0} + C.radius * e_it;
      Quaternion ds_I = C.radius * e_it;  // -I ds
      Quaternion denom = q * q - 2.0 * real(s) * q + norm_sq(s) * Quaternion::one();
      Quaternion kern;
      if (n == 0) {
        kern = -1.0 * (inv(denom) * (q - conj(s)));
      } else {
        Quaternion dinv = inv(denom);
        Quaternion dn = dinv;
        for (int j = 1; j <= n; ++j) dn = dn * dinv;
        kern = sign * (dn * eval_coeffs(star_linear_power(conj(s), n + 1), q));
      }
      vals[k] = kern * ds_I * eval(f, s);
    }
    return (fact / nodes) * pairwise_sum(vals);
  };

  int nodes = C.nodes;
  Quaternion prev = estimate(nodes);
  while (2 * nodes <= config().quadrature_max_nodes) {
    nodes *= 2;
    Quaternion cur = estimate(nodes);
    if (abs(cur - prev) <= config().quadrature_tol) return cur;
    prev = cur;
  }
  return prev;
}

std::vector<CheckRow> cauchy_estimate_check(const PowerSeries& f, const Quaternion& q, double R,
                                            int n_max) {
  std::vector<double> mags;
  PowerSeries d = f;
  for (int n = 0; n <= n_max; ++n) {
    mags.push_back(abs(eval(d, q)));
    d = derivative(d);
  }
  return cauchy_estimate_check_with(mags, f, q, R);
}

std::vector<CheckRow> cauchy_estimate_check_with(std::span<const double> derivative_magnitudes,
                                                 const PowerSeries& f, const Quaternion& q,
                                                 double R) {
  const Quaternion I = axis_of(q).value();
  double boundary_max = 0;
  const int grid = 1024;
  for (int k = 0; k < grid; ++k) {
    double t = kTwoPi * k / grid;
    Quaternion s = q + R * (std::cos(t) * Quaternion::one() + std::sin(t) * I);
    boundary_max = std::max(boundary_max, abs(eval(f, s)));
  }
  std::vector<CheckRow> rows;
  double fact = 1;
  for (size_t n = 0; n < derivative_magnitudes.size(); ++n) {
    if (n >= 2) fact *= static_cast<double>(n);
    CheckRow row;
    row.name = "cauchy_estimate.n" + std::to_string(n);
    row.params = "R=" + std::to_string(R);
    row.lhs = derivative_magnitudes[n];
    row.rhs = fact / std::pow(R, static_cast<double>(n)) * boundary_max;
    row.slack = row.rhs - row.lhs;
    row.pass = row.lhs <= row.rhs * (1 + 1e-9) + 1e-300;
    rows.push_back(row);
  }
  return rows;
}

Quaternion schwarz_eval(std::span<const Quaternion> alpha_samples, double r,
                        const ImaginaryUnit& I, const Quaternion& q) {
  size_t M = alpha_samples.size();
  if (M < 64) fail(Errc::insufficient_samples, "need at least 64 boundary samples");
  // mean of alpha over the circle is f(0), which must be real
  std::vector<Quaternion> acc(alpha_samples.begin(), alpha_samples.end());
  Quaternion mean = pairwise_sum(acc) / static_cast<double>(M);
  double scale = 0;
  for (const auto& a : alpha_samples) scale = std::max(scale, abs(a));
  if (abs_imag(mean) > 1e-8 * std::max(1.0, scale))
    fail(Errc::non_real_center_value, "the sampled function has f(0) not in R");

  const Quaternion Iv = I.value();
  std::vector<Quaternion> vals(M);
  for (size_t k = 0; k < M; ++k) {
    double t = kTwoPi * static_cast<double>(k) / static_cast<double>(M);
    Quaternion c = r * (std::cos(t) * Quaternion::one() + std::sin(t) * Iv);
    Quaternion denom = q * q - 2.0 * real(c) * q + (r * r) * Quaternion::one();
    Quaternion num = (r * r) * Quaternion::one() + q * (conj(c) - c) - q * q;
    vals[k] = inv(denom) * num * alpha_samples[k];
  }
  return pairwise_sum(vals) / static_cast<double>(M);
}

Quaternion schwarz_eval(const PowerSeries& f, const ContourSpec& C, const Quaternion& q) {
  if (abs(q) >= C.radius) fail(Errc::point_outside, "q must lie inside the circle");
  const Quaternion Iv = C.slice.value();
  std::vector<Quaternion> samples(C.nodes);
  for (int k = 0; k < C.nodes; ++k) {
    double t = kTwoPi * k / C.nodes;
    double x = C.radius * std::cos(t), y = C.radius * std::sin(t);
    Quaternion fp = eval(f, Quaternion{x, 0, 0, 0} + y * Iv);
    Quaternion fm = eval(f, Quaternion{x, 0, 0, 0} - y * Iv);
    samples[k] = 0.5 * (fp + fm);
  }
  return schwarz_eval(samples, C.radius, C.slice, q);
}

double poisson(double r, double theta) {
  if (r < 0 || r >= 1) fail(Errc::domain_error, "Poisson kernel needs 0 <= r < 1");
  return (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(theta) + r * r);
}

Quaternion BorelSeries::eval(const Quaternion& w) const {
  Quaternion winv = inv(w);
  Quaternion v{};
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) v = winv * (coeffs[k] + v);
  return v;
}

BorelSeries borel(const PowerSeries& f) {
  BorelSeries out;
  double fact = 1;
  int N = f.truncation_order();
  out.coeffs.resize(N + 1);
  for (int k = 0; k <= N; ++k) {
    if (k >= 2) fact *= k;
    double m = abs(f.coeff(k));
    if (m == 0) continue;
    if (std::isfinite(fact)) {
      out.coeffs[k] = fact * f.coeff(k);
    } else {
      // k! overflows binary64: combine magnitudes in log space, normalizing
      // the direction first (the raw coefficient may be subnormal)
      double lg = std::log(m) + std::lgamma(static_cast<double>(k) + 1.0);
      if (lg > 700.0) fail(Errc::type_unbounded, "factorial-normalized coefficients overflow");
      out.coeffs[k] = std::exp(lg) * (f.coeff(k) / m);
    }
    if (!std::isfinite(abs(out.coeffs[k])))
      fail(Errc::type_unbounded, "factorial-normalized coefficients overflow");
  }
  // sigma = limsup |a_k|^{1/k} over the tail window, with a divergence test
  std::vector<double> ln_k, ln_root;
  double est = 0;
  for (int k = std::max(1, N / 2); k <= N; ++k) {
    double a = abs(out.coeffs[k]);
    if (a <= 0) continue;
    double root = std::pow(a, 1.0 / k);
    est = std::max(est, root);
    ln_k.push_back(std::log(static_cast<double>(k)));
    ln_root.push_back(std::log(root));
  }
  if (ln_k.size() >= 3) {
    double mx = 0, my = 0;
    for (size_t i = 0; i < ln_k.size(); ++i) { mx += ln_k[i]; my += ln_root[i]; }
    mx /= ln_k.size(); my /= ln_k.size();
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < ln_k.size(); ++i) {
      sxx += (ln_k[i] - mx) * (ln_k[i] - mx);
      sxy += (ln_k[i] - mx) * (ln_root[i] - my);
    }
    double slope = sxx > 0 ? sxy / sxx : 0;
    if (slope > 0.1 && est > 1e3)
      fail(Errc::type_unbounded, "coefficient roots keep growing: not of exponential type");
  }
  out.sigma = est;
  return out;
}

Quaternion borel_invert(const BorelSeries& phi, const Quaternion& q, const ContourSpec& C) {
  if (C.radius <= phi.sigma)
    fail(Errc::contour_inside_singularities, "contour radius must exceed sigma");
  const Quaternion I = C.slice.value();
  auto estimate = [&](int nodes) {
    std::vector<Quaternion> vals(nodes);
    for (int k = 0; k < nodes; ++k) {
      double t = kTwoPi * k / nodes;
      Quaternion e_it = std::cos(t) * Quaternion::one() + std::sin(t) * I;
      Quaternion w = C.radius * e_it;
      Quaternion dw_I = C.radius * e_it;
      vals[k] = exp_qw(q, w) * dw_I * phi.eval(w);
    }
    return pairwise_sum(vals) / static_cast<double>(nodes);
  };
  int nodes = C.nodes;
  Quaternion prev = estimate(nodes);
  while (2 * nodes <= config().quadrature_max_nodes) {
    nodes *= 2;
    Quaternion cur = estimate(nodes);
    if (abs(cur - prev) <= config().quadrature_tol) return cur;
    prev = cur;
  }
  return prev;
}

Quaternion exp_qw(const Quaternion& q, const Quaternion& w) {
  using cd = std::complex<double>;
  cd wc{real(w), abs_imag(w)};
  cd z{real(q), abs_imag(q)};
  cd e1 = std::exp(z * wc);        // e^{zw} on the slice of w
  cd e2 = std::exp(std::conj(z) * wc);
  Quaternion Iw = axis_of(w).value();
  Quaternion Iq = axis_of(q).value();
  Quaternion h1 = Quaternion{e1.real(), 0, 0, 0} + e1.imag() * Iw;
  Quaternion h2 = Quaternion{e2.real(), 0, 0, 0} + e2.imag() * Iw;
  return 0.5 * (h1 + h2) + 0.5 * (Iq * (Iw * (h2 - h1)));
}

}  // namespace slicereg
