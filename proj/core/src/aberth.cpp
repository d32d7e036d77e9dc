#include "slicereg/aberth.hpp"

#include <algorithm>
#include <cmath>

#include "slicereg/config.hpp"
#include "slicereg/errors.hpp"

namespace slicereg {

namespace {

using cd = std::complex<double>;

cd poly_eval(const std::vector<cd>& c, cd z) {
  cd v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + *it;
  return v;
}

std::vector<cd> poly_der(const std::vector<cd>& c) {
  if (c.size() <= 1) return {cd(0)};
  std::vector<cd> d(c.size() - 1);
  for (size_t n = 1; n < c.size(); ++n) d[n - 1] = static_cast<double>(n) * c[n];
  return d;
}

}  // namespace

std::vector<cd> aberth_roots(std::vector<cd> coeffs) {
  while (coeffs.size() > 1 && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
  int n = static_cast<int>(coeffs.size()) - 1;
  if (n <= 0) fail(Errc::zero_polynomial, "no roots of a constant polynomial");
  cd lead = coeffs.back();
  for (auto& c : coeffs) c /= lead;

  double R = 1.0;
  for (int k = 0; k < n; ++k) R = std::max(R, std::abs(coeffs[k]));
  R = 1.0 + R;

  std::vector<cd> z(n);
  const double two_pi = 6.283185307179586476925286766559;
  for (int k = 0; k < n; ++k) {
    double theta = two_pi * (k + 0.5) / n + 0.4;
    z[k] = R * cd(std::cos(theta), std::sin(theta));
  }

  auto dcoeffs = poly_der(coeffs);
  const double step_tol = config().aberth_step_tol;
  const int max_it = config().aberth_max_iterations;
  double moved = 0;
  for (int it = 0; it < max_it; ++it) {
    moved = 0;
    for (int k = 0; k < n; ++k) {
      cd p = poly_eval(coeffs, z[k]);
      if (p == cd(0)) continue;
      cd dp = poly_eval(dcoeffs, z[k]);
      cd w = (dp != cd(0)) ? p / dp : p;
      cd s = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) s += 1.0 / (z[k] - z[j]);
      cd corr = w / (1.0 - w * s);
      z[k] -= corr;
      moved = std::max(moved, std::abs(corr) / (1.0 + std::abs(z[k])));
    }
    if (moved <= step_tol) break;
  }

  // backward-stability residual check; multiple roots stall on step size but
  // still satisfy this bound
  for (int k = 0; k < n; ++k) {
    double bound = 0, zp = 1, az = std::abs(z[k]);
    for (size_t j = 0; j < coeffs.size(); ++j) {
      bound += std::abs(coeffs[j]) * zp;
      zp *= az;
    }
    double res = std::abs(poly_eval(coeffs, z[k]));
    if (res > 1e-6 * bound)
      fail(Errc::root_finding_failure, "residual " + std::to_string(res) + " exceeds bound");
  }
  return z;
}

cd refine_multiple_root(const std::vector<double>& coeffs, cd z0, int m) {
  std::vector<cd> c(coeffs.begin(), coeffs.end());
  for (int k = 1; k < m; ++k) c = poly_der(c);
  auto dc = poly_der(c);
  cd z = z0;
  for (int it = 0; it < 100; ++it) {
    cd p = poly_eval(c, z);
    cd dp = poly_eval(dc, z);
    if (dp == cd(0)) break;
    cd dz = p / dp;
    z -= dz;
    if (std::abs(dz) <= 1e-15 * (1.0 + std::abs(z))) break;
  }
  return z;
}

}  // namespace slicereg
