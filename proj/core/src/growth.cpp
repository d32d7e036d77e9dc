#include "slicereg/growth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>

#include "slicereg/config.hpp"
#include "slicereg/evaluation.hpp"

namespace slicereg {

namespace {

// least squares through scaled normal equations in long double; k <= 4
std::vector<double> fit_ls(const std::vector<std::array<double, 4>>& X, const std::vector<double>& y,
                           int k, double* residual = nullptr) {
  std::array<long double, 4> colnorm{};
  for (int j = 0; j < k; ++j) {
    long double s = 0;
    for (const auto& row : X) s += static_cast<long double>(row[j]) * row[j];
    colnorm[j] = std::sqrt(static_cast<double>(s));
    if (colnorm[j] == 0) colnorm[j] = 1;
  }
  long double A[4][4] = {};
  long double b[4] = {};
  for (size_t i = 0; i < X.size(); ++i) {
    for (int p = 0; p < k; ++p) {
      long double xp = X[i][p] / colnorm[p];
      b[p] += xp * y[i];
      for (int q = 0; q < k; ++q) A[p][q] += xp * (X[i][q] / colnorm[q]);
    }
  }
  // Gaussian elimination with partial pivoting
  int idx[4] = {0, 1, 2, 3};
  for (int p = 0; p < k; ++p) {
    int piv = p;
    for (int r = p + 1; r < k; ++r)
      if (std::abs(static_cast<double>(A[idx[r]][p])) > std::abs(static_cast<double>(A[idx[piv]][p])))
        piv = r;
    std::swap(idx[p], idx[piv]);
    for (int r = p + 1; r < k; ++r) {
      long double f = A[idx[r]][p] / A[idx[p]][p];
      for (int c = p; c < k; ++c) A[idx[r]][c] -= f * A[idx[p]][c];
      b[idx[r]] -= f * b[idx[p]];
    }
  }
  std::vector<double> beta(k);
  for (int p = k - 1; p >= 0; --p) {
    long double s = b[idx[p]];
    for (int c = p + 1; c < k; ++c) s -= A[idx[p]][c] * beta[c];
    beta[p] = static_cast<double>(s / A[idx[p]][p]);
  }
  for (int j = 0; j < k; ++j) beta[j] /= static_cast<double>(colnorm[j]);
  if (residual) {
    long double ss = 0, sy = 0;
    for (size_t i = 0; i < X.size(); ++i) {
      long double pred = 0;
      for (int j = 0; j < k; ++j) pred += static_cast<long double>(beta[j]) * X[i][j];
      ss += (pred - y[i]) * (pred - y[i]);
      sy += static_cast<long double>(y[i]) * y[i];
    }
    *residual = static_cast<double>(std::sqrt(static_cast<double>(ss / std::max<long double>(sy, 1e-300))));
  }
  return beta;
}

double golden_max(const std::function<double(double)>& h, double lo, double hi) {
  const double gr = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = h(x1), f2 = h(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + gr * (b - a); f2 = h(x2);
    } else {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - gr * (b - a); f1 = h(x1);
    }
  }
  return std::max(f1, f2);
}

struct HalfPlanePoint {
  double x, y;
};

double hp_dist(const HalfPlanePoint& a, const HalfPlanePoint& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// smallest enclosing disk by brute force over pair/triple support sets
struct Disk2 {
  HalfPlanePoint c;
  double r;
};

Disk2 circumdisk(const HalfPlanePoint& a, const HalfPlanePoint& b, const HalfPlanePoint& c) {
  double d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
  if (std::abs(d) < 1e-14) return {{0, 0}, std::numeric_limits<double>::infinity()};
  double a2 = a.x * a.x + a.y * a.y, b2 = b.x * b.x + b.y * b.y, c2 = c.x * c.x + c.y * c.y;
  HalfPlanePoint u{(a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
                   (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d};
  return {u, hp_dist(u, a)};
}

bool disk_contains_all(const Disk2& d, const std::vector<HalfPlanePoint>& pts, double tol) {
  for (const auto& p : pts)
    if (hp_dist(d.c, p) > d.r + tol) return false;
  return true;
}

Disk2 smallest_enclosing_disk(const std::vector<HalfPlanePoint>& pts) {
  const double tol = 1e-12;
  if (pts.empty()) return {{0, 0}, 0};
  if (pts.size() == 1) return {pts[0], 0};
  Disk2 best{{0, 0}, std::numeric_limits<double>::infinity()};
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      Disk2 d{{0.5 * (pts[i].x + pts[j].x), 0.5 * (pts[i].y + pts[j].y)},
              0.5 * hp_dist(pts[i], pts[j])};
      if (d.r < best.r && disk_contains_all(d, pts, tol * (1 + d.r))) best = d;
    }
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      for (size_t k = j + 1; k < pts.size(); ++k) {
        Disk2 d = circumdisk(pts[i], pts[j], pts[k]);
        if (d.r < best.r && disk_contains_all(d, pts, tol * (1 + d.r))) best = d;
      }
  return best;
}

std::vector<HalfPlanePoint> zero_points(const ZeroList& Z) {
  std::vector<HalfPlanePoint> pts;
  for (const auto& r : Z.records) {
    int copies = (r.kind == ZeroRecord::Kind::sphere ? 2 : 1) * r.multiplicity;
    double x = r.kind == ZeroRecord::Kind::isolated ? real(r.point) : r.x;
    double y = r.kind == ZeroRecord::Kind::isolated ? abs_imag(r.point) : r.y;
    if (r.kind == ZeroRecord::Kind::real) y = 0;
    for (int c = 0; c < copies; ++c) pts.push_back({x, y});
  }
  return pts;
}

GrowthEstimate polynomial_estimate(bool constant) {
  GrowthEstimate g;
  g.order = 0;
  g.type = 0;
  g.type_class = GrowthEstimate::TypeClass::undefined;
  g.method = constant ? "constant" : "polynomial";
  return g;
}

}  // namespace

ModulusMaxima max_modulus(const PowerSeries& f, double r, int grid) {
  RadiusEstimate rad = radius(f);
  if (!rad.infinite && r >= rad.radius)
    fail(Errc::radius_exceeded, "r beyond the estimated radius of convergence");
  if (grid <= 0) grid = 512;
  const double pi = 3.14159265358979323846;

  auto alpha_at = [&](double th) {
    return abs(sphere_data(f, r * std::cos(th), r * std::sin(th)).a);
  };
  if (f.has_real_coeffs()) {
    // intrinsic shortcut: a single slice carries the maximum
    auto mod_at = [&](double th) {
      return abs(eval(f, Quaternion{r * std::cos(th), r * std::sin(th), 0, 0}));
    };
    double bestM = 0, bestA = 0, argM = 0, argA = 0;
    for (int k = 0; k <= grid; ++k) {
      double th = pi * k / grid;
      double m = mod_at(th), a = alpha_at(th);
      if (m > bestM) { bestM = m; argM = th; }
      if (a > bestA) { bestA = a; argA = th; }
    }
    double d = pi / grid;
    bestM = std::max(bestM, golden_max(mod_at, std::max(0.0, argM - d), std::min(pi, argM + d)));
    bestA = std::max(bestA, golden_max(alpha_at, std::max(0.0, argA - d), std::min(pi, argA + d)));
    return {bestM, bestA};
  }
  auto sphere_max = [&](double th) {
    return sphere_extremes(f, r * std::cos(th), r * std::sin(th)).max;
  };
  double bestM = 0, bestA = 0, argM = 0, argA = 0;
  for (int k = 0; k <= grid; ++k) {
    double th = pi * k / grid;
    double m = sphere_max(th), a = alpha_at(th);
    if (m > bestM) { bestM = m; argM = th; }
    if (a > bestA) { bestA = a; argA = th; }
  }
  double d = pi / grid;
  bestM = std::max(bestM, golden_max(sphere_max, std::max(0.0, argM - d), std::min(pi, argM + d)));
  bestA = std::max(bestA, golden_max(alpha_at, std::max(0.0, argA - d), std::min(pi, argA + d)));
  return {bestM, bestA};
}

ModulusMaxima max_modulus(const FactorForm& f, double r, int grid) {
  if (grid <= 0) grid = 512;
  const double pi = 3.14159265358979323846;
  Quaternion I = Quaternion::i();
  auto data_at = [&](double th) {
    double x = r * std::cos(th), y = r * std::sin(th);
    Quaternion fp = eval_factored(f, Quaternion{x, y, 0, 0});
    Quaternion fm = eval_factored(f, Quaternion{x, -y, 0, 0});
    return SphereAffineData{0.5 * (fp + fm), 0.5 * (I * (fm - fp))};
  };
  auto sphere_max = [&](double th) { return sphere_extremes(data_at(th)).max; };
  auto alpha_at = [&](double th) { return abs(data_at(th).a); };
  double bestM = 0, bestA = 0, argM = 0, argA = 0;
  for (int k = 0; k <= grid; ++k) {
    double th = pi * k / grid;
    double m = sphere_max(th), a = alpha_at(th);
    if (m > bestM) { bestM = m; argM = th; }
    if (a > bestA) { bestA = a; argA = th; }
  }
  double d = pi / grid;
  bestM = std::max(bestM, golden_max(sphere_max, std::max(0.0, argM - d), std::min(pi, argM + d)));
  bestA = std::max(bestA, golden_max(alpha_at, std::max(0.0, argA - d), std::min(pi, argA + d)));
  return {bestM, bestA};
}

GrowthEstimate order_type_from_coeffs(const PowerSeries& f) {
  int N = f.truncation_order();
  double sc = f.scale();

  // Liouville surrogate: negligible tail relative to a_0 means constant
  double a0 = abs(f.coeff(0));
  bool constant = a0 > 0;
  for (int n = 1; n <= N && constant; ++n)
    if (abs(f.coeff(n)) > 1e-14 * a0) constant = false;
  if (constant && a0 > 0) return polynomial_estimate(true);

  // nonzero support above the deep-underflow zone: a genuinely terminating
  // coefficient list is a polynomial, while a tail that merely underflows
  // binary64 keeps decaying into the floor and gets fitted over its support
  // window. Coefficients below 1e-280 are excluded: close to the subnormal
  // range the convolution terms that build them start flushing to zero and
  // the computed values drop off the true coefficient law.
  const double floor_mag = 1e-280 * std::max(1.0, sc);
  int raw_support = -1, support = -1;
  for (int n = N; n >= 0; --n) {
    double a = abs(f.coeff(n));
    if (a > 0 && raw_support < 0) raw_support = n;
    if (a >= floor_mag) { support = n; break; }
  }
  if (support <= 0) return polynomial_estimate(false);
  if (raw_support < N / 2 && abs(f.coeff(raw_support)) > 1e-100 * std::max(1.0, sc))
    return polynomial_estimate(false);

  std::vector<std::array<double, 4>> X;
  std::vector<double> y;
  for (int n = std::max(2, support / 2); n <= support; ++n) {
    double a = abs(f.coeff(n));
    if (a < floor_mag) continue;
    double ln = std::log(static_cast<double>(n));
    X.push_back({n * ln, static_cast<double>(n), ln, 1.0});
    y.push_back(-std::log(a));
  }
  if (X.size() < 32) fail(Errc::insufficient_tail, "need at least 32 nonzero tail coefficients");

  GrowthEstimate g;
  auto beta = fit_ls(X, y, 4, &g.fit_residual);
  if (!(beta[0] > 1e-6)) {
    g.order_infinite = true;
    g.order = std::numeric_limits<double>::infinity();
    g.method = "coeff-fit";
    return g;
  }
  g.order = 1.0 / beta[0];
  g.type = std::exp(-beta[1] * g.order) / (std::exp(1.0) * g.order);
  g.method = "coeff-fit";
  if (g.type < 1e-8)
    g.type_class = GrowthEstimate::TypeClass::minimal;
  else if (g.type > 1e8)
    g.type_class = GrowthEstimate::TypeClass::maximal;
  else
    g.type_class = GrowthEstimate::TypeClass::normal;
  return g;
}

GrowthEstimate order_type_from_modulus(const std::vector<std::pair<double, double>>& samples) {
  std::vector<std::pair<double, double>> pts;
  for (auto [r, M] : samples)
    if (r > 0 && M > 1.0) pts.push_back({r, M});
  if (pts.size() < 8) fail(Errc::insufficient_samples, "need at least 8 usable (r, M) samples");
  auto [mn, mx] = std::minmax_element(pts.begin(), pts.end());
  if (mx->first < 10.0 * mn->first)
    fail(Errc::insufficient_samples, "radii must span at least a decade");

  // power-law test: log M ~ c + d log r with tiny residual means polynomial
  std::vector<std::array<double, 4>> Xp;
  std::vector<double> yp;
  for (auto [r, M] : pts) {
    Xp.push_back({std::log(r), 1.0, 0, 0});
    yp.push_back(std::log(M));
  }
  double res_poly = 0;
  fit_ls(Xp, yp, 2, &res_poly);
  if (res_poly < 1e-3) return polynomial_estimate(false);

  std::vector<std::array<double, 4>> X;
  std::vector<double> y;
  for (auto [r, M] : pts) {
    X.push_back({std::log(r), 1.0, 0, 0});
    y.push_back(std::log(std::log(M)));
  }
  GrowthEstimate g;
  auto beta = fit_ls(X, y, 2, &g.fit_residual);
  g.order = beta[0];
  g.method = "modulus-fit";
  if (g.order <= 0.05) return polynomial_estimate(false);
  double sig = 0;
  size_t half = pts.size() / 2;
  for (size_t i = half; i < pts.size(); ++i)
    sig = std::max(sig, std::log(pts[i].second) / std::pow(pts[i].first, g.order));
  g.type = sig;
  g.type_class = GrowthEstimate::TypeClass::normal;
  return g;
}

namespace {

// zero records of an intrinsic factor form read straight off its factors
ZeroList intrinsic_zeros(const FactorForm& g) {
  ZeroList out;
  for (const auto& fac : g.factors) {
    if (const auto* s = std::get_if<SphericalQuadratic>(&fac)) {
      out.records.push_back(ZeroRecord::sphere(s->x, s->y));
    } else if (const auto* es = std::get_if<ElementarySpherical>(&fac)) {
      out.records.push_back(ZeroRecord::sphere(real(es->beta), abs_imag(es->beta)));
    } else if (const auto* l = std::get_if<LinearFactor>(&fac)) {
      out.records.push_back(ZeroRecord::real_root(real(l->a)));
    } else if (const auto* el = std::get_if<ElementaryLinear>(&fac)) {
      out.records.push_back(ZeroRecord::real_root(real(el->a)));
    } else if (const auto* bs = std::get_if<BlaschkeSpherical>(&fac)) {
      out.records.push_back(ZeroRecord::sphere(real(bs->a), abs_imag(bs->a)));
    } else if (std::holds_alternative<ElementaryExpFactor>(fac) ||
               std::holds_alternative<SphericalElementaryExp>(fac)) {
      // nonvanishing
    } else {
      fail(Errc::hypothesis_violated, "intrinsic part must carry spherical/real factors only");
    }
  }
  return out;
}

double boundary_log_mean(const std::function<double(double)>& logmod, int start_nodes) {
  // periodic trapezoid with doubling until the configured tolerance
  const double two_pi = 6.283185307179586476925286766559;
  int n = std::max(64, start_nodes);
  double prev = std::numeric_limits<double>::quiet_NaN();
  while (true) {
    // pairwise summation for bit-stable accumulation
    std::vector<double> vals(n);
    for (int k = 0; k < n; ++k) vals[k] = logmod(two_pi * k / n);
    for (int width = 1; width < n; width *= 2)
      for (int i = 0; i + width < n; i += 2 * width) vals[i] += vals[i + width];
    double mean = vals[0] / n;
    if (!std::isnan(prev) && std::abs(mean - prev) <= config().quadrature_tol) return mean;
    if (2 * n > config().quadrature_max_nodes) return mean;
    prev = mean;
    n *= 2;
  }
}

}  // namespace

JensenReport jensen_check(const FactorForm& g, const FactorForm& h, double R) {
  if (!is_intrinsic(g)) fail(Errc::hypothesis_violated, "g must be intrinsic");
  JensenReport rep;

  ZeroList zg = intrinsic_zeros(g);
  PowerSeries hx = expand(h);
  ZeroList zh = hx.degree() >= 1 ? find_zeros(hx) : ZeroList{};

  Quaternion g0 = eval_factored(g, Quaternion::zero());
  Quaternion h0 = eval_factored(h, Quaternion::zero());
  if (abs(g0) * abs(h0) < config().eps_sphere)
    fail(Errc::zero_at_origin, "Jensen requires f(0) != 0");

  // no zeros on the contour: nudge the radius outward when one sits there
  double used = R;
  auto all = zg.records;
  all.insert(all.end(), zh.records.begin(), zh.records.end());
  bool clash = false;
  for (int guard = 0; guard < 8; ++guard) {
    clash = false;
    for (const auto& z : all)
      if (std::abs(z.modulus() - used) <= 10.0 * config().eps_sphere * std::max(1.0, used)) clash = true;
    if (!clash) break;
    rep.radius_nudged = true;
    used += 10.0 * config().eps_sphere * std::max(1.0, used);
  }
  if (clash) fail(Errc::zero_on_contour, "zeros pin every nudged contour radius");
  rep.used_radius = used;

  double lhs = 0;
  for (const auto& z : all) {
    double m = z.modulus();
    if (m < used && m > 0) {
      int copies = (z.kind == ZeroRecord::Kind::sphere ? 2 : 1) * z.multiplicity;
      lhs += copies * std::log(used / m);
    }
    if (m == 0) fail(Errc::zero_at_origin, "Jensen requires f(0) != 0");
  }
  rep.lhs = lhs;

  PowerSeries hs = symmetrize(hx, 2 * std::max(1, hx.degree()));
  auto log_g = [&](double t) {
    Quaternion q{used * std::cos(t), used * std::sin(t), 0, 0};
    return std::log(abs(eval_factored(g, q)));
  };
  auto log_hs = [&](double t) {
    Quaternion q{used * std::cos(t), used * std::sin(t), 0, 0};
    return std::log(abs(eval(hs, q)));
  };
  double mg = boundary_log_mean(log_g, config().quadrature_nodes);
  double mhs = boundary_log_mean(log_hs, config().quadrature_nodes);
  rep.rhs = mg - std::log(abs(g0)) + 0.5 * (mhs - std::log(abs(eval(hs, Quaternion::zero()))));
  rep.residual = std::abs(rep.lhs - rep.rhs);

  // Jensen inequality under the unit normalization
  if (std::abs(abs(g0) - 1.0) <= 1e-9 && std::abs(abs(h0) - 1.0) <= 1e-9) {
    rep.inequality_applicable = true;
    double e = std::exp(1.0);
    double nf = 0;
    for (const auto& z : all)
      if (z.modulus() < used) nf += (z.kind == ZeroRecord::Kind::sphere ? 2 : 1) * z.multiplicity;
    rep.count_lhs = nf;
    double Mg = max_modulus(g, e * used).M;
    double Mh = max_modulus(h, e * used).M;
    rep.bound_rhs = std::log(Mg * Mh);
    rep.inequality_holds = nf <= rep.bound_rhs + 1e-9;
  }
  return rep;
}

std::vector<CheckRow> inequality_suite(const PowerSeries& f, const Quaternion& q0, double r,
                                       double R) {
  std::vector<CheckRow> rows;
  if (!(0 < r && r < R)) fail(Errc::hypothesis_violated, "need 0 < r < R");
  char params[160];
  std::snprintf(params, sizeof params, "r=%g;R=%g", r, R);

  Quaternion f0 = eval(f, Quaternion::zero());
  double sc = std::max(1.0, f.scale());

  // Caratheodory: M_f(r) <= 2r/(R-r) (A_f(R) - alpha(0)) + |alpha(0)|, f(0) real
  {
    CheckRow row{"caratheodory", params};
    if (abs_imag(f0) <= config().eps_sphere * sc) {
      double Mr = max_modulus(f, r).M;
      double AR = max_modulus(f, R).A;
      double a0 = real(f0);
      row.lhs = Mr;
      row.rhs = 2.0 * r / (R - r) * (AR - a0) + std::abs(a0);
      row.slack = row.rhs - row.lhs;
      row.pass = row.lhs <= row.rhs * (1 + 1e-9) + 1e-12;
    } else {
      row.params += ";skipped=f(0) not real";
      row.pass = true;
    }
    rows.push_back(row);
  }

  // Harnack two-sided bound for intrinsic f with positive alpha, beta on the
  // disk around q0 in its own slice
  {
    CheckRow lo{"harnack.lower", params}, hi{"harnack.upper", params};
    bool applicable = f.has_real_coeffs() && abs_imag(q0) > config().eps_rel;
    Quaternion I = applicable ? axis_of(q0).value() : Quaternion::i();
    double u = real(q0), v = abs_imag(q0);
    if (applicable) {
      for (int k = 0; k < 256 && applicable; ++k) {
        double th = 6.283185307179586 * k / 256;
        for (double rr : {0.25 * R, 0.5 * R, 0.75 * R, 0.999 * R}) {
          double x = u + rr * std::cos(th), y = v + rr * std::sin(th);
          SphereAffineData d = sphere_data(f, x, std::abs(y));
          double alpha = real(d.a), beta = (y >= 0 ? 1.0 : -1.0) * real(d.b);
          if (alpha <= 0 || beta <= 0) applicable = false;
        }
      }
    }
    if (applicable) {
      double fq0 = abs(eval(f, q0));
      double mn = std::numeric_limits<double>::infinity(), mx = 0;
      for (int k = 0; k < 512; ++k) {
        double th = 6.283185307179586 * k / 512;
        for (double rr : {0.3 * r, 0.7 * r, r * 0.999}) {
          Quaternion p = q0 + rr * std::cos(th) * Quaternion::one() + rr * std::sin(th) * I;
          double m = abs(eval(f, p));
          mn = std::min(mn, m);
          mx = std::max(mx, m);
        }
      }
      lo.lhs = (R - r) / (R + r) * fq0;
      lo.rhs = mn;
      lo.slack = lo.rhs - lo.lhs;
      lo.pass = lo.lhs <= lo.rhs * (1 + 1e-9) + 1e-12;
      hi.lhs = mx;
      hi.rhs = (R + r) / (R - r) * fq0;
      hi.slack = hi.rhs - hi.lhs;
      hi.pass = hi.lhs <= hi.rhs * (1 + 1e-9) + 1e-12;
    } else {
      lo.params += ";skipped=hypotheses not met";
      hi.params += ";skipped=hypotheses not met";
      lo.pass = hi.pass = true;
    }
    rows.push_back(lo);
    rows.push_back(hi);
  }

  // zero-free log lower bound: log|f| >= -(3r+R)/(R-r) log M_f(R), f(0)=1
  {
    CheckRow row{"log_lower_bound", params};
    bool normalized = abs(f0 - Quaternion::one()) <= 1e-9;
    double minmod = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 512; ++k) {
      double th = 3.14159265358979 * k / 512;
      for (double rr : {0.2 * R, 0.5 * R, 0.8 * R, R}) {
        SphereExtremes e = sphere_extremes(f, rr * std::cos(th), rr * std::sin(th));
        minmod = std::min(minmod, e.min);
      }
    }
    if (normalized && minmod > config().eps_sphere * sc) {
      double MR = max_modulus(f, R).M;
      double bound = -(3.0 * r + R) / (R - r) * std::log(MR);
      double worst = std::numeric_limits<double>::infinity();
      for (int k = 0; k < 1000; ++k) {
        double th = 3.14159265358979 * (k % 100) / 100;
        double rr = r * (0.05 + 0.95 * (k / 100) / 9.0);
        SphereExtremes e = sphere_extremes(f, rr * std::cos(th), rr * std::sin(th));
        worst = std::min(worst, std::log(e.min));
      }
      row.lhs = bound;
      row.rhs = worst;
      row.slack = row.rhs - row.lhs;
      row.pass = row.lhs <= row.rhs + 1e-9;
    } else {
      row.params += ";skipped=needs zero-free f with f(0)=1";
      row.pass = true;
    }
    rows.push_back(row);
  }

  // maximum modulus principle surrogate: no strict interior maximum
  {
    CheckRow row{"max_modulus_principle", params};
    bool constant = f.degree() <= 0;
    double worst = -std::numeric_limits<double>::infinity();
    if (!constant) {
      double delta = 0.05 * r;
      for (int c = 0; c < 24; ++c) {
        double th = 6.283185307179586 * c / 24;
        Quaternion q{0.5 * r * std::cos(th), 0.5 * r * std::sin(th), 0, 0};
        double fq = abs(eval(f, q));
        double best = 0;
        for (int k = 0; k < 40; ++k) {
          double ph = 6.283185307179586 * k / 40;
          for (auto dir : {Quaternion{std::cos(ph), std::sin(ph), 0, 0},
                           Quaternion{std::cos(ph), 0, std::sin(ph), 0},
                           Quaternion{std::cos(ph), 0, 0, std::sin(ph)}})
            best = std::max(best, abs(eval(f, q + delta * dir)));
        }
        worst = std::max(worst, fq - best);
      }
      row.lhs = worst;
      row.rhs = 0;
      row.slack = -worst;
      row.pass = worst <= 1e-9 * sc;
    } else {
      row.params += ";degenerate=constant";
      row.pass = true;
    }
    rows.push_back(row);
  }

  // minimum modulus: a strict interior minimum forces a zero there
  {
    CheckRow row{"min_modulus_principle", params};
    bool constant = f.degree() <= 0;
    double worst = 0;
    if (!constant) {
      double delta = 0.05 * r;
      for (int c = 0; c < 24; ++c) {
        double th = 6.283185307179586 * c / 24;
        Quaternion q{0.5 * r * std::cos(th), 0.5 * r * std::sin(th), 0, 0};
        double fq = abs(eval(f, q));
        double best = std::numeric_limits<double>::infinity();
        for (int k = 0; k < 40; ++k) {
          double ph = 6.283185307179586 * k / 40;
          for (auto dir : {Quaternion{std::cos(ph), std::sin(ph), 0, 0},
                           Quaternion{std::cos(ph), 0, std::sin(ph), 0},
                           Quaternion{std::cos(ph), 0, 0, std::sin(ph)}})
            best = std::min(best, abs(eval(f, q + delta * dir)));
        }
        if (fq < best && fq > 1e-7 * sc) worst = std::max(worst, best - fq);
      }
      row.lhs = worst;
      row.rhs = 0;
      row.slack = -worst;
      row.pass = worst <= 1e-9 * sc;
    } else {
      row.params += ";degenerate=constant";
      row.pass = true;
    }
    rows.push_back(row);
  }

  return rows;
}

bool ExclusionRegion::contains(const Quaternion& q) const {
  double x = real(q), y = abs_imag(q);
  for (const auto& d : disks)
    if (std::hypot(x - real(d.center), y - abs_imag(d.center)) <= d.radius) return true;
  return false;
}

ExclusionRegion lower_bound_region(const FactorForm& P, const Quaternion& q0, double R,
                                   LowerBoundMode mode) {
  int m = polynomial_degree(P);
  if (m < 0) fail(Errc::hypothesis_violated, "lower bounds need a polynomial factor form");
  ExclusionRegion out;
  double am = abs(P.constant);
  if (m == 0) {
    out.certified_bound = am;
    out.gamma_radius = R / 2;
    return out;
  }
  PowerSeries px = expand(P);
  ZeroList zeros = find_zeros(px);

  auto pick_gap = [&](std::vector<double> vals, double upper) {
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end(),
                           [&](double a, double b) { return std::abs(a - b) < 1e-9 * (1 + upper); }),
               vals.end());
    double lo = 0, best_len = -1, best_mid = upper / 2;
    for (size_t i = 0; i <= vals.size(); ++i) {
      double hi = i < vals.size() ? std::min(vals[i], upper) : upper;
      if (hi > lo && hi - lo >= best_len) {  // >= : prefer the rightmost gap
        best_len = hi - lo;
        best_mid = 0.5 * (lo + hi);
      }
      if (i < vals.size()) lo = std::max(lo, vals[i]);
      if (lo >= upper) break;
    }
    return best_mid;
  };

  if (mode == LowerBoundMode::origin) {
    if (abs_imag(q0) > config().eps_sphere)
      fail(Errc::hypothesis_violated, "origin mode needs a real center");
    int M = static_cast<int>(zeros.records.size());  // distinct spheres + isolated + real
    double u = real(q0);
    std::vector<double> V;
    for (const auto& z : zeros.records) {
      double zx = z.kind == ZeroRecord::Kind::isolated ? real(z.point) : z.x;
      double zy = z.kind == ZeroRecord::Kind::isolated ? abs_imag(z.point) : z.y;
      V.push_back(std::hypot(zx - u, zy));  // constant over each sphere for real centers
    }
    out.gamma_radius = pick_gap(V, R);
    out.certified_bound = am * std::pow(R / (2.0 * (M + 1)), m);
    return out;
  }

  double u = real(q0), v = abs_imag(q0);
  auto general_disk = [&](double cu, double cv) {
    std::vector<double> V;
    for (const auto& z : zeros.records) {
      double zx = z.kind == ZeroRecord::Kind::isolated ? real(z.point) : z.x;
      double zy = z.kind == ZeroRecord::Kind::isolated ? abs_imag(z.point) : z.y;
      V.push_back(std::hypot(zx - cu, zy - cv));
      V.push_back(std::hypot(zx - cu, -zy - cv));  // the conjugate projection
    }
    return pick_gap(V, R);
  };

  if (mode == LowerBoundMode::general) {
    out.gamma_radius = general_disk(u, v);
    out.disks.push_back({Quaternion{u, v, 0, 0}, out.gamma_radius});
    out.certified_bound = am * std::pow(R / (2.0 * (2 * m + 1)), m);
    return out;
  }

  // exterior: one disk around each distinct zero location
  for (const auto& z : zeros.records) {
    double zx = z.kind == ZeroRecord::Kind::isolated ? real(z.point) : z.x;
    double zy = z.kind == ZeroRecord::Kind::isolated ? abs_imag(z.point) : z.y;
    double rr = general_disk(zx, zy);
    out.disks.push_back({Quaternion{zx, zy, 0, 0}, rr});
  }
  out.certified_bound = am * std::pow(R / (2.0 * (2 * m + 1)), m);
  return out;
}

ExclusionRegion cartan_balls(const ZeroList& Z, double H) {
  ExclusionRegion out;
  auto pts = zero_points(Z);
  int n = static_cast<int>(pts.size());
  if (n == 0) fail(Errc::empty_list, "cartan_balls needs at least one zero");
  out.certified_bound = std::pow(H / std::exp(1.0), n);

  Disk2 seb = smallest_enclosing_disk(pts);
  if (seb.r <= H) {
    out.disks.push_back({Quaternion{seb.c.x, std::max(0.0, seb.c.y), 0, 0}, 2.0 * H});
    return out;
  }

  std::vector<bool> used(pts.size(), false);
  int remaining = n;
  while (remaining > 0) {
    // largest lambda such that a disk of radius lambda H/n centered at a zero
    // stabilizes on exactly lambda of the remaining zeros
    int best_lambda = 0;
    std::vector<size_t> best_subset;
    HalfPlanePoint best_center{0, 0};
    for (size_t i = 0; i < pts.size(); ++i) {
      if (used[i]) continue;
      int lambda = 1;
      std::vector<size_t> subset;
      for (int guard = 0; guard <= remaining; ++guard) {
        subset.clear();
        double rad = lambda * H / n;
        for (size_t j = 0; j < pts.size(); ++j)
          if (!used[j] && hp_dist(pts[i], pts[j]) <= rad) subset.push_back(j);
        if (static_cast<int>(subset.size()) == lambda) break;
        lambda = static_cast<int>(subset.size());
      }
      if (lambda > best_lambda) {
        std::vector<HalfPlanePoint> sub;
        for (size_t j : subset) sub.push_back(pts[j]);
        Disk2 sd = smallest_enclosing_disk(sub);
        best_lambda = lambda;
        best_subset = subset;
        best_center = sd.c;
      } else if (lambda == best_lambda && lambda > 0) {
        std::vector<HalfPlanePoint> sub;
        for (size_t j : subset) sub.push_back(pts[j]);
        Disk2 sd = smallest_enclosing_disk(sub);
        if (sd.c.x < best_center.x ||
            (sd.c.x == best_center.x && sd.c.y < best_center.y)) {
          best_subset = subset;
          best_center = sd.c;
        }
      }
    }
    if (best_lambda == 0) fail(Errc::root_finding_failure, "cartan rank construction stalled");
    for (size_t j : best_subset) used[j] = true;
    remaining -= best_lambda;
    // step 4 doubling built in: stored radius is twice lambda H / n
    out.disks.push_back(
        {Quaternion{best_center.x, std::max(0.0, best_center.y), 0, 0}, 2.0 * best_lambda * H / n});
  }
  return out;
}

StarGrowthReport star_product_growth(const PowerSeries& f, const PowerSeries& g) {
  StarGrowthReport rep;
  rep.f = order_type_from_coeffs(f);
  rep.g = order_type_from_coeffs(g);
  rep.product = order_type_from_coeffs(star_mul(f, g, f.truncation_order() + g.truncation_order()));
  rep.expected_order = std::max(rep.f.order, rep.g.order);
  rep.order_law_holds = std::abs(rep.product.order - rep.expected_order) <= 0.1;
  return rep;
}

}  // namespace slicereg
