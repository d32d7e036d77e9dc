#include "slicereg/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "slicereg/aberth.hpp"
#include "slicereg/config.hpp"
#include "slicereg/evaluation.hpp"

namespace slicereg {

namespace {

using cd = std::complex<double>;

double eval_scale(const PowerSeries& P, double r) {
  return P.scale() * std::max(1.0, std::pow(r, P.degree() > 0 ? P.degree() : 0));
}

PowerSeries trimmed(const PowerSeries& P) {
  int d = P.degree();
  if (d < 0) fail(Errc::zero_polynomial, "the zero polynomial has no zero structure");
  return P.truncated_to(d);
}

// real coefficient list of P^s (imaginary parts vanish analytically)
std::vector<double> symmetrization_coeffs(const PowerSeries& P) {
  PowerSeries Ps = symmetrize(P, 2 * P.truncation_order());
  std::vector<double> s(Ps.coeffs().size());
  for (size_t n = 0; n < s.size(); ++n) s[n] = real(Ps.coeffs()[n]);
  return s;
}

PowerSeries deflate_linear(const PowerSeries& P, const Quaternion& p, double* residual) {
  int m = P.truncation_order();
  std::vector<Quaternion> g(m);
  g[m - 1] = P.coeff(m);
  for (int n = m - 1; n >= 1; --n) g[n - 1] = P.coeff(n) + p * g[n];
  if (residual) *residual = abs(P.coeff(0) + p * g[0]);
  return PowerSeries(std::move(g), P.truncated());
}

PowerSeries deflate_quadratic(const PowerSeries& P, double x, double y, double* residual) {
  double b = x * x + y * y, a = -2.0 * x;
  int m = P.truncation_order();
  std::vector<Quaternion> g(m - 1);
  std::vector<Quaternion> rem(P.coeffs());
  for (int n = m; n >= 2; --n) {
    g[n - 2] = rem[n];
    rem[n - 1] -= a * g[n - 2];
    rem[n - 2] -= b * g[n - 2];
  }
  if (residual) *residual = std::max(abs(rem[0]), abs(rem[1]));
  return PowerSeries(std::move(g), P.truncated());
}

std::vector<cd> complex_derivative(const std::vector<cd>& c) {
  if (c.size() <= 1) return {cd(0)};
  std::vector<cd> d(c.size() - 1);
  for (size_t n = 1; n < c.size(); ++n) d[n - 1] = static_cast<double>(n) * c[n];
  return d;
}

cd complex_eval(const std::vector<cd>& c, cd z) {
  cd v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + *it;
  return v;
}

// Polishing against the original polynomial: the symmetrization doubles the
// degree and squares the coefficient scale, so roots refined there keep only
// about half the digits. Each zero kind has a well-conditioned formulation
// on the original data.

// real root of multiplicity r: 1D Gauss-Newton on the 4-vector P^{(r-1)}(t)
double polish_real_root(const PowerSeries& P, double x, int r) {
  PowerSeries d = P;
  for (int k = 1; k < r; ++k) d = derivative(d);
  PowerSeries dp = derivative(d);
  double t = x;
  for (int it = 0; it < 60; ++it) {
    Quaternion u = eval(d, Quaternion{t, 0, 0, 0});
    Quaternion v = eval(dp, Quaternion{t, 0, 0, 0});
    double denom = norm_sq(v);
    if (denom == 0) break;
    double step = (u.w * v.w + u.x * v.x + u.y * v.y + u.z * v.z) / denom;
    t -= step;
    if (std::abs(step) <= 1e-15 * (1.0 + std::abs(t))) break;
  }
  return std::abs(t - x) < std::min(8e-2 * (1.0 + std::abs(x)), 0.15) ? t : x;
}

// spherical part of order s: the slice restriction F + GJ vanishes to order
// exactly s at x + iy; Newton on the (s-1)-th derivative of the larger split
// component
cd polish_sphere(const SliceComplexSeries& sp, cd z0, int s) {
  std::vector<cd> F = sp.F, G = sp.G;
  for (int k = 1; k < s; ++k) {
    F = complex_derivative(F);
    G = complex_derivative(G);
  }
  auto dF = complex_derivative(F), dG = complex_derivative(G);
  bool use_f = std::abs(complex_eval(dF, z0)) >= std::abs(complex_eval(dG, z0));
  const auto& H = use_f ? F : G;
  const auto& dH = use_f ? dF : dG;
  cd z = z0;
  for (int it = 0; it < 60; ++it) {
    cd hv = complex_eval(H, z), dv = complex_eval(dH, z);
    if (dv == cd(0)) break;
    cd step = hv / dv;
    z -= step;
    if (std::abs(step) <= 1e-15 * (1.0 + std::abs(z))) break;
  }
  return std::abs(z - z0) < std::min(8e-2 * (1.0 + std::abs(z0)), 0.15) ? z : z0;
}

// isolated chain with no spherical part: the sphere parameters solve
// u(x,y) = |a|^2 - |b|^2 = 0, v(x,y) = <a, b> = 0 (the point zero a = -I b
// needs |a| = |b| and a ⟂ b). Both conditions are built from evaluations at
// generic sphere points, away from the zero itself, so they vanish to first
// order with O(1) gradients; |P| near the chain point is quadratically flat
// and unusable at this accuracy.
Quaternion polish_chain_point(const PowerSeries& P, Quaternion p, int /*c*/) {
  const Quaternion p0 = p;
  const double trust = 1e-2 * (1.0 + abs(p0));
  PowerSeries dP = derivative(P);
  const Quaternion qi = Quaternion::i();
  double x = real(p0), y = abs_imag(p0);
  if (y < 1e-9) return p0;

  auto dot = [](const Quaternion& u, const Quaternion& v) {
    return u.w * v.w + u.x * v.x + u.y * v.y + u.z * v.z;
  };
  for (int it = 0; it < 40; ++it) {
    Quaternion zp{x, y, 0, 0}, zm{x, -y, 0, 0};
    Quaternion fp = eval(P, zp), fm = eval(P, zm);
    Quaternion a = 0.5 * (fp + fm);
    Quaternion b = 0.5 * (qi * (fm - fp));
    Quaternion dp_ = eval(dP, zp), dm = eval(dP, zm);
    Quaternion ax = 0.5 * (dp_ + dm);
    Quaternion ay = 0.5 * (qi * dp_ - qi * dm);
    Quaternion bx = 0.5 * (qi * (dm - dp_));
    Quaternion by = 0.5 * (qi * ((-1.0 * qi) * dm - qi * dp_));
    double u = norm_sq(a) - norm_sq(b);
    double v = dot(a, b);
    double ux = 2 * dot(a, ax) - 2 * dot(b, bx), uy = 2 * dot(a, ay) - 2 * dot(b, by);
    double vx = dot(ax, b) + dot(a, bx), vy = dot(ay, b) + dot(a, by);
    double det = ux * vy - uy * vx;
    if (det == 0 || !std::isfinite(det)) break;
    double dx = (-u * vy + v * uy) / det;
    double dy = (-v * ux + u * vx) / det;
    x += dx;
    y += dy;
    if (std::hypot(x - real(p0), y - abs_imag(p0)) > trust) return p0;
    if (std::hypot(dx, dy) <= 1e-15 * (1.0 + std::hypot(x, y))) break;
  }
  if (y <= 0) return p0;
  SphereAffineData d = sphere_data(P, x, y);
  double sc = eval_scale(P, std::hypot(x, y));
  if (abs(d.b) <= 1e-14 * std::max(1.0, sc)) return p0;
  Quaternion In = -1.0 * (d.a * inv(d.b));
  double imn = abs_imag(In);
  if (imn < 0.5) return p0;
  Quaternion cand = Quaternion{x, 0, 0, 0} + y * (imag(In) / imn);
  if (abs(cand - p0) > trust) return p0;
  return abs(eval(P, cand)) <= abs(eval(P, p0)) * 4.0 + 1e-9 * sc ? cand : p0;
}

// chain of length >= 2: locating through any single function fails, because
// everything built from P alone is quadratically flat at the point. The
// joint residual [P(p); u(G_p); v(G_p)], where G_p is the cofactor of the
// synthetic division by (q - p) and (u, v) are its sphere-zero conditions,
// vanishes to first order with a full-rank Jacobian. Solved by Gauss-Newton
// with a finite-difference Jacobian.
Quaternion polish_chain2_point(const PowerSeries& P, Quaternion p0) {
  const double trust = 1e-2 * (1.0 + abs(p0));
  const Quaternion qi = Quaternion::i();
  auto dot = [](const Quaternion& u, const Quaternion& v) {
    return u.w * v.w + u.x * v.x + u.y * v.y + u.z * v.z;
  };
  auto residual = [&](const Quaternion& p, double out[6]) {
    Quaternion val = eval(P, p);
    double res = 0;
    PowerSeries G = deflate_linear(P, p, &res);
    double x = real(p), y = abs_imag(p);
    Quaternion fp = eval(G, Quaternion{x, y, 0, 0});
    Quaternion fm = eval(G, Quaternion{x, -y, 0, 0});
    Quaternion a = 0.5 * (fp + fm);
    Quaternion b = 0.5 * (qi * (fm - fp));
    out[0] = val.w; out[1] = val.x; out[2] = val.y; out[3] = val.z;
    out[4] = norm_sq(a) - norm_sq(b);
    out[5] = dot(a, b);
  };
  Quaternion p = p0;
  double r0[6];
  residual(p, r0);
  for (int it = 0; it < 25; ++it) {
    double base[6];
    residual(p, base);
    double h = 1e-6 * (1.0 + abs(p));
    long double J[6][4];
    for (int c = 0; c < 4; ++c) {
      Quaternion dp = p;
      (&dp.w)[c] += h;
      double pert[6];
      residual(dp, pert);
      for (int r = 0; r < 6; ++r) J[r][c] = (pert[r] - base[r]) / h;
    }
    // normal equations J^T J step = -J^T base
    long double A[4][4] = {}, rhs[4] = {};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int r = 0; r < 6; ++r) A[i][j] += J[r][i] * J[r][j];
    for (int i = 0; i < 4; ++i)
      for (int r = 0; r < 6; ++r) rhs[i] -= J[r][i] * base[r];
    // tiny Tikhonov damping keeps the step sane if the Jacobian degenerates
    long double tr = 0;
    for (int i = 0; i < 4; ++i) tr += A[i][i];
    for (int i = 0; i < 4; ++i) A[i][i] += 1e-14L * (tr + 1);
    int idx[4] = {0, 1, 2, 3};
    for (int piv = 0; piv < 4; ++piv) {
      int best = piv;
      for (int r = piv + 1; r < 4; ++r)
        if (std::abs((double)A[idx[r]][piv]) > std::abs((double)A[idx[best]][piv])) best = r;
      std::swap(idx[piv], idx[best]);
      for (int r = piv + 1; r < 4; ++r) {
        long double f = A[idx[r]][piv] / A[idx[piv]][piv];
        for (int cc = piv; cc < 4; ++cc) A[idx[r]][cc] -= f * A[idx[piv]][cc];
        rhs[idx[r]] -= f * rhs[idx[piv]];
      }
    }
    double step[4];
    for (int i = 3; i >= 0; --i) {
      long double s = rhs[idx[i]];
      for (int j = i + 1; j < 4; ++j) s -= A[idx[i]][j] * step[j];
      step[i] = (double)(s / A[idx[i]][i]);
    }
    Quaternion np{p.w + step[0], p.x + step[1], p.y + step[2], p.z + step[3]};
    if (abs(np - p0) > trust) return p0;
    double moved = std::hypot(std::hypot(step[0], step[1]), std::hypot(step[2], step[3]));
    p = np;
    if (moved <= 1e-14 * (1.0 + abs(p))) break;
  }
  double rf[6];
  residual(p, rf);
  double n0 = 0, nf = 0;
  for (int i = 0; i < 6; ++i) { n0 += r0[i] * r0[i]; nf += rf[i] * rf[i]; }
  return nf <= n0 ? p : p0;
}

// one root cluster of the symmetrization, merged with its conjugate
struct Candidate {
  double x = 0;
  double y = 0;    // |Im|; ~0 marks a real root cluster
  int pair_mult = 0;  // multiplicity of x + iy as a root of P^s (per half)
};

std::vector<Candidate> cluster_candidates(const std::vector<cd>& roots, double tol_scale) {
  std::vector<bool> used(roots.size(), false);
  std::vector<Candidate> out;
  // deterministic processing order: by modulus then lexicographic
  std::vector<size_t> order(roots.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    double ma = std::abs(roots[a]), mb = std::abs(roots[b]);
    if (ma != mb) return ma < mb;
    if (roots[a].real() != roots[b].real()) return roots[a].real() < roots[b].real();
    return roots[a].imag() < roots[b].imag();
  });
  for (size_t oi : order) {
    if (used[oi]) continue;
    cd z0 = roots[oi];
    double tol = tol_scale * (1.0 + std::abs(z0));
    // grow the cluster around z0 until stable (a wide multiple-root scatter
    // is reached from any of its members)
    std::vector<size_t> plus;
    cd anchor = z0;
    for (int round = 0; round < 8; ++round) {
      std::vector<size_t> next;
      for (size_t j = 0; j < roots.size(); ++j)
        if (!used[j] && std::abs(roots[j] - anchor) < tol) next.push_back(j);
      cd centroid = 0;
      for (size_t j : next) centroid += roots[j];
      centroid /= static_cast<double>(next.size());
      if (next.size() == plus.size() && std::abs(centroid - anchor) < 1e-12) {
        plus = next;
        break;
      }
      plus = next;
      anchor = centroid;
    }
    std::vector<size_t> minus;
    for (size_t j = 0; j < roots.size(); ++j)
      if (!used[j] && std::abs(roots[j] - std::conj(anchor)) < tol &&
          std::find(plus.begin(), plus.end(), j) == plus.end())
        minus.push_back(j);
    bool real_cluster = std::abs(anchor.imag()) < std::max(1e-7, 0.5 * tol) && minus.empty();
    Candidate c;
    if (real_cluster) {
      for (size_t j : plus) used[j] = true;
      c.x = anchor.real();
      c.y = 0;
      c.pair_mult = static_cast<int>(plus.size());  // counts both halves already
    } else {
      if (minus.empty() || plus.size() != minus.size())
        fail(Errc::root_finding_failure, "unpaired complex roots in the symmetrization");
      for (size_t j : plus) used[j] = true;
      for (size_t j : minus) used[j] = true;
      c.x = anchor.real();
      c.y = std::abs(anchor.imag());
      c.pair_mult = static_cast<int>(plus.size());
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace

double ZeroRecord::modulus() const {
  if (kind == Kind::isolated) return abs(point);
  return std::hypot(x, y);
}

ZeroRecord ZeroRecord::real_root(double x, int mult) {
  return ZeroRecord{Kind::real, x, 0.0, Quaternion{x, 0, 0, 0}, mult};
}
ZeroRecord ZeroRecord::isolated(const Quaternion& p, int mult) {
  return ZeroRecord{Kind::isolated, real(p), abs_imag(p), p, mult};
}
ZeroRecord ZeroRecord::sphere(double x, double y, int mult) {
  return ZeroRecord{Kind::sphere, x, y, Quaternion{x, y, 0, 0}, mult};
}

void ZeroList::sort_canonical() {
  std::sort(records.begin(), records.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
    double ma = a.modulus(), mb = b.modulus();
    if (std::abs(ma - mb) > 1e-12 * (1.0 + std::max(ma, mb))) return ma < mb;
    bool sa = a.kind == ZeroRecord::Kind::sphere, sb = b.kind == ZeroRecord::Kind::sphere;
    if (sa != sb) return sa;  // spheres before isolated at equal modulus
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    const Quaternion &p = a.point, &q = b.point;
    if (p.w != q.w) return p.w < q.w;
    if (p.x != q.x) return p.x < q.x;
    if (p.y != q.y) return p.y < q.y;
    return p.z < q.z;
  });
}

int ZeroList::total_count() const {
  int n = 0;
  for (const auto& r : records) n += (r.kind == ZeroRecord::Kind::sphere ? 2 : 1) * r.multiplicity;
  return n;
}

std::vector<double> ZeroList::moduli_expanded() const {
  std::vector<double> m;
  for (const auto& r : records) {
    int copies = (r.kind == ZeroRecord::Kind::sphere ? 2 : 1) * r.multiplicity;
    for (int k = 0; k < copies; ++k) m.push_back(r.modulus());
  }
  std::sort(m.begin(), m.end());
  return m;
}

int ZeroList::total_multiplicity_at(const Quaternion& p) const {
  int total = 0;
  for (const auto& r : records) {
    if (r.kind == ZeroRecord::Kind::sphere) {
      if (same_sphere(Quaternion{r.x, r.y, 0, 0}, p)) total += r.multiplicity;
    } else if (abs(r.point - p) <= config().eps_sphere * (1.0 + abs(p))) {
      total += r.multiplicity;
    }
  }
  return total;
}

SphereLocation locate_on_sphere(const PowerSeries& P, double x, double y) {
  SphereAffineData d = sphere_data(P, x, y);
  double sc = eval_scale(P, std::hypot(x, y));
  double tol = config().eps_sphere * sc;
  if (abs(d.a) <= tol && abs(d.b) <= tol) return {SphereLocation::Kind::whole_sphere, {}};
  if (abs(d.b) > tol) {
    Quaternion I = -1.0 * (d.a * inv(d.b));
    if (std::abs(real(I)) <= 1e-8 && std::abs(abs(I) - 1.0) <= 1e-8)
      return {SphereLocation::Kind::point, Quaternion{x, 0, 0, 0} + y * I};
    // a slightly off (x, y) tilts -a b^{-1} away from S; project it back and
    // accept when the projected point is a genuine zero
    double imn = abs_imag(I);
    if (imn > 0.5) {
      Quaternion In = imag(I) / imn;
      Quaternion p = Quaternion{x, 0, 0, 0} + y * In;
      if (abs(eval(P, p)) <= tol) return {SphereLocation::Kind::point, p};
    }
  }
  return {SphereLocation::Kind::none, {}};
}

PowerSeries deflate(const PowerSeries& P, const ZeroRecord& z) {
  double res = 0;
  double sc = eval_scale(P, z.modulus());
  if (z.kind == ZeroRecord::Kind::sphere) {
    if (P.degree() < 2) fail(Errc::not_a_zero, "degree too small for a spherical factor");
    PowerSeries out = deflate_quadratic(trimmed(P), z.x, z.y, &res);
    if (res > 1e-10 * sc) fail(Errc::not_a_zero, "sphere division residual " + std::to_string(res));
    return out;
  }
  if (P.degree() < 1) fail(Errc::not_a_zero, "degree too small for a linear factor");
  PowerSeries out = deflate_linear(trimmed(P), z.point, &res);
  if (res > 1e-10 * sc) fail(Errc::not_a_zero, "synthetic division residual " + std::to_string(res));
  return out;
}

namespace {

ZeroList classify_candidates(const PowerSeries& original, const std::vector<double>& S0,
                             const SliceComplexSeries& slice_i,
                             const std::vector<Candidate>& candidates) {
  ZeroList out;
  for (const auto& cand : candidates) {
    // multiplicity-aware refinement on the symmetrization, then a polish
    // against the original polynomial per zero kind
    int m_root = cand.pair_mult;
    cd z = refine_multiple_root(S0, cd(cand.x, cand.y), m_root);
    double x = cand.x, y = cand.y;
    if (std::isfinite(z.real()) && std::isfinite(z.imag()) &&
        std::abs(z - cd(cand.x, cand.y)) < std::min(8e-2 * (1.0 + std::abs(z)), 0.15)) {
      x = z.real();
      y = cand.y == 0 ? 0.0 : std::abs(z.imag());
    }

    if (cand.y == 0) {
      // real root: multiplicity by repeated synthetic division on the
      // original. The polish assumes the multiplicity, so a deterministic
      // ladder of assumed orders covers a misestimated refinement.
      if (cand.pair_mult % 2 != 0)
        fail(Errc::root_finding_failure, "odd real-root multiplicity in the symmetrization");
      int want = cand.pair_mult / 2;
      std::vector<double> guesses;
      for (int r = want; r >= 1; --r) guesses.push_back(polish_real_root(original, x, r));
      guesses.push_back(x);
      guesses.push_back(cand.x);
      bool done = false;
      for (double gx : guesses) {
        PowerSeries G = original;
        int got = 0;
        Quaternion rx{gx, 0, 0, 0};
        double sc = eval_scale(original, std::abs(gx));
        while (got < want && G.degree() >= 1 && abs(eval(G, rx)) <= config().eps_sphere * sc) {
          double res = 0;
          PowerSeries next = deflate_linear(G, rx, &res);
          if (res > config().eps_sphere * sc) break;
          G = next;
          ++got;
        }
        if (got == want) {
          out.records.push_back(ZeroRecord::real_root(gx, want));
          done = true;
          break;
        }
      }
      if (!done)
        fail(Errc::root_finding_failure, "real multiplicity mismatch at x = " + std::to_string(x));
      continue;
    }

    // the spherical order at the candidate is visible on the i-slice: the
    // split components vanish there to order exactly s
    int s_hat = 0;
    {
      std::vector<cd> F = slice_i.F, G = slice_i.G;
      double sc = eval_scale(original, std::hypot(x, y));
      cd z0{x, y};
      while (s_hat < cand.pair_mult / 2) {
        if (std::abs(complex_eval(F, z0)) > 1e-7 * sc || std::abs(complex_eval(G, z0)) > 1e-7 * sc)
          break;
        F = complex_derivative(F);
        G = complex_derivative(G);
        ++s_hat;
      }
    }
    // candidate locations, most informed first: slice polish at the probed
    // spherical order, then at the other plausible orders, then the raw
    // refinements; the split loop validates whichever is tried
    std::vector<cd> guesses;
    if (s_hat >= 1) guesses.push_back(polish_sphere(slice_i, cd(x, y), s_hat));
    guesses.push_back(cd(x, y));
    for (int so = cand.pair_mult / 2; so >= 1; --so)
      if (so != s_hat) guesses.push_back(polish_sphere(slice_i, cd(x, y), so));
    guesses.push_back(cd(cand.x, cand.y));

    bool done = false;
    std::string split_note;
    for (const cd& guess : guesses) {
      double gx = guess.real(), gy = std::abs(guess.imag());
      if (gy <= 0) continue;
      PowerSeries G = original;
      int s = 0, c = 0;
      Quaternion first_point{};
      while (2 * (s + 1) <= cand.pair_mult) {
        SphereLocation loc = locate_on_sphere(G, gx, gy);
        if (loc.kind != SphereLocation::Kind::whole_sphere) break;
        double res = 0;
        PowerSeries next = deflate_quadratic(G, gx, gy, &res);
        if (res > config().eps_sphere * eval_scale(G, std::hypot(gx, gy))) break;
        G = next;
        ++s;
      }
      while (2 * s + c < cand.pair_mult && G.degree() >= 1) {
        SphereLocation loc = locate_on_sphere(G, gx, gy);
        if (loc.kind != SphereLocation::Kind::point) break;
        double res = 0;
        PowerSeries next = deflate_linear(G, loc.point, &res);
        if (res > config().eps_sphere * eval_scale(G, std::hypot(gx, gy))) break;
        if (c == 0) first_point = loc.point;
        G = next;
        ++c;
      }
      if (2 * s + c != cand.pair_mult) {
        split_note = "sphere multiplicity split failed: 2*" + std::to_string(s) + "+" +
                     std::to_string(c) + " vs " + std::to_string(cand.pair_mult);
        continue;
      }
      if (s > 0) out.records.push_back(ZeroRecord::sphere(gx, gy, s));
      if (c > 0) {
        if (s == 0)
          first_point = c == 1 ? polish_chain_point(original, first_point, c)
                               : polish_chain2_point(original, first_point);
        out.records.push_back(ZeroRecord::isolated(first_point, c));
      }
      done = true;
      break;
    }
    if (!done) fail(Errc::root_finding_failure, split_note.empty() ? "sphere split failed" : split_note);
  }
  return out;
}

}  // namespace

ZeroList find_zeros(const PowerSeries& P, bool assume_polynomial) {
  (void)assume_polynomial;
  PowerSeries original = trimmed(P);
  int deg = original.degree();
  if (deg == 0) return {};

  // roots of the symmetrization on C_i, clustered into candidate spheres and
  // real roots; cluster sizes give the exact S-multiplicity 2s + c. The
  // cluster tolerance trades multiple-root scatter against the separation of
  // distinct spheres; the classification checks detect a bad choice, so a
  // short deterministic ladder of tolerances is tried.
  auto S0 = symmetrization_coeffs(original);
  std::vector<cd> Sc(S0.begin(), S0.end());
  auto roots = aberth_roots(Sc);
  SliceComplexSeries slice_i = split(original, ImaginaryUnit::i(), ImaginaryUnit::j());

  const double ladder[] = {5e-2, 3e-2, 8e-2, 2e-2, 1.2e-1, 1.2e-2, 8e-3};
  std::string last_error;
  for (double tol_scale : ladder) {
    try {
      auto candidates = cluster_candidates(roots, tol_scale);
      ZeroList out = classify_candidates(original, S0, slice_i, candidates);
      if (out.total_count() != deg)
        fail(Errc::root_finding_failure, "degree accounting failed: " +
                                             std::to_string(out.total_count()) + " vs degree " +
                                             std::to_string(deg));
      out.sort_canonical();
      return out;
    } catch (const Error& e) {
      if (e.code() != Errc::root_finding_failure) throw;
      last_error = e.what();
    }
  }
  fail(Errc::root_finding_failure, last_error.empty() ? "classification failed" : last_error);
}

ZeroStatistics zero_statistics(const ZeroList& Z, std::span<const double> t_grid) {
  if (Z.records.empty()) fail(Errc::empty_list, "zero_statistics of an empty list");
  auto moduli = Z.moduli_expanded();
  ZeroStatistics st;
  st.t_grid.assign(t_grid.begin(), t_grid.end());
  std::sort(st.t_grid.begin(), st.t_grid.end());
  st.counting.resize(st.t_grid.size());
  for (size_t i = 0; i < st.t_grid.size(); ++i) {
    auto it = std::lower_bound(moduli.begin(), moduli.end(), st.t_grid[i]);
    st.counting[i] = static_cast<double>(it - moduli.begin());
  }
  // tail fit of log n / log t over grid points with n >= 1 in the top half
  std::vector<double> lx, ly;
  for (size_t i = st.t_grid.size() / 2; i < st.t_grid.size(); ++i)
    if (st.counting[i] >= 1.0 && st.t_grid[i] > 0) {
      lx.push_back(std::log(st.t_grid[i]));
      ly.push_back(std::log(st.counting[i]));
    }
  double slope = 0;
  if (lx.size() >= 2) {
    double mx = 0, my = 0;
    for (size_t k = 0; k < lx.size(); ++k) { mx += lx[k]; my += ly[k]; }
    mx /= lx.size(); my /= lx.size();
    double sxx = 0, sxy = 0;
    for (size_t k = 0; k < lx.size(); ++k) {
      sxx += (lx[k] - mx) * (lx[k] - mx);
      sxy += (lx[k] - mx) * (ly[k] - my);
    }
    slope = sxx > 0 ? sxy / sxx : 0.0;
  }
  st.convergence_exponent = std::max(0.0, slope);
  double dens = 0;
  for (size_t i = st.t_grid.size() / 2; i < st.t_grid.size(); ++i)
    if (st.t_grid[i] > 0)
      dens = std::max(dens, st.counting[i] / std::pow(st.t_grid[i], st.convergence_exponent));
  st.upper_density = dens;
  return st;
}

}  // namespace slicereg
