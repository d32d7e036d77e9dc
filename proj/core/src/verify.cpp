#include "slicereg/verify.hpp"

#include <chrono>
#include <cmath>

#include "slicereg/config.hpp"
#include "slicereg/evaluation.hpp"
#include "slicereg/factorization.hpp"
#include "slicereg/integral.hpp"
#include "slicereg/report.hpp"
#include "slicereg/rng.hpp"
#include "slicereg/zeros.hpp"

namespace slicereg {

namespace {

CheckRow row_le(const std::string& name, const std::string& params, double lhs, double rhs) {
  CheckRow r{name, params, lhs, rhs, rhs - lhs, lhs <= rhs};
  return r;
}

CheckRow row_near(const std::string& name, const std::string& params, double value, double target,
                  double tol) {
  CheckRow r{name, params, value, target, tol - std::abs(value - target),
             std::abs(value - target) <= tol};
  return r;
}

double coeff_distance(const PowerSeries& a, const PowerSeries& b) {
  double m = 0;
  int N = std::max(a.truncation_order(), b.truncation_order());
  for (int n = 0; n <= N; ++n) m = std::max(m, abs(a.coeff(n) - b.coeff(n)));
  return m;
}

PowerSeries random_series(Rng& rng, int degree) {
  std::vector<Quaternion> c(degree + 1);
  for (auto& q : c) q = rng.quaternion(-1, 1);
  return PowerSeries(std::move(c));
}

// ---------------------------------------------------------------- criterion 1
std::vector<CheckRow> c1_star_algebra(Rng& rng) {
  auto t0 = std::chrono::steady_clock::now();
  double worst_assoc = 0, worst_dist = 0, worst_conj = 0, worst_sym = 0;
  for (int trial = 0; trial < 500; ++trial) {
    int df = 1 + static_cast<int>(rng.uniform() * 12);
    int dg = 1 + static_cast<int>(rng.uniform() * 12);
    int dh = 1 + static_cast<int>(rng.uniform() * 12);
    PowerSeries f = random_series(rng, std::min(df, 12));
    PowerSeries g = random_series(rng, std::min(dg, 12));
    PowerSeries h = random_series(rng, std::min(dh, 12));
    int cap = 40;
    PowerSeries lhs = star_mul(star_mul(f, g, cap), h, cap);
    PowerSeries rhs = star_mul(f, star_mul(g, h, cap), cap);
    worst_assoc = std::max(worst_assoc, coeff_distance(lhs, rhs));
    PowerSeries d1 = star_mul(f, g + h, cap);
    PowerSeries d2 = star_mul(f, g, cap) + star_mul(f, h, cap);
    worst_dist = std::max(worst_dist, coeff_distance(d1, d2));
    PowerSeries c1s = conjugate(star_mul(f, g, cap));
    PowerSeries c2s = star_mul(conjugate(g), conjugate(f), cap);
    worst_conj = std::max(worst_conj, coeff_distance(c1s, c2s));
    PowerSeries fs = symmetrize(f, cap);
    for (const auto& c : fs.coeffs()) worst_sym = std::max(worst_sym, abs_imag(c));
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::vector<CheckRow> rows;
  rows.push_back(row_le("c1.associativity", "trials=500;deg<=12", worst_assoc, 1e-11));
  rows.push_back(row_le("c1.distributivity", "trials=500", worst_dist, 1e-11));
  rows.push_back(row_le("c1.product_conjugate", "(f*g)^c=g^c*f^c", worst_conj, 1e-12));
  rows.push_back(row_le("c1.symmetrization_real", "Im parts of f^s", worst_sym, 1e-12));
  // wall time is checked but not serialized, keeping reports byte-stable
  CheckRow rt{"c1.runtime_under_5s", "budget=5s", 0, 0, 0, secs < 5.0};
  rows.push_back(rt);
  return rows;
}

// ---------------------------------------------------------------- criterion 2
std::vector<CheckRow> c2_pointwise(Rng& rng) {
  double worst = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    PowerSeries f = random_series(rng, 6);
    PowerSeries g = random_series(rng, 6);
    Quaternion p = rng.quaternion(-0.8, 0.8);
    Quaternion lhs = eval(star_mul(f, g), p);
    Quaternion fp = eval(f, p);
    Quaternion rhs;
    if (abs(fp) < 1e-12)
      rhs = Quaternion::zero();
    else
      rhs = fp * eval(g, conjugate_by(fp, p));
    double scale = std::max({1.0, abs(lhs), abs(rhs)});
    worst = std::max(worst, abs(lhs - rhs) / scale);
  }
  return {row_le("c2.pointwise_product", "trials=1000", worst, 1e-10)};
}

// ---------------------------------------------------------------- criterion 3
std::vector<CheckRow> c3_composition(Rng& rng) {
  std::vector<CheckRow> rows;
  // the nonassociativity counterexample, coefficients checked at fp exactness
  Quaternion a = rng.quaternion(-1, 1), b = rng.quaternion(-1, 1), c = rng.quaternion(-1, 1);
  PowerSeries f = PowerSeries::monomial(2, c);
  PowerSeries g = PowerSeries::monomial(1, a);
  PowerSeries w = PowerSeries::monomial(2, b);
  PowerSeries left = bullet_compose(bullet_compose(f, g, 8), w, 8);
  PowerSeries right = bullet_compose(f, bullet_compose(g, w, 8), 8);
  Quaternion expect_left = (b * b) * (a * a) * c;
  Quaternion expect_right = b * a * b * a * c;
  double e1 = abs(left.coeff(4) - expect_left);
  double e2 = abs(right.coeff(4) - expect_right);
  rows.push_back(row_le("c3.counterexample_left", "q^4 b^2 a^2 c", e1, 1e-14));
  rows.push_back(row_le("c3.counterexample_right", "q^4 babac", e2, 1e-14));
  rows.push_back(row_le("c3.counterexample_differs", "generic a,b,c", 1e-6,
                        abs(expect_left - expect_right)));

  double worst_assoc = 0, worst_mult = 0, worst_inv = 0;
  for (int trial = 0; trial < 40; ++trial) {
    PowerSeries f1 = random_series(rng, 4);
    PowerSeries f2 = random_series(rng, 4);
    std::vector<Quaternion> wc(5);
    for (size_t n = 1; n < wc.size(); ++n) wc[n] = Quaternion{rng.uniform(-0.8, 0.8), 0, 0, 0};
    PowerSeries wr(std::move(wc));  // real coefficients, w(0) = 0
    int cap = 24;
    PowerSeries g1 = random_series(rng, 4);
    std::vector<Quaternion> g1c = g1.coeffs();
    g1c[0] = Quaternion::zero();
    PowerSeries g0(std::move(g1c));
    PowerSeries lhs2 = bullet_compose(bullet_compose(f1, g0, cap), wr, cap);
    PowerSeries rhs2 = bullet_compose(f1, bullet_compose(g0, wr, cap), cap);
    double sc2 = std::max({1.0, lhs2.scale(), rhs2.scale()});
    worst_assoc = std::max(worst_assoc, coeff_distance(lhs2, rhs2) / sc2);
    PowerSeries m1 = bullet_compose(star_mul(f1, f2, cap), wr, cap);
    PowerSeries m2 = star_mul(bullet_compose(f1, wr, cap), bullet_compose(f2, wr, cap), cap);
    double scm = std::max({1.0, m1.scale(), m2.scale()});
    worst_mult = std::max(worst_mult, coeff_distance(m1, m2) / scm);

    // compositional inverse round trip on g with g(0)=0, g'(0) invertible
    std::vector<Quaternion> gc(9);
    gc[1] = Quaternion::one() + 0.5 * rng.quaternion(-0.5, 0.5);
    for (size_t n = 2; n < gc.size(); ++n) gc[n] = rng.quaternion(-0.5, 0.5);
    PowerSeries gg(std::move(gc));
    PowerSeries ginv = compose_inverse(gg, InverseSide::right);
    PowerSeries idr = bullet_compose(gg, ginv, gg.truncation_order());
    PowerSeries ginl = compose_inverse(gg, InverseSide::left);
    PowerSeries idl = bullet_compose(ginl, gg, gg.truncation_order());
    double r1 = coeff_distance(idr, PowerSeries::variable());
    double r2 = coeff_distance(idl, PowerSeries::variable());
    worst_inv = std::max({worst_inv, r1, r2});
  }
  rows.push_back(row_le("c3.real_inner_associative", "trials=40", worst_assoc, 1e-12));
  rows.push_back(row_le("c3.bullet_multiplicative", "(f1*f2)•w=(f1•w)*(f2•w)", worst_mult, 1e-12));
  rows.push_back(row_le("c3.compose_inverse", "g•g_r=q and g_l•g=q", worst_inv, 1e-10));
  return rows;
}

// ---------------------------------------------------------------- criterion 4
struct BuiltPolynomial {
  PowerSeries P;
  ZeroList expected;
};

BuiltPolynomial build_random_polynomial(Rng& rng, int max_degree) {
  BuiltPolynomial out;
  out.P = PowerSeries::constant(Quaternion::one());
  std::vector<std::pair<double, double>> placed;
  int degree = 0;
  int target = 3 + static_cast<int>(rng.uniform() * (max_degree - 2));
  int guard = 0;
  while (degree < target && ++guard < 200) {
    int kind = static_cast<int>(rng.uniform() * 3);
    int mult = 1 + static_cast<int>(rng.uniform() * 2.3);
    double x = rng.uniform(-2.5, 2.5);
    double y = kind == 0 ? 0.0 : rng.uniform(0.5, 2.5);
    double mod = std::hypot(x, y);
    if (mod < 0.5 || mod > 3.0) continue;
    bool clash = false;
    for (auto [px, py] : placed)
      if (std::hypot(x - px, y - py) < 0.2) clash = true;
    if (clash) continue;
    int weight = (kind == 1 ? 2 : 1) * mult;
    if (degree + weight > target) {
      mult = 1;
      weight = kind == 1 ? 2 : 1;
      if (degree + weight > target) continue;
    }
    if (kind == 0) {
      for (int k = 0; k < mult; ++k)
        out.P = star_mul(out.P, PowerSeries({Quaternion{-x, 0, 0, 0}, Quaternion::one()}));
      out.expected.records.push_back(ZeroRecord::real_root(x, mult));
    } else if (kind == 1) {
      PowerSeries quad({Quaternion{x * x + y * y, 0, 0, 0}, Quaternion{-2 * x, 0, 0, 0},
                        Quaternion::one()});
      for (int k = 0; k < mult; ++k) out.P = star_mul(out.P, quad);
      out.expected.records.push_back(ZeroRecord::sphere(x, y, mult));
    } else {
      mult = std::min(mult, 2);
      Quaternion pt = Quaternion{x, 0, 0, 0} + y * rng.unit().value();
      Quaternion v = eval(out.P, pt);
      if (abs(v) < 1e-9) continue;
      Quaternion delta = conjugate_by(v, pt);
      for (int k = 0; k < mult; ++k)
        out.P = star_mul(out.P, PowerSeries({-delta, Quaternion::one()}));
      out.expected.records.push_back(ZeroRecord::isolated(pt, mult));
    }
    placed.push_back({x, y});
    degree += weight;
  }
  out.expected.sort_canonical();
  return out;
}

std::vector<CheckRow> c4_zero_round_trip(Rng& rng) {
  int failures = 0;
  double worst_param = 0;
  int trials = 200;
  for (int trial = 0; trial < trials; ++trial) {
    BuiltPolynomial built = build_random_polynomial(rng, 10);
    ZeroList found;
    try {
      found = find_zeros(built.P);
    } catch (const Error&) {
      ++failures;
      continue;
    }
    if (found.records.size() != built.expected.records.size()) {
      ++failures;
      continue;
    }
    bool ok = true;
    double localworst = 0;
    for (const auto& want : built.expected.records) {
      double best = 1e9;
      for (const auto& got : found.records) {
        if (got.kind != want.kind || got.multiplicity != want.multiplicity) continue;
        double d;
        if (want.kind == ZeroRecord::Kind::isolated)
          d = abs(got.point - want.point);
        else
          d = std::hypot(got.x - want.x, got.y - want.y);
        best = std::min(best, d);
      }
      localworst = std::max(localworst, best);
      if (best > 1e-7) ok = false;
    }
    if (!ok) ++failures;
    else worst_param = std::max(worst_param, localworst);
  }
  std::vector<CheckRow> rows;
  rows.push_back(row_le("c4.round_trip_failures", "trials=200;deg<=10", failures, 0));
  rows.push_back(row_le("c4.worst_parameter_error", "over passing trials", worst_param, 1e-7));

  // the classical multiplicity example: (q-i)*(q-j)(q^2+1)^3
  PowerSeries P = star_mul(PowerSeries({-Quaternion::i(), Quaternion::one()}),
                           PowerSeries({-Quaternion::j(), Quaternion::one()}));
  PowerSeries sphere({Quaternion::one(), Quaternion::zero(), Quaternion::one()});
  for (int k = 0; k < 3; ++k) P = star_mul(P, sphere);
  ZeroList z = find_zeros(P);
  int sphere_mult = 0, iso_total = 0;
  Quaternion iso_point{};
  for (const auto& r : z.records) {
    if (r.kind == ZeroRecord::Kind::sphere && std::abs(r.x) < 1e-9 && std::abs(r.y - 1) < 1e-9)
      sphere_mult = r.multiplicity;
    if (r.kind == ZeroRecord::Kind::isolated) {
      iso_point = r.point;
      iso_total = z.total_multiplicity_at(r.point);
    }
  }
  rows.push_back(row_near("c4.multiplicity_example_sphere", "(q-i)*(q-j)(q^2+1)^3", sphere_mult, 3, 0));
  rows.push_back(row_near("c4.multiplicity_example_point_total", "point i", iso_total, 5, 0));
  rows.push_back(row_le("c4.multiplicity_example_location", "distance to i", abs(iso_point - Quaternion::i()), 1e-8));
  return rows;
}

// ---------------------------------------------------------------- criterion 5
std::vector<CheckRow> c5_jensen(Rng& rng) {
  std::vector<CheckRow> rows;
  FactorForm g;
  g.factors.push_back(SphericalQuadratic{0, 1});
  FactorForm h = FactorForm::one();
  auto t0 = std::chrono::steady_clock::now();
  JensenReport rep = jensen_check(g, h, 2.0);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  double target = 2.0 * std::log(2.0);
  rows.push_back(row_near("c5.jensen_lhs", "g=q^2+1;R=2", rep.lhs, target, 1e-9));
  rows.push_back(row_near("c5.jensen_rhs", "g=q^2+1;R=2;nodes=4096", rep.rhs, target, 1e-6));
  rows.push_back(row_le("c5.jensen_residual", "lhs vs rhs", rep.residual, 1e-6));
  rows.push_back(CheckRow{"c5.runtime_under_1s", "budget=1s", 0, 0, 0, secs < 1.0});

  // zero-free: lhs = 0 = rhs
  FactorForm g2 = FactorForm::one();
  FactorForm h2 = FactorForm::one();
  h2.factors.push_back(ElementaryLinear{Quaternion{4, 1, 0, 0}});  // zero outside R=1
  JensenReport rep2 = jensen_check(g2, h2, 1.0);
  rows.push_back(row_le("c5.zero_free_residual", "no zeros in ball", rep2.residual, 1e-8));

  // Jensen inequality on normalized instances
  bool all_hold = true;
  for (int trial = 0; trial < 10; ++trial) {
    double yy = rng.uniform(0.6, 1.6);
    double xx = rng.uniform(-0.8, 0.8);
    FactorForm gg;
    gg.factors.push_back(ElementarySpherical{Quaternion{xx, yy, 0, 0}});  // value 1 at 0
    FactorForm hh;
    Quaternion root = Quaternion{rng.uniform(-1, 1), 0, 0, 0} + rng.uniform(0.5, 1.5) * rng.unit().value();
    if (abs(root) < 0.5) root = root * (0.7 / abs(root));
    hh.factors.push_back(ElementaryLinear{root});  // value 1 at 0
    JensenReport r3 = jensen_check(gg, hh, 2.0);
    if (!r3.inequality_applicable || !r3.inequality_holds) all_hold = false;
  }
  rows.push_back(CheckRow{"c5.jensen_inequality", "normalized instances", 0, 0, 0, all_hold});

  // mixed example residual with quadrature
  FactorForm g3;
  g3.factors.push_back(SphericalQuadratic{0, 1});
  FactorForm h3;
  h3.factors.push_back(LinearFactor{0.5 * Quaternion::i()});
  JensenReport rep3 = jensen_check(g3, h3, 2.0);
  rows.push_back(row_le("c5.mixed_residual", "g=q^2+1;h=q-i/2", rep3.residual, 1e-6));
  return rows;
}

// ---------------------------------------------------------------- criterion 6
std::vector<CheckRow> c6_growth(Rng&) {
  std::vector<CheckRow> rows;
  // e^{3 q^2} pattern at N=400
  {
    std::vector<Quaternion> c(401);
    double lg = 0;
    for (int m = 1; 2 * m <= 400; ++m) {
      lg += std::log(3.0) - std::log(static_cast<double>(m));
      c[2 * m] = Quaternion{std::exp(lg), 0, 0, 0};
    }
    c[0] = Quaternion::one();
    GrowthEstimate g = order_type_from_coeffs(PowerSeries(std::move(c)));
    rows.push_back(row_near("c6.exp3q2_order", "N=400", g.order, 2.0, 0.05));
    rows.push_back(row_near("c6.exp3q2_type", "N=400", g.type, 3.0, 0.15));
  }
  // a_n = 1/n! at N=500
  GrowthEstimate ge = order_type_from_coeffs(exp_series(500));
  rows.push_back(row_near("c6.exp_order", "N=500", ge.order, 1.0, 0.02));
  rows.push_back(row_near("c6.exp_type", "N=500", ge.type, 1.0, 0.05));

  // coefficient vs modulus agreement on e^q
  {
    PowerSeries f = exp_series(256);
    std::vector<std::pair<double, double>> samples;
    for (int k = 0; k < 16; ++k) {
      double r = 2.0 * std::pow(12.0, k / 15.0);
      samples.push_back({r, max_modulus(f, r).M});
    }
    GrowthEstimate gm = order_type_from_modulus(samples);
    rows.push_back(row_le("c6.coeff_vs_modulus", "e^q", std::abs(gm.order - ge.order), 0.1));
  }
  // polynomial -> order 0
  {
    std::vector<Quaternion> c(401);
    c[5] = Quaternion::one();
    c[0] = Quaternion::one();
    GrowthEstimate gp = order_type_from_coeffs(PowerSeries(std::move(c)));
    rows.push_back(row_near("c6.polynomial_order", "q^5+1", gp.order, 0.0, 0.0));
  }
  // star product law case 1: e^{2q^2} ⋆ e^{q}
  {
    std::vector<Quaternion> c(401);
    double lg = 0;
    c[0] = Quaternion::one();
    for (int m = 1; 2 * m <= 400; ++m) {
      lg += std::log(2.0) - std::log(static_cast<double>(m));
      c[2 * m] = Quaternion{std::exp(lg), 0, 0, 0};
    }
    PowerSeries f(std::move(c));
    PowerSeries g = exp_series(400);
    StarGrowthReport rep = star_product_growth(f, g);
    rows.push_back(row_near("c6.star_product_order", "e^{2q^2} * e^q", rep.product.order, 2.0, 0.1));
    rows.push_back(row_near("c6.star_product_type", "case 1", rep.product.type, 2.0, 0.2));
    // symmetrization keeps order (f^s vs f on e^{2q^2})
    GrowthEstimate gs = order_type_from_coeffs(symmetrize(f, 400));
    rows.push_back(row_le("c6.symmetrization_order", "|rho(f^s)-rho(f)|",
                          std::abs(gs.order - rep.f.order), 0.1));
  }
  // convergence exponents
  {
    ZeroList sin_zeros;
    for (int n = 1; n <= 5000; ++n) {
      sin_zeros.records.push_back(ZeroRecord::real_root(3.14159265358979323846 * n));
      sin_zeros.records.push_back(ZeroRecord::real_root(-3.14159265358979323846 * n));
    }
    std::vector<double> grid;
    for (int k = 1; k <= 64; ++k) grid.push_back(5000.0 * 3.141592653589793 * k / 64.0);
    ZeroStatistics st = zero_statistics(sin_zeros, grid);
    std::vector<Quaternion> sc(501);
    double lg = 0;
    for (int m = 0; 2 * m + 1 <= 500; ++m) {
      if (m > 0) lg -= std::log(static_cast<double>(2 * m)) + std::log(static_cast<double>(2 * m + 1));
      sc[2 * m + 1] = Quaternion{(m % 2 == 0 ? 1.0 : -1.0) * std::exp(lg), 0, 0, 0};
    }
    GrowthEstimate gsin = order_type_from_coeffs(PowerSeries(std::move(sc)));
    rows.push_back(row_le("c6.exponent_intrinsic", "sin zeros vs rho",
                          st.convergence_exponent, gsin.order + 0.1));
    rows.push_back(row_le("c6.exponent_double_bound", "sin zeros vs 2 rho",
                          st.convergence_exponent, 2 * gsin.order + 0.1));

    ZeroList sq;
    for (int n = 1; n <= 10000; ++n) sq.records.push_back(ZeroRecord::real_root(std::sqrt(n)));
    std::vector<double> grid2;
    for (int k = 1; k <= 64; ++k) grid2.push_back(100.0 * k / 64.0);
    ZeroStatistics st2 = zero_statistics(sq, grid2);
    rows.push_back(row_near("c6.exponent_sqrt_n", "|g_n|=sqrt(n)", st2.convergence_exponent, 2.0, 0.1));
    ZeroList lin;
    for (int n = 1; n <= 10000; ++n) lin.records.push_back(ZeroRecord::real_root(static_cast<double>(n)));
    std::vector<double> grid3;
    for (int k = 1; k <= 64; ++k) grid3.push_back(10000.0 * k / 64.0);
    ZeroStatistics st3 = zero_statistics(lin, grid3);
    rows.push_back(row_near("c6.exponent_linear", "|g_n|=n", st3.convergence_exponent, 1.0, 0.05));
  }
  return rows;
}

// ---------------------------------------------------------------- criterion 7
std::vector<CheckRow> c7_lower_bounds(Rng& rng) {
  std::vector<CheckRow> rows;
  // Ehrenpreis-Malgrange origin case on q^2 + 1
  FactorForm P;
  P.factors.push_back(SphericalQuadratic{0, 1});
  ExclusionRegion em = lower_bound_region(P, Quaternion::zero(), 2.0, LowerBoundMode::origin);
  rows.push_back(row_near("c7.em_bound", "q^2+1;R=2", em.certified_bound, 0.25, 1e-12));
  rows.push_back(row_near("c7.em_radius", "gap midpoint", em.gamma_radius, 1.5, 1e-9));
  double grid_min = 1e300;
  for (int k = 0; k <= 512; ++k) {
    double th = 3.141592653589793 * k / 512;
    SphereExtremes e = sphere_extremes(expand(P), em.gamma_radius * std::cos(th),
                                       em.gamma_radius * std::sin(th));
    grid_min = std::min(grid_min, e.min);
  }
  rows.push_back(row_near("c7.em_grid_min", "min |P| on Gamma", grid_min, 1.25, 1e-9));
  rows.push_back(row_le("c7.em_bound_holds", "bound <= grid min", em.certified_bound, grid_min));

  // Cartan: single zero at origin
  {
    ZeroList z;
    z.records.push_back(ZeroRecord::real_root(0.0));
    ExclusionRegion reg = cartan_balls(z, 1.0);
    double sum = 0;
    for (const auto& d : reg.disks) sum += d.radius;
    rows.push_back(row_near("c7.cartan_single_radius", "zero at 0;H=1", sum, 2.0, 1e-12));
    PowerSeries Pq = PowerSeries::variable();
    int violations = 0;
    for (int k = 0; k < 10000; ++k) {
      Quaternion q = rng.quaternion(-4, 4);
      if (reg.contains(q)) continue;
      if (abs(eval(Pq, q)) <= reg.certified_bound) ++violations;
    }
    rows.push_back(row_le("c7.cartan_single_exterior", "|q|>1/e outside", violations, 0));
  }
  // Cartan: sphere pair [i] plus real zero 3
  {
    ZeroList z;
    z.records.push_back(ZeroRecord::sphere(0, 1, 1));
    z.records.push_back(ZeroRecord::real_root(3.0));
    double H = 1.0;
    ExclusionRegion reg = cartan_balls(z, H);
    double sum = 0;
    for (const auto& d : reg.disks) sum += d.radius;
    rows.push_back(row_near("c7.cartan_radii_sum", "2H", sum, 2.0 * H, 1e-12));
    PowerSeries Pq = star_mul(PowerSeries({Quaternion::one(), Quaternion::zero(), Quaternion::one()}),
                              PowerSeries({Quaternion{-3, 0, 0, 0}, Quaternion::one()}));
    int n = z.total_count();
    double bound = std::pow(H / std::exp(1.0), n);
    int violations = 0, tested = 0;
    for (int k = 0; k < 40000 && tested < 10000; ++k) {
      Quaternion q = rng.quaternion(-5, 5);
      if (reg.contains(q)) continue;
      ++tested;
      if (abs(eval(Pq, q)) <= bound) ++violations;
    }
    rows.push_back(row_le("c7.cartan_exterior", "10^4 samples", violations, 0));
    rows.push_back(row_near("c7.cartan_exterior_samples", "count", tested, 10000, 0));
  }
  return rows;
}

// ---------------------------------------------------------------- criterion 8
std::vector<CheckRow> c8_integral(Rng&) {
  std::vector<CheckRow> rows;
  Quaternion q0{0.5, 0.5, 0, 0};
  ContourSpec C = ContourSpec::make(ImaginaryUnit::i(), 2.0, 256);

  PowerSeries poly({Quaternion{0.3, 0.2, -0.1, 0}, Quaternion{1, -1, 0.5, 0},
                    Quaternion{0, 0, 1, 0}, Quaternion{0.7, 0, 0, -0.4}});
  double e_val = abs(cauchy_eval(poly, q0, 0, C) - eval(poly, q0));
  double e_der = abs(cauchy_eval(poly, q0, 1, C) - eval(derivative(poly), q0));
  PowerSeries ex = exp_series(64);
  double e_exp = abs(cauchy_eval(ex, q0, 0, C) - qexp(q0));
  rows.push_back(row_le("c8.cauchy_value_poly", "R=2", e_val, 1e-8));
  rows.push_back(row_le("c8.cauchy_derivative_poly", "n=1", e_der, 1e-8));
  rows.push_back(row_le("c8.cauchy_value_exp", "R=2", e_exp, 1e-8));

  // slice independence
  Quaternion v1 = cauchy_eval(poly, q0, 0, ContourSpec::make(ImaginaryUnit::i(), 2.0, 256));
  Quaternion v2 = cauchy_eval(poly, q0, 0, ContourSpec::make(ImaginaryUnit::j(), 2.0, 256));
  Quaternion v3 = cauchy_eval(
      poly, q0, 0,
      ContourSpec::make(ImaginaryUnit(Quaternion{0, 1, 1, 0}), 2.0, 256));
  double spread = std::max(abs(v1 - v2), std::max(abs(v1 - v3), abs(v2 - v3)));
  rows.push_back(row_le("c8.slice_independence", "slices i,j,(i+j)/sqrt2", spread, 1e-9));

  // Schwarz reproduces f = q
  PowerSeries idq = PowerSeries::variable();
  Quaternion p{0.3, 0.2, 0.4, 0.1};
  double e_schwarz = abs(schwarz_eval(idq, ContourSpec::make(ImaginaryUnit::i(), 2.0, 1024), p) - p);
  rows.push_back(row_le("c8.schwarz_identity", "f=q", e_schwarz, 1e-8));

  // Borel transform of e^{2q}: sigma = 2, round trip at q = 0.4 + 0.3 j
  std::vector<Quaternion> bc(151);
  double lg = 0;
  bc[0] = Quaternion::one();
  for (int k = 1; k <= 150; ++k) {
    lg += std::log(2.0) - std::log(static_cast<double>(k));
    bc[k] = Quaternion{std::exp(lg), 0, 0, 0};
  }
  PowerSeries e2q(std::move(bc));
  BorelSeries phi = borel(e2q);
  rows.push_back(row_near("c8.borel_sigma", "e^{2q}", phi.sigma, 2.0, 0.02));
  Quaternion pt{0.4, 0, 0.3, 0};
  Quaternion back = borel_invert(phi, pt, ContourSpec::make(ImaginaryUnit::i(), 3.0, 512));
  Quaternion truth = qexp(2.0 * pt);
  rows.push_back(row_le("c8.borel_round_trip", "radius=3", abs(back - truth), 1e-7));
  return rows;
}

// ---------------------------------------------------------------- criterion 9
std::vector<CheckRow> c9_blaschke(Rng& rng) {
  std::vector<CheckRow> rows;
  double worst_boundary = 0, worst_zero = 0;
  for (int trial = 0; trial < 50; ++trial) {
    Quaternion a = rng.uniform(0.08, 0.9) * rng.unit().value() + Quaternion{rng.uniform(-0.4, 0.4), 0, 0, 0};
    double m = abs(a);
    if (m < 0.05) a = a + Quaternion{0.3, 0, 0, 0};
    if (abs(a) >= 0.95) a = a * (0.9 / abs(a));
    FactorForm B = blaschke_factor(a, BlaschkeKind::point);
    ImaginaryUnit I = rng.unit();
    for (int k = 0; k < 256; ++k) {
      double th = 6.283185307179586 * k / 256;
      Quaternion q = std::cos(th) * Quaternion::one() + std::sin(th) * I.value();
      worst_boundary = std::max(worst_boundary, std::abs(abs(eval_factored(B, q)) - 1.0));
    }
    worst_zero = std::max(worst_zero, abs(eval_factored(B, a)));
    Quaternion inside = 0.8 * rng.unit().value() * rng.uniform(0.1, 0.99);
    if (abs(eval_factored(B, inside)) >= 1.0) worst_boundary = 1.0;  // |B|<1 inside must hold
  }
  rows.push_back(row_le("c9.boundary_modulus", "50 roots;256 nodes", worst_boundary, 1e-11));
  rows.push_back(row_le("c9.zero_at_root", "B_a(a)", worst_zero, 1e-11));

  BlaschkeCertificate ok = blaschke_condition(BlaschkeRule{BlaschkeRule::Kind::geometric, 1.0, 0.5});
  BlaschkeCertificate bad = blaschke_condition(BlaschkeRule{BlaschkeRule::Kind::power, 1.0, 1.0});
  rows.push_back(CheckRow{"c9.certificate_accepts_geometric", "1-2^{-j}", ok.condition_sum, 0, 0,
                          ok.certified});
  rows.push_back(CheckRow{"c9.certificate_rejects_harmonic", "1-1/j", 0, 0, 0, !bad.certified});
  return rows;
}

std::vector<CriterionResult> run_criteria(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  using CriterionFn = std::vector<CheckRow> (*)(Rng&);
  struct Entry {
    int idx;
    const char* label;
    CriterionFn fn;
  };
  const Entry entries[] = {
      {1, "star algebra", c1_star_algebra},
      {2, "pointwise product theorem", c2_pointwise},
      {3, "composition suite", c3_composition},
      {4, "zero round trip", c4_zero_round_trip},
      {5, "Jensen", c5_jensen},
      {6, "growth estimators", c6_growth},
      {7, "lower bounds", c7_lower_bounds},
      {8, "integral reconstruction", c8_integral},
      {9, "Blaschke", c9_blaschke},
  };
  for (const Entry& e : entries) {
    Rng rng(seed * 1013904223ull + static_cast<std::uint64_t>(e.idx));
    CriterionResult c{e.idx, e.label, {}, true};
    try {
      c.rows = e.fn(rng);
    } catch (const std::exception& ex) {
      c.rows.push_back(CheckRow{std::string("c") + std::to_string(e.idx) + ".exception", ex.what(),
                                0, 0, 0, false});
    }
    for (const auto& r : c.rows)
      if (!r.pass) c.pass = false;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

VerifyReport run_verification(std::uint64_t seed) {
  VerifyReport rep;
  rep.criteria = run_criteria(seed);

  // criterion 10: a second run must reproduce the report byte for byte
  std::vector<CheckRow> flat1, flat2;
  for (const auto& c : rep.criteria) flat1.insert(flat1.end(), c.rows.begin(), c.rows.end());
  auto again = run_criteria(seed);
  for (const auto& c : again) flat2.insert(flat2.end(), c.rows.begin(), c.rows.end());
  bool identical = render_csv(flat1) == render_csv(flat2);
  CriterionResult det{10, "determinism", {CheckRow{"c10.byte_identical_reports",
                                                   "two runs, same seed", 0, 0, 0, identical}},
                      identical};
  rep.criteria.push_back(det);

  rep.all_pass = true;
  for (const auto& c : rep.criteria) {
    rep.rows.insert(rep.rows.end(), c.rows.begin(), c.rows.end());
    if (!c.pass) rep.all_pass = false;
  }
  rep.csv = render_csv(rep.rows);
  rep.summary_json = render_json_summary(rep.rows);
  return rep;
}

}  // namespace slicereg
