#include <doctest.h>

#include <complex>

#include "slicereg/evaluation.hpp"
#include "slicereg/rng.hpp"
#include "slicereg/series.hpp"

using namespace slicereg;

namespace {

PowerSeries random_series(Rng& rng, int deg) {
  std::vector<Quaternion> c(deg + 1);
  for (auto& q : c) q = rng.quaternion(-1, 1);
  return PowerSeries(std::move(c));
}

double coeff_distance(const PowerSeries& a, const PowerSeries& b) {
  double m = 0;
  int N = std::max(a.truncation_order(), b.truncation_order());
  for (int n = 0; n <= N; ++n) m = std::max(m, abs(a.coeff(n) - b.coeff(n)));
  return m;
}

// brute-force double-loop convolution, the independent oracle for star_mul
PowerSeries convolution_oracle(const PowerSeries& f, const PowerSeries& g) {
  std::vector<Quaternion> c(f.truncation_order() + g.truncation_order() + 1);
  for (int n = 0; n < static_cast<int>(c.size()); ++n)
    for (int r = 0; r <= n; ++r) c[n] += f.coeff(r) * g.coeff(n - r);
  return PowerSeries(std::move(c));
}

}  // namespace

TEST_CASE("star product basics") {
  // (q - i) * (q + i) = q^2 + 1
  PowerSeries f({-Quaternion::i(), Quaternion::one()});
  PowerSeries g({Quaternion::i(), Quaternion::one()});
  PowerSeries p = star_mul(f, g);
  CHECK(abs(p.coeff(0) - Quaternion::one()) < 1e-15);
  CHECK(abs(p.coeff(1)) < 1e-15);
  CHECK(abs(p.coeff(2) - Quaternion::one()) < 1e-15);

  // real left factor: coefficients match the pointwise product
  Rng rng(1);
  std::vector<Quaternion> rc(4);
  for (auto& q : rc) q = Quaternion{rng.uniform(-1, 1), 0, 0, 0};
  PowerSeries rf(std::move(rc));
  PowerSeries h = random_series(rng, 4);
  PowerSeries lhs = star_mul(rf, h);
  PowerSeries rhs = convolution_oracle(rf, h);
  CHECK(coeff_distance(lhs, rhs) < 1e-15);

  for (int t = 0; t < 50; ++t) {
    PowerSeries a = random_series(rng, 6), b = random_series(rng, 6);
    CHECK(coeff_distance(star_mul(a, b), convolution_oracle(a, b)) <= 1e-13);
  }
}

TEST_CASE("truncation cap marks the flag") {
  Rng rng(2);
  PowerSeries a = random_series(rng, 6), b = random_series(rng, 6);
  PowerSeries t = star_mul(a, b, 8);
  CHECK(t.truncation_order() == 8);
  CHECK(t.truncated());
  CHECK(!star_mul(a, b, 12).truncated());
}

TEST_CASE("conjugate") {
  PowerSeries f({Quaternion::zero(), Quaternion::i()});
  CHECK(abs(conjugate(f).coeff(1) + Quaternion::i()) < 1e-15);
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    PowerSeries a = random_series(rng, 8);
    CHECK(coeff_distance(conjugate(conjugate(a)), a) == 0.0);
    // (f*g)^c = g^c * f^c
    PowerSeries b = random_series(rng, 8);
    CHECK(coeff_distance(conjugate(star_mul(a, b)), star_mul(conjugate(b), conjugate(a))) <= 1e-13);
  }
}

TEST_CASE("symmetrization is real and multiplicative") {
  PowerSeries f({-Quaternion::i(), Quaternion::one()});
  PowerSeries fs = symmetrize(f);
  CHECK(abs(fs.coeff(0) - Quaternion::one()) < 1e-15);
  CHECK(abs(fs.coeff(2) - Quaternion::one()) < 1e-15);

  Rng rng(4);
  for (int t = 0; t < 30; ++t) {
    PowerSeries a = random_series(rng, 7);
    PowerSeries as = symmetrize(a);
    for (const auto& c : as.coeffs()) CHECK(abs_imag(c) <= 1e-13 * std::max(1.0, as.scale()));
    // f^s = f^c * f as well
    CHECK(coeff_distance(as, star_mul(conjugate(a), a)) <= 1e-13);
    // (f*g)^s = f^s g^s
    PowerSeries b = random_series(rng, 7);
    CHECK(coeff_distance(symmetrize(star_mul(a, b)), star_mul(symmetrize(a), symmetrize(b))) <=
          1e-12);
  }
}

TEST_CASE("star inverse") {
  Rng rng(5);
  // star_inverse(1 - q a) = sum q^n a^n
  Quaternion a = rng.quaternion(-1, 1);
  PowerSeries f({Quaternion::one(), -a});
  PowerSeries inv_f = star_inverse(f.truncated_to(12), 12);
  Quaternion an = Quaternion::one();
  for (int n = 0; n <= 12; ++n) {
    CHECK(abs(inv_f.coeff(n) - an) <= 1e-12 * (1 + abs(an)));
    an = an * a;
  }
  // residual of the defining contract
  PowerSeries prod = star_mul(f, inv_f, 12);
  CHECK(abs(prod.coeff(0) - Quaternion::one()) < 1e-12);
  for (int n = 1; n <= 12; ++n) CHECK(abs(prod.coeff(n)) < 1e-11);

  PowerSeries c = PowerSeries::constant(Quaternion{0, 2, 0, 0});
  CHECK(abs(star_inverse(c).coeff(0) - inv(Quaternion{0, 2, 0, 0})) < 1e-15);

  for (int t = 0; t < 20; ++t) {
    PowerSeries g = random_series(rng, 8);
    std::vector<Quaternion> gc = g.coeffs();
    gc[0] = Quaternion::one();
    PowerSeries g1(std::move(gc));
    PowerSeries gi = star_inverse(g1);
    PowerSeries idp = star_mul(g1, gi, 8);
    CHECK(abs(idp.coeff(0) - Quaternion::one()) < 1e-11);
    for (int n = 1; n <= 8; ++n) CHECK(abs(idp.coeff(n)) < 1e-10);
  }
  CHECK_THROWS_AS(star_inverse(PowerSeries({Quaternion::zero(), Quaternion::one()})), Error);
}

TEST_CASE("bullet composition") {
  // identity inner series
  Rng rng(6);
  PowerSeries g = random_series(rng, 6);
  CHECK(coeff_distance(bullet_compose(g, PowerSeries::variable(), 6), g) <= 1e-14);

  // the nonassociativity counterexample
  Quaternion a{0.3, 1, 0, 0}, b{0, 0, 1, -0.5}, c{0.2, 0, 0.7, 0};
  PowerSeries f = PowerSeries::monomial(2, c);
  PowerSeries gg = PowerSeries::monomial(1, a);
  PowerSeries w = PowerSeries::monomial(2, b);
  PowerSeries left = bullet_compose(bullet_compose(f, gg, 8), w, 8);
  PowerSeries right = bullet_compose(f, bullet_compose(gg, w, 8), 8);
  CHECK(abs(left.coeff(4) - b * b * a * a * c) < 1e-14);
  CHECK(abs(right.coeff(4) - b * a * b * a * c) < 1e-14);
  CHECK(abs(left.coeff(4) - right.coeff(4)) > 0.01);

  CHECK_THROWS_AS(bullet_compose(g, PowerSeries::constant(Quaternion::one())), Error);
}

TEST_CASE("compositional inverses") {
  Rng rng(7);
  for (int t = 0; t < 10; ++t) {
    std::vector<Quaternion> gc(10);
    gc[1] = Quaternion{1, 0, 0, 0} + rng.quaternion(-0.3, 0.3);
    for (size_t n = 2; n < gc.size(); ++n) gc[n] = rng.quaternion(-0.5, 0.5);
    PowerSeries g(std::move(gc));
    // b1 = a1^{-1}, b2 = -a1^{-2} a2 a1^{-1}
    PowerSeries r = compose_inverse(g, InverseSide::right);
    Quaternion a1i = inv(g.coeff(1));
    CHECK(abs(r.coeff(1) - a1i) < 1e-13);
    CHECK(abs(r.coeff(2) - (-1.0 * (a1i * a1i * g.coeff(2) * a1i))) < 1e-12);
    PowerSeries idr = bullet_compose(g, r, 9);
    CHECK(coeff_distance(idr, PowerSeries::variable()) <= 1e-10);
    PowerSeries l = compose_inverse(g, InverseSide::left);
    PowerSeries idl = bullet_compose(l, g, 9);
    CHECK(coeff_distance(idl, PowerSeries::variable()) <= 1e-10);
  }
  CHECK_THROWS_AS(compose_inverse(PowerSeries::constant(Quaternion::one()), InverseSide::right),
                  Error);
  CHECK_THROWS_AS(compose_inverse(PowerSeries::monomial(2, Quaternion::one()), InverseSide::right),
                  Error);
}

TEST_CASE("derivative") {
  PowerSeries m = PowerSeries::monomial(5, Quaternion{0, 0, 2, 0});
  PowerSeries d = derivative(m);
  CHECK(d.truncation_order() == 4);
  CHECK(abs(d.coeff(4) - Quaternion{0, 0, 10, 0}) < 1e-15);
  PowerSeries e = exp_series(20);
  CHECK(coeff_distance(derivative(e), e.truncated_to(19)) < 1e-15);
}

TEST_CASE("radius estimation") {
  std::vector<Quaternion> ones(64, Quaternion::one());
  RadiusEstimate r1 = radius(PowerSeries(std::move(ones)));
  CHECK(!r1.infinite);
  CHECK(r1.radius == doctest::Approx(1.0).epsilon(0.01));

  RadiusEstimate r2 = radius(exp_series(80));
  CHECK(r2.infinite);

  std::vector<Quaternion> twos(64);
  double v = 1;
  for (auto& c : twos) {
    c = Quaternion{v, 0, 0, 0};
    v *= 2;
  }
  RadiusEstimate r3 = radius(PowerSeries(std::move(twos)));
  CHECK(!r3.infinite);
  CHECK(r3.radius == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("transcendental star functions") {
  CHECK(coeff_distance(transcend(Transcendental::exp, PowerSeries::zero()),
                       PowerSeries::constant(Quaternion::one())) == 0.0);

  // restriction to the reals matches the scalar exponential
  PowerSeries e2 = transcend(Transcendental::exp, PowerSeries::monomial(1, Quaternion{2, 0, 0, 0}), 40);
  double x = 0.3;
  CHECK(abs(eval(e2, Quaternion{x, 0, 0, 0}) - Quaternion{std::exp(2 * x), 0, 0, 0}) <= 1e-10);

  // one-slice coefficients agree with the classical complex composition
  Quaternion w{0.4, 0.7, 0, 0};
  PowerSeries ew = transcend(Transcendental::exp, PowerSeries::monomial(1, w), 40);
  std::complex<double> wz{0.4, 0.7}, z{0.2, 0.5};
  std::complex<double> want = std::exp(z * wz);
  Quaternion got = eval(ew, Quaternion{z.real(), z.imag(), 0, 0});
  CHECK(std::abs(got.w - want.real()) < 1e-12);
  CHECK(std::abs(got.x - want.imag()) < 1e-12);

  // sin^2 + cos^2 = 1 as star-series in one slice
  PowerSeries s = transcend(Transcendental::sin, PowerSeries::monomial(1, w), 30);
  PowerSeries c = transcend(Transcendental::cos, PowerSeries::monomial(1, w), 30);
  PowerSeries unit = star_mul(s, s, 30) + star_mul(c, c, 30);
  CHECK(abs(unit.coeff(0) - Quaternion::one()) < 1e-12);
  for (int n = 1; n <= 20; ++n) CHECK(abs(unit.coeff(n)) < 1e-10);
}

TEST_CASE("composition radius stays positive") {
  Rng rng(9);
  for (int t = 0; t < 10; ++t) {
    PowerSeries f = random_series(rng, 10);
    std::vector<Quaternion> wc(11);
    for (size_t n = 1; n < wc.size(); ++n) wc[n] = rng.quaternion(-0.4, 0.4);
    PowerSeries w(std::move(wc));
    PowerSeries comp = bullet_compose(f, w, 64);
    RadiusEstimate r = radius(comp);
    CHECK((r.infinite || r.radius > 0.05));
  }
}

TEST_CASE("valuation and zero series sentinel") {
  PowerSeries z = PowerSeries::zero(5);
  CHECK(z.is_zero());
  CHECK(z.valuation() == 6);  // N+1 sentinel
  PowerSeries m = PowerSeries::monomial(3, Quaternion::one());
  CHECK(m.valuation() == 3);
  CHECK(!m.is_zero());
}
