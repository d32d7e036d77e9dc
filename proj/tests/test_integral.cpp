#include <doctest.h>

#include "slicereg/evaluation.hpp"
#include "slicereg/integral.hpp"
#include "slicereg/rng.hpp"

using namespace slicereg;

TEST_CASE("contour spec invariants") {
  CHECK_THROWS_AS(ContourSpec::make(ImaginaryUnit::i(), 1.0, 100), Error);  // not a power of two
  CHECK_THROWS_AS(ContourSpec::make(ImaginaryUnit::i(), 1.0, 32), Error);   // too few
  CHECK_THROWS_AS(ContourSpec::make(ImaginaryUnit::i(), -1.0, 128), Error);
  ContourSpec C = ContourSpec::make(ImaginaryUnit::j(), 2.0, 128);
  CHECK(C.nodes == 128);
}

TEST_CASE("cauchy formula values") {
  ContourSpec C = ContourSpec::make(ImaginaryUnit::i(), 2.0, 128);
  PowerSeries q2 = PowerSeries::monomial(2, Quaternion::one());
  Quaternion q{0.5, 0.5, 0, 0};
  CHECK(abs(cauchy_eval(q2, q, 0, C) - q * q) <= 1e-10);

  // constants reproduce exactly
  PowerSeries c = PowerSeries::constant(Quaternion{1, -2, 0.5, 0});
  Quaternion interior{0.3, -0.4, 0.2, 0.1};
  CHECK(abs(cauchy_eval(c, interior, 0, C) - c.coeff(0)) <= 1e-12);

  // derivative: f = q^2 -> 2q; second derivative -> 2
  CHECK(abs(cauchy_eval(q2, q, 1, C) - 2.0 * q) <= 1e-8);
  CHECK(abs(cauchy_eval(q2, q, 2, C) - Quaternion{2, 0, 0, 0}) <= 1e-8);

  // derivative of exp is exp
  PowerSeries e = exp_series(64);
  CHECK(abs(cauchy_eval(e, q, 1, C) - qexp(q)) <= 1e-8);

  // series derivative cross-check (the derivative operation itself)
  PowerSeries f({Quaternion{0.2, 1, 0, 0}, Quaternion{1, 0, -1, 0}, Quaternion{0, 0.5, 0, 1},
                 Quaternion{0.3, 0, 0, 0}});
  CHECK(abs(cauchy_eval(f, q, 1, C) - eval(derivative(f), q)) <= 1e-8);

  // guards
  CHECK_THROWS_AS(cauchy_eval(q2, Quaternion{2, 0, 0, 0}, 0, C), Error);   // on contour
  CHECK_THROWS_AS(cauchy_eval(q2, Quaternion{3, 0, 0, 0}, 0, C), Error);   // outside
  CHECK_THROWS_AS(cauchy_eval(q2, q, 99, C), Error);                        // order cap
}

TEST_CASE("slice independence") {
  PowerSeries f({Quaternion{0.3, 0.2, -0.1, 0}, Quaternion{1, -1, 0.5, 0}, Quaternion{0, 0, 1, 0},
                 Quaternion{0.7, 0, 0, -0.4}});
  Quaternion q{0.5, 0.5, 0, 0};
  Quaternion v1 = cauchy_eval(f, q, 0, ContourSpec::make(ImaginaryUnit::i(), 2.0, 256));
  Quaternion v2 = cauchy_eval(f, q, 0, ContourSpec::make(ImaginaryUnit::j(), 2.0, 256));
  Quaternion v3 = cauchy_eval(f, q, 0,
                              ContourSpec::make(ImaginaryUnit(Quaternion{0, 1, 1, 0}), 2.0, 256));
  CHECK(abs(v1 - v2) <= 1e-9);
  CHECK(abs(v1 - v3) <= 1e-9);
}

TEST_CASE("quadrature doubling converges fast") {
  // fixed-node trapezoid error drops by >= 10x per doubling until the floor
  PowerSeries e = exp_series(48);
  Quaternion q{0.4, 0.7, 0, 0};
  Quaternion truth = qexp(q);
  double prev_err = -1;
  for (int nodes : {8, 16, 32, 64}) {
    // hand-rolled single-resolution quadrature of the Cauchy integrand
    Quaternion acc{};
    for (int k = 0; k < nodes; ++k) {
      double t = 6.283185307179586 * k / nodes;
      Quaternion e_it = std::cos(t) * Quaternion::one() + std::sin(t) * Quaternion::i();
      Quaternion s = 2.0 * e_it;
      Quaternion denom = q * q - 2.0 * real(s) * q + norm_sq(s) * Quaternion::one();
      acc += -1.0 * (inv(denom) * (q - conj(s))) * (2.0 * e_it) * eval(e, s);
    }
    double err = abs(acc / nodes - truth);
    if (prev_err > 1e-13) CHECK(err <= prev_err / 10.0);
    prev_err = err;
  }
}

TEST_CASE("cauchy estimates") {
  // monomial: equality at q = 0
  PowerSeries m = PowerSeries::monomial(3, Quaternion::one());
  auto rows = cauchy_estimate_check(m, Quaternion::zero(), 2.0, 3);
  for (const auto& r : rows) CHECK(r.pass);
  CHECK(rows[3].slack >= 0);

  // exp at several radii
  for (double R : {1.0, 2.0, 4.0}) {
    auto re = cauchy_estimate_check(exp_series(96), Quaternion::zero(), R, 5);
    for (const auto& r : re) CHECK(r.pass);
  }

  // negative control: corrupted derivative magnitude flags a failure
  std::vector<double> mags{1.0, 1e9};
  auto bad = cauchy_estimate_check_with(mags, exp_series(64), Quaternion::zero(), 1.0);
  CHECK(!bad[1].pass);
}

TEST_CASE("schwarz formula") {
  ContourSpec C = ContourSpec::make(ImaginaryUnit::i(), 2.0, 1024);
  // f = 1
  Quaternion inner{0.3, 0.2, 0.4, 0.1};
  CHECK(abs(schwarz_eval(PowerSeries::constant(Quaternion::one()), C, inner) - Quaternion::one()) <=
        1e-10);
  // f = q
  CHECK(abs(schwarz_eval(PowerSeries::variable(), C, inner) - inner) <= 1e-8);
  // f(0) not real is rejected
  CHECK_THROWS_AS(schwarz_eval(PowerSeries::constant(Quaternion::i()), C, inner), Error);
}

TEST_CASE("poisson kernel") {
  CHECK(poisson(0, 1.234) == doctest::Approx(1.0));
  CHECK_THROWS_AS(poisson(1.0, 0.0), Error);
  // mean value over the circle
  int N = 4096;
  double mean = 0;
  for (int k = 0; k < N; ++k) mean += poisson(0.7, 6.283185307179586 * k / N);
  CHECK(mean / N == doctest::Approx(1.0).epsilon(1e-10));
  // nonnegative, and matches the 200-term series at r = 0.9
  for (double th = 0; th < 6.3; th += 0.37) {
    double p = poisson(0.9, th);
    CHECK(p >= 0);
    double series = 1.0;
    for (int n = 1; n <= 200; ++n) series += 2.0 * std::pow(0.9, n) * std::cos(n * th);
    CHECK(p == doctest::Approx(series).epsilon(1e-8));
  }
  // harmonic interpolation of alpha(x, y) = x on the unit circle
  int M = 2048;
  double r = 0.6, theta = 0.8;
  double acc = 0;
  for (int k = 0; k < M; ++k) {
    double phi = 6.283185307179586 * k / M;
    acc += poisson(r, theta - phi) * std::cos(phi);
  }
  CHECK(acc / M == doctest::Approx(r * std::cos(theta)).epsilon(1e-8));
}

TEST_CASE("borel transform and inversion") {
  // e^{2q}: a_k = 2^k, sigma = 2, phi(x) = 1/(x-2) on the real axis
  std::vector<Quaternion> c(131);
  double lg = 0;
  c[0] = Quaternion::one();
  for (int k = 1; k <= 130; ++k) {
    lg += std::log(2.0) - std::log(static_cast<double>(k));
    c[k] = Quaternion{std::exp(lg), 0, 0, 0};
  }
  PowerSeries f(std::move(c));
  BorelSeries phi = borel(f);
  CHECK(phi.sigma == doctest::Approx(2.0).epsilon(0.01));
  for (double x : {3.0, 4.0, 6.0})
    CHECK(abs(phi.eval(Quaternion{x, 0, 0, 0}) - Quaternion{1.0 / (x - 2.0), 0, 0, 0}) <= 1e-9);

  // polynomial: sigma = 0 and a finite reciprocal-power sum
  PowerSeries poly({Quaternion::one(), Quaternion{0, 1, 0, 0}, Quaternion{2, 0, 0, 0}});
  BorelSeries pb = borel(poly);
  CHECK(pb.sigma <= 2.0 + 1e-9);  // (2 * 2!)^{1/2}; finitely many coefficients
  CHECK(pb.coeffs.size() == 3);

  // sin: sigma = 1
  std::vector<Quaternion> sc(201);
  lg = 0;
  for (int m = 0; 2 * m + 1 <= 200; ++m) {
    if (m > 0) lg -= std::log(2.0 * m) + std::log(2.0 * m + 1);
    sc[2 * m + 1] = Quaternion{(m % 2 ? -1.0 : 1.0) * std::exp(lg), 0, 0, 0};
  }
  CHECK(borel(PowerSeries(std::move(sc))).sigma == doctest::Approx(1.0).epsilon(0.05));

  // inversion round trip
  ContourSpec C = ContourSpec::make(ImaginaryUnit::i(), 3.0, 512);
  Quaternion p{0.4, 0, 0.3, 0};
  CHECK(abs(borel_invert(phi, p, C) - qexp(2.0 * p)) <= 1e-7);

  // phi = 1/q gives the constant 1
  BorelSeries one{{Quaternion::one()}, 0.0};
  CHECK(abs(borel_invert(one, Quaternion{0.2, 0.1, 0, 0},
                          ContourSpec::make(ImaginaryUnit::i(), 1.5, 256)) -
            Quaternion::one()) <= 1e-9);

  // contour inside the singularities is rejected
  CHECK_THROWS_AS(borel_invert(phi, p, ContourSpec::make(ImaginaryUnit::i(), 1.0, 256)), Error);

  // round trip across random interior points
  Rng rng(13);
  for (int t = 0; t < 10; ++t) {
    Quaternion pt = rng.quaternion(-0.5, 0.5);
    CHECK(abs(borel_invert(phi, pt, C) - qexp(2.0 * pt)) <= 1e-7);
  }
}

TEST_CASE("exp_qw extension") {
  // slice values match the complex exponential; real w reduces to qexp(q w)
  Rng rng(17);
  for (int t = 0; t < 50; ++t) {
    Quaternion w = rng.quaternion(-1, 1);
    Quaternion q = rng.quaternion(-1, 1);
    double x = real(q);
    // against a truncated star-exponential series of q w built by transcend
    PowerSeries ew = transcend(Transcendental::exp, PowerSeries::monomial(1, w), 60);
    CHECK(abs(exp_qw(q, w) - eval(ew, q)) <= 1e-10 * std::max(1.0, abs(exp_qw(q, w))));
    (void)x;
  }
  Quaternion wr{1.3, 0, 0, 0};
  Quaternion q{0.2, 0.5, -0.4, 0.1};
  CHECK(abs(exp_qw(q, wr) - qexp(q * 1.3)) <= 1e-12);
}
