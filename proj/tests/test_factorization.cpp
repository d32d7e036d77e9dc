#include <doctest.h>

#include <complex>

#include "slicereg/evaluation.hpp"
#include "slicereg/factorization.hpp"
#include "slicereg/rng.hpp"
#include "slicereg/zeros.hpp"

using namespace slicereg;

TEST_CASE("elementary factor") {
  Quaternion a{1.5, 0.5, 0, 0};
  // p = 0: just 1 - q a^{-1}
  FactorForm f0 = elementary_factor(a, 0);
  CHECK(abs(eval_factored(f0, Quaternion::zero()) - Quaternion::one()) < 1e-15);
  CHECK(abs(eval_factored(f0, a)) < 1e-13);

  FactorForm f3 = elementary_factor(a, 3);
  CHECK(abs(eval_factored(f3, a)) < 1e-11);

  // slice restriction matches the classical complex elementary factor
  std::complex<double> ac{1.5, 0.5};
  for (double th = 0.1; th < 6.2; th += 0.7) {
    std::complex<double> z = std::polar(1.2, th);
    std::complex<double> w = z / ac;
    std::complex<double> want = (1.0 - w) * std::exp(w + w * w / 2.0 + w * w * w / 3.0);
    Quaternion q{z.real(), z.imag(), 0, 0};
    Quaternion got = eval_factored(f3, q);
    CHECK(std::abs(got.w - want.real()) <= 1e-10 * (1 + std::abs(want)));
    CHECK(std::abs(got.x - want.imag()) <= 1e-10 * (1 + std::abs(want)));
  }
  CHECK_THROWS_AS(elementary_factor(Quaternion::zero(), 1), Error);
}

TEST_CASE("weierstrass certification") {
  // |a_n| = 2^n with p_n = 0 certifies on r = 1 with a small tail
  ModulusRule rule{ModulusRule::Kind::geometric, 1.0, 2.0};
  WeierstrassCertificate cert = certify_weierstrass(rule, PRule::constant(0), 1.0, 8);
  CHECK(cert.certified);
  CHECK(cert.condition_sum < 2.0);   // sum (1/2^n) < 1 plus rounding
  CHECK(cert.tail_factor_bound < 0.02);  // <= sum_{n>8} 2 * 2^{-n}

  // power law |a_n| = n^alpha with constant p: alpha(p+1) > 1 required
  CHECK(certify_weierstrass(ModulusRule{ModulusRule::Kind::power_law, 1.0, 0.4},
                            PRule::constant(0), 1.0, 4)
            .certified == false);
  CHECK(certify_weierstrass(ModulusRule{ModulusRule::Kind::power_law, 1.0, 0.4},
                            PRule::constant(2), 1.0, 4)
            .certified);
  // p_n = n works whenever the moduli diverge
  CHECK(certify_weierstrass(ModulusRule{ModulusRule::Kind::power_law, 1.0, 0.4}, PRule::linear(),
                            1.0, 4)
            .certified);
  CHECK(certify_weierstrass(ModulusRule{ModulusRule::Kind::logarithmic, 1.0, 1.0}, PRule::linear(),
                            1.0, 4)
            .certified == false);
}

TEST_CASE("weierstrass product vanishes at prescribed zeros") {
  ZeroList z;
  z.records.push_back(ZeroRecord::real_root(2.0));
  z.records.push_back(ZeroRecord::sphere(0.0, 1.5, 1));
  Quaternion iso = Quaternion{0.5, 0, 0, 0} + 1.8 * ImaginaryUnit(Quaternion{0, 1, 2, 0}).value();
  z.records.push_back(ZeroRecord::isolated(iso));

  WeierstrassCertificate cert;
  FactorForm form = weierstrass_product(z, PRule::linear(), 1.0, &cert);
  CHECK(cert.certified);
  CHECK(abs(eval_factored(form, Quaternion{2, 0, 0, 0})) < 1e-8);
  CHECK(abs(eval_factored(form, 1.5 * Quaternion::j())) < 1e-8);
  CHECK(abs(eval_factored(form, iso)) < 1e-8);
  // nonvanishing anywhere else on a probe grid
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    Quaternion p = rng.quaternion(-1, 1);
    if (abs(eval_factored(form, p)) < 1e-10) {
      bool near_zero = same_sphere(p, iso) || same_sphere(p, Quaternion{2, 0, 0, 0}) ||
                       same_sphere(p, 1.5 * Quaternion::i());
      CHECK(near_zero);
    }
  }

  // spherical pair fold has real coefficients: values on C_I stay in C_I
  FactorForm sphere_only;
  sphere_only.factors.push_back(ElementarySpherical{Quaternion{0, 1.5, 0, 0}});
  sphere_only.factors.push_back(SphericalElementaryExp{Quaternion{0, 1.5, 0, 0}, 2});
  Quaternion val = eval_factored(sphere_only, Quaternion{0.4, 0, 0.9, 0});
  CHECK(std::abs(val.x) < 1e-12);
  CHECK(std::abs(val.z) < 1e-12);
}

TEST_CASE("partial products are uniformly cauchy on the certified radius") {
  // zeros |a_n| = 2^n, p_n = 0: sup_{|q|<=1} |partial_M - partial_N| -> 0
  auto partial = [](int N) {
    FactorForm f;
    for (int n = 1; n <= N; ++n)
      f.factors.push_back(ElementaryLinear{Quaternion{std::pow(2.0, n), 0, 0, 0}});
    return f;
  };
  double prev_gap = 1e300;
  for (int N : {4, 8, 12}) {
    FactorForm a = partial(N), b = partial(N + 4);
    double gap = 0;
    for (int k = 0; k < 64; ++k) {
      double th = 6.283185307179586 * k / 64;
      Quaternion q{std::cos(th), std::sin(th), 0, 0};
      gap = std::max(gap, abs(eval_factored(a, q) - eval_factored(b, q)));
    }
    CHECK(gap < prev_gap);
    prev_gap = gap;
    // analytic tail: sum_{n>N} 2 * 2^{-n} = 2^{-N+1}
    CHECK(gap <= 4.0 * std::pow(2.0, -N));
  }
}

TEST_CASE("genus") {
  CHECK(genus(ModulusRule{ModulusRule::Kind::power_law, 1.0, 2.0}).genus == 0);
  CHECK(genus(ModulusRule{ModulusRule::Kind::power_law, 1.0, 0.5}).genus == 2);
  CHECK(genus(ModulusRule{ModulusRule::Kind::logarithmic, 1.0, 1.0}).infinite);
  CHECK(genus(ModulusRule{ModulusRule::Kind::geometric, 1.0, 2.0}).genus == 0);
  CHECK_THROWS_AS(genus(ModulusRule{ModulusRule::Kind::power_law, 1.0, -1.0}), Error);
}

TEST_CASE("blaschke factor") {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    Quaternion a = rng.quaternion(-0.5, 0.5);
    if (abs(a) < 0.05 || abs(a) > 0.93) continue;
    FactorForm B = blaschke_factor(a, BlaschkeKind::point);
    CHECK(abs(eval_factored(B, a)) < 1e-12);
    // boundary modulus 1, interior strictly below 1
    ImaginaryUnit I = rng.unit();
    for (int k = 0; k < 64; ++k) {
      double th = 6.283185307179586 * k / 64;
      Quaternion q = std::cos(th) * Quaternion::one() + std::sin(th) * I.value();
      CHECK(std::abs(abs(eval_factored(B, q)) - 1.0) < 1e-11);
    }
    for (int k = 0; k < 100; ++k) {
      Quaternion q = rng.uniform(0.05, 0.95) * rng.unit().value();
      CHECK(abs(eval_factored(B, q)) < 1.0);
    }
  }
  CHECK_THROWS_AS(blaschke_factor(Quaternion::zero(), BlaschkeKind::point), Error);
  CHECK_THROWS_AS(blaschke_factor(Quaternion{1.2, 0, 0, 0}, BlaschkeKind::point), Error);

  // spherical factor is intrinsic
  Quaternion c{0.3, 0.4, 0, 0};
  FactorForm Bs = blaschke_factor(c, BlaschkeKind::sphere);
  Quaternion v = eval_factored(Bs, Quaternion{0.2, 0, 0.5, 0});
  CHECK(std::abs(v.x) < 1e-12);
  CHECK(std::abs(v.z) >= 0);  // value sits in the slice of the argument
  CHECK(std::abs(v.y) <= 1.0);
  CHECK(abs(eval_factored(Bs, c)) < 1e-12);
}

TEST_CASE("blaschke product zeros") {
  BlaschkeZeroSpec spec;
  Quaternion a1 = 0.5 * Quaternion::i() + Quaternion{0.2, 0, 0, 0};
  Quaternion a2 = Quaternion{-0.1, 0, 0.6, 0};
  spec.points = {{a1, 1}, {a2, 1}};
  spec.spheres = {{Quaternion{0.0, 0.4, 0, 0}, 1}};
  BlaschkeCertificate cert;
  FactorForm B = blaschke_product(spec, &cert);
  CHECK(cert.certified);
  CHECK(abs(eval_factored(B, a1)) < 1e-11);
  CHECK(abs(eval_factored(B, a2)) < 1e-11);
  CHECK(abs(eval_factored(B, 0.4 * Quaternion::k())) < 1e-11);

  // zeros recovered through the expanded polynomial part: expand and find
  PowerSeries exp_b = expand(B, 40);
  // the expansion is not polynomial; instead verify values on a probe sphere stay below 1
  Rng rng(6);
  for (int k = 0; k < 200; ++k) {
    Quaternion q = rng.uniform(0.05, 0.95) * rng.unit().value();
    CHECK(abs(eval_factored(B, q)) < 1.0 + 1e-12);
  }
  (void)exp_b;

  // empty spec: constant one
  FactorForm empty = blaschke_product(BlaschkeZeroSpec{});
  CHECK(abs(eval_factored(empty, Quaternion{0.3, 0.1, 0, 0}) - Quaternion::one()) < 1e-15);

  // multiplicity two: still only one zero on the sphere, with chain length 2
  BlaschkeZeroSpec multi;
  multi.points = {{a1, 2}};
  FactorForm B2 = blaschke_product(multi);
  CHECK(abs(eval_factored(B2, a1)) < 1e-11);
  CHECK(abs(eval_factored(B2, conj(a1))) > 1e-3);
}

TEST_CASE("blaschke convergence condition") {
  CHECK(blaschke_condition(BlaschkeRule{BlaschkeRule::Kind::geometric, 1.0, 0.5}).certified);
  CHECK(!blaschke_condition(BlaschkeRule{BlaschkeRule::Kind::power, 1.0, 1.0}).certified);
  CHECK(blaschke_condition(BlaschkeRule{BlaschkeRule::Kind::power, 1.0, 2.0}).certified);
  CHECK_THROWS_AS(blaschke_condition(BlaschkeRule{BlaschkeRule::Kind::geometric, -1.0, 0.5}), Error);
}

TEST_CASE("quaternion product convergence") {
  // a_n = 0: product 1
  std::vector<Quaternion> zeros(10, Quaternion::zero());
  ProductConvergenceReport r0 = quaternion_product_convergence(zeros);
  CHECK(r0.convergent);
  CHECK(abs(r0.partial_products.back() - Quaternion::one()) < 1e-15);

  // a_n = i/2^n: absolutely summable, bounds hold at every N
  std::vector<Quaternion> geo;
  for (int n = 1; n <= 40; ++n) geo.push_back(std::pow(0.5, n) * Quaternion::i());
  ProductConvergenceReport r1 = quaternion_product_convergence(geo);
  CHECK(r1.convergent);
  CHECK(r1.bound_term_ok);
  CHECK(r1.bound_exp_ok);
  CHECK(r1.log_criterion);
  CHECK(abs(r1.partial_products.back() - Quaternion::one()) <= std::exp(1.0) - 1.0);

  // random finite sequences satisfy p*_N <= exp(sum |a_n|)
  Rng rng(8);
  for (int t = 0; t < 1000; ++t) {
    std::vector<Quaternion> a;
    int n = 1 + static_cast<int>(rng.uniform() * 6);
    for (int k = 0; k < n; ++k) a.push_back(rng.quaternion(-0.8, 0.8));
    CHECK(quaternion_product_convergence(a).bound_exp_ok);
    CHECK(quaternion_product_convergence(a).bound_term_ok);
  }

  // harmonic-type: not declared convergent
  std::vector<Quaternion> slow;
  for (int n = 1; n <= 400; ++n) slow.push_back((1.0 / n) * Quaternion::j());
  CHECK(!quaternion_product_convergence(slow).convergent);
}

TEST_CASE("factor order sensitivity is stable across runs") {
  // permuted factor order changes values; fixed order is bit-stable
  FactorForm f1, f2;
  Quaternion a{0.4, 0.8, 0, 0}, b{-0.2, 0, 0.9, 0};
  f1.factors = {LinearFactor{a}, LinearFactor{b}};
  f2.factors = {LinearFactor{b}, LinearFactor{a}};
  Quaternion p{0.3, 0.1, 0.2, 0.4};
  Quaternion v1 = eval_factored(f1, p);
  Quaternion v2 = eval_factored(f2, p);
  CHECK(abs(v1 - v2) > 1e-6);  // order matters
  CHECK(eval_factored(f1, p) == v1);  // bit-stable repeat
}

TEST_CASE("blaschke product zero set on the truncated expansion") {
  // both prescribed zeros reappear on the expansion of the product, the
  // sphere as a whole-sphere zero and the point as a located point
  Quaternion a = Quaternion{0.25, 0, 0.45, 0};
  Quaternion c{0.1, 0.4, 0, 0};
  BlaschkeZeroSpec spec;
  spec.points = {{a, 1}};
  spec.spheres = {{c, 1}};
  FactorForm B = blaschke_product(spec);
  PowerSeries expansion = expand(B, 96);
  SphereLocation sphere_loc = locate_on_sphere(expansion, real(c), abs_imag(c));
  CHECK(sphere_loc.kind == SphereLocation::Kind::whole_sphere);
  SphereLocation point_loc = locate_on_sphere(expansion, real(a), abs_imag(a));
  REQUIRE(point_loc.kind == SphereLocation::Kind::point);
  CHECK(abs(point_loc.point - a) <= 1e-8);
}

TEST_CASE("elementary exponential part never vanishes") {
  for (const Quaternion& a : {Quaternion{1.5, 0.5, 0, 0}, Quaternion{-0.7, 0, 1.1, 0.3},
                              Quaternion{2, 0, 0, 0}}) {
    FactorForm tail;
    tail.factors.push_back(ElementaryExpFactor{a, 4});
    Rng rng(31);
    for (int k = 0; k < 200; ++k) {
      Quaternion q = rng.quaternion(-2, 2);
      CHECK(abs(eval_factored(tail, q)) > 0);
    }
  }
}
