#include <doctest.h>

#include "slicereg/evaluation.hpp"
#include "slicereg/rng.hpp"
#include "slicereg/zeros.hpp"

using namespace slicereg;

namespace {

PowerSeries sphere_poly(double x, double y) {
  return PowerSeries({Quaternion{x * x + y * y, 0, 0, 0}, Quaternion{-2 * x, 0, 0, 0},
                      Quaternion::one()});
}

}  // namespace

TEST_CASE("find_zeros on the classical examples") {
  // q^2 + 1: the unit sphere
  ZeroList z1 = find_zeros(sphere_poly(0, 1));
  REQUIRE(z1.records.size() == 1);
  CHECK(z1.records[0].kind == ZeroRecord::Kind::sphere);
  CHECK(z1.records[0].x == doctest::Approx(0.0));
  CHECK(z1.records[0].y == doctest::Approx(1.0));
  CHECK(z1.records[0].multiplicity == 1);

  // (q-i)*(q-j): one isolated zero at i with multiplicity 2
  PowerSeries p2 = star_mul(PowerSeries({-Quaternion::i(), Quaternion::one()}),
                            PowerSeries({-Quaternion::j(), Quaternion::one()}));
  ZeroList z2 = find_zeros(p2);
  REQUIRE(z2.records.size() == 1);
  CHECK(z2.records[0].kind == ZeroRecord::Kind::isolated);
  CHECK(z2.records[0].multiplicity == 2);
  CHECK(abs(z2.records[0].point - Quaternion::i()) < 1e-10);

  // (q-i)*(q-j)(q^2+1)^3: sphere of multiplicity 3 and i with total 5
  PowerSeries p3 = p2;
  for (int k = 0; k < 3; ++k) p3 = star_mul(p3, sphere_poly(0, 1));
  ZeroList z3 = find_zeros(p3);
  REQUIRE(z3.records.size() == 2);
  int sphere_mult = 0, iso_mult = 0;
  Quaternion pt{};
  for (const auto& r : z3.records) {
    if (r.kind == ZeroRecord::Kind::sphere) sphere_mult = r.multiplicity;
    if (r.kind == ZeroRecord::Kind::isolated) {
      iso_mult = r.multiplicity;
      pt = r.point;
    }
  }
  CHECK(sphere_mult == 3);
  CHECK(iso_mult == 2);
  CHECK(abs(pt - Quaternion::i()) < 1e-8);
  CHECK(z3.total_multiplicity_at(Quaternion::i()) == 5);
  CHECK(z3.total_count() == 8);  // degree accounting
}

TEST_CASE("locate_on_sphere") {
  // q^2+1 vanishes on the whole unit sphere
  SphereLocation l1 = locate_on_sphere(sphere_poly(0, 1), 0, 1);
  CHECK(l1.kind == SphereLocation::Kind::whole_sphere);

  // q - i: a = -i, b = 1 -> point i
  PowerSeries qi({-Quaternion::i(), Quaternion::one()});
  SphereLocation l2 = locate_on_sphere(qi, 0, 1);
  CHECK(l2.kind == SphereLocation::Kind::point);
  CHECK(abs(l2.point - Quaternion::i()) < 1e-12);

  // q - 2 has nothing on the unit sphere
  PowerSeries q2({Quaternion{-2, 0, 0, 0}, Quaternion::one()});
  CHECK(locate_on_sphere(q2, 0, 1).kind == SphereLocation::Kind::none);

  // two distinct units vanishing forces the whole sphere (companion check)
  PowerSeries comp = star_mul(PowerSeries({-Quaternion::i(), Quaternion::one()}),
                              PowerSeries({Quaternion::i(), Quaternion::one()}));
  CHECK(abs(eval(comp, Quaternion::i())) < 1e-14);
  CHECK(abs(eval(comp, Quaternion::j())) < 1e-14);
  CHECK(locate_on_sphere(comp, 0, 1).kind == SphereLocation::Kind::whole_sphere);
}

TEST_CASE("deflate") {
  // q^2+1 deflated at the left factor (q-i) leaves q+i
  PowerSeries s = sphere_poly(0, 1);
  PowerSeries g = deflate(s, ZeroRecord::isolated(Quaternion::i()));
  CHECK(abs(g.coeff(0) - Quaternion::i()) < 1e-14);
  CHECK(abs(g.coeff(1) - Quaternion::one()) < 1e-14);

  // sphere deflation by the real quadratic
  PowerSeries prod = star_mul(sphere_poly(0.5, 1.2), PowerSeries({-Quaternion::k(), Quaternion::one()}));
  PowerSeries cof = deflate(prod, ZeroRecord::sphere(0.5, 1.2));
  CHECK(cof.truncation_order() == 1);
  CHECK(abs(cof.coeff(0) + Quaternion::k()) < 1e-11);

  // wrong zero is rejected
  CHECK_THROWS_AS(deflate(s, ZeroRecord::isolated(2.0 * Quaternion::i())), Error);

  // constructed product round trips
  Rng rng(4);
  for (int t = 0; t < 30; ++t) {
    Quaternion root = rng.quaternion(-1.5, 1.5);
    PowerSeries cofactor({rng.quaternion(-1, 1), rng.quaternion(-1, 1), Quaternion::one()});
    PowerSeries P = star_mul(PowerSeries({-root, Quaternion::one()}), cofactor);
    PowerSeries back = deflate(P, ZeroRecord::isolated(abs_imag(root) > 1e-6 ? root : root + Quaternion::i() * 0.5));
    // deflation of an actual left zero reproduces the cofactor
    if (abs_imag(root) > 1e-6) {
      double worst = 0;
      for (int n = 0; n <= 2; ++n) worst = std::max(worst, abs(back.coeff(n) - cofactor.coeff(n)));
      CHECK(worst <= 1e-11 * std::max(1.0, cofactor.scale()));
    }
  }
}

TEST_CASE("zeros of f and f^c pair up") {
  Rng rng(5);
  for (int t = 0; t < 15; ++t) {
    PowerSeries P = PowerSeries::constant(Quaternion::one());
    int deg = 0;
    std::vector<std::pair<double, double>> placed;
    while (deg < 6) {
      double x = rng.uniform(-2, 2), y = rng.uniform(0.5, 2);
      if (std::hypot(x, y) < 0.5 || std::hypot(x, y) > 3) continue;
      bool clash = false;
      for (auto [px, py] : placed)
        if (std::hypot(x - px, y - py) < 0.25) clash = true;
      if (clash) continue;
      placed.push_back({x, y});
      if (rng.uniform() < 0.5) {
        P = star_mul(P, sphere_poly(x, y));
        deg += 2;
      } else {
        Quaternion pt = Quaternion{x, 0, 0, 0} + y * rng.unit().value();
        Quaternion v = eval(P, pt);
        if (abs(v) < 1e-9) continue;
        P = star_mul(P, PowerSeries({-conjugate_by(v, pt), Quaternion::one()}));
        deg += 1;
      }
    }
    ZeroList zf = find_zeros(P);
    ZeroList zc = find_zeros(conjugate(P));
    REQUIRE(zf.records.size() == zc.records.size());
    // spheres identical; isolated zeros on the same spheres
    for (size_t i = 0; i < zf.records.size(); ++i) {
      const auto& a = zf.records[i];
      const auto& b = zc.records[i];
      CHECK(a.kind == b.kind);
      CHECK(a.multiplicity == b.multiplicity);
      CHECK(std::abs(a.x - b.x) < 1e-7);
      CHECK(std::abs(a.y - b.y) < 1e-7);
    }
    // f^s vanishes on a sphere iff f has a zero there
    PowerSeries fs = symmetrize(P, 2 * P.truncation_order());
    for (const auto& r : zf.records) {
      SphereLocation loc = locate_on_sphere(fs, r.kind == ZeroRecord::Kind::isolated ? real(r.point) : r.x,
                                            r.kind == ZeroRecord::Kind::isolated ? abs_imag(r.point)
                                                                                 : std::max(r.y, 0.0));
      if (r.kind != ZeroRecord::Kind::real)
        CHECK(loc.kind == SphereLocation::Kind::whole_sphere);
    }
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(find_zeros(PowerSeries::zero(4)), Error);
  ZeroList empty;
  std::vector<double> grid{1.0, 2.0};
  CHECK_THROWS_AS(zero_statistics(empty, grid), Error);
}

TEST_CASE("zero statistics") {
  // one sphere of modulus 1: n(2) = 2
  ZeroList z;
  z.records.push_back(ZeroRecord::sphere(0, 1, 1));
  std::vector<double> grid{0.5, 2.0};
  ZeroStatistics st = zero_statistics(z, grid);
  CHECK(st.counting[0] == 0);
  CHECK(st.counting[1] == 2);

  // |gamma_n| = n: exponent 1; |gamma_n| = sqrt(n): exponent 2
  ZeroList lin, sq;
  for (int n = 1; n <= 10000; ++n) {
    lin.records.push_back(ZeroRecord::real_root(n));
    sq.records.push_back(ZeroRecord::real_root(std::sqrt(n)));
  }
  std::vector<double> g1, g2;
  for (int k = 1; k <= 64; ++k) {
    g1.push_back(10000.0 * k / 64);
    g2.push_back(100.0 * k / 64);
  }
  CHECK(zero_statistics(lin, g1).convergence_exponent == doctest::Approx(1.0).epsilon(0.05));
  ZeroStatistics s2 = zero_statistics(sq, g2);
  CHECK(s2.convergence_exponent == doctest::Approx(2.0).epsilon(0.05));
  // n(r) ~ r^2 for the sqrt spacing
  CHECK(s2.counting.back() == doctest::Approx(10000.0).epsilon(0.01));
}

TEST_CASE("canonical ordering keeps spheres first at ties") {
  ZeroList z;
  z.records.push_back(ZeroRecord::isolated(Quaternion::i()));
  z.records.push_back(ZeroRecord::sphere(0, 1, 1));
  z.records.push_back(ZeroRecord::real_root(0.5));
  z.sort_canonical();
  CHECK(z.records[0].kind == ZeroRecord::Kind::real);
  CHECK(z.records[1].kind == ZeroRecord::Kind::sphere);
  CHECK(z.records[2].kind == ZeroRecord::Kind::isolated);
}
