#include "slicereg/factorization.hpp"

#include <algorithm>
#include <cmath>

#include "slicereg/config.hpp"

namespace slicereg {

namespace {

double rule_alpha_guard(double alpha) {
  if (!(alpha > 0)) fail(Errc::model_invalid, "power-law modulus needs alpha > 0");
  return alpha;
}

}  // namespace

double ModulusRule::modulus(int n) const {
  switch (kind) {
    case Kind::geometric: return c * std::pow(param, n);
    case Kind::power_law: return c * std::pow(static_cast<double>(n), param);
    case Kind::logarithmic: return c * std::log(static_cast<double>(n) + 1.0);
  }
  return 0;
}

FactorForm elementary_factor(const Quaternion& a, int p) {
  if (abs(a) < config().eps_rel) fail(Errc::zero_root, "elementary factor needs a != 0");
  FactorForm f;
  f.factors.push_back(ElementaryLinear{a});
  if (p > 0) f.factors.push_back(ElementaryExpFactor{a, p});
  return f;
}

WeierstrassCertificate certify_weierstrass(const ModulusRule& rule, const PRule& p, double radius,
                                           int built) {
  WeierstrassCertificate cert;
  cert.factors_built = built;
  double sum = 0, tail = 0;
  if (rule.kind == ModulusRule::Kind::logarithmic) {
    cert.certified = false;
    return cert;
  }
  if (rule.kind == ModulusRule::Kind::geometric && !(rule.param > 1.0)) {
    cert.certified = false;
    return cert;
  }
  if (rule.kind == ModulusRule::Kind::power_law && !(rule.param > 0)) {
    cert.certified = false;
    return cert;
  }

  // p constant: closed forms; p_n = n: terms decay superexponentially once
  // |a_n| > 2 radius, with a geometric tail bound from there on.
  const int probe = 4096;
  int n0 = -1;
  for (int n = 1; n <= probe; ++n) {
    double an = rule.modulus(n);
    if (an <= 0) { cert.certified = false; return cert; }
    double ratio = radius / an;
    double e = std::pow(ratio, p.at(n) + 1);
    sum += e;
    if (n > built) tail += e / std::max(1e-300, (p.at(n) + 1) * (1.0 - std::min(ratio, 0.999999)));
    if (ratio < 0.5 && n0 < 0) n0 = n;
  }
  if (p.kind == PRule::Kind::constant) {
    if (rule.kind == ModulusRule::Kind::geometric) {
      // sum (r/(c g^n))^{p+1} = (r/c)^{p+1} sum g^{-n(p+1)}: geometric, finite
      cert.certified = true;
    } else {
      // sum n^{-alpha (p+1)} finite iff alpha (p+1) > 1
      cert.certified = rule.param * (p.value + 1) > 1.0;
    }
  } else {
    // p_n = n: terms (r/|a_n|)^{n+1} < 2^{-(n+1)} beyond n0; always certified
    // for diverging modulus rules
    cert.certified = n0 > 0;
  }
  if (!cert.certified) {
    cert.condition_sum = std::numeric_limits<double>::infinity();
    return cert;
  }
  cert.condition_sum = sum;
  cert.tail_factor_bound = tail;
  return cert;
}

FactorForm weierstrass_product(const ZeroList& zeros, const PRule& p, double radius,
                               WeierstrassCertificate* cert) {
  FactorForm form;
  double condition_sum = 0;
  int n = 0, built = 0;

  ZeroList ordered = zeros;
  ordered.sort_canonical();
  for (const auto& rec : ordered.records) {
    Quaternion delta = rec.point;  // corrected representative, per record
    bool delta_set = false;
    for (int m = 0; m < rec.multiplicity; ++m) {
      ++n;
      int pn = p.at(n);
      if (rec.kind == ZeroRecord::Kind::sphere) {
        ++n;  // a sphere is the pair beta, conj(beta)
        Quaternion beta{rec.x, rec.y, 0, 0};
        form.factors.push_back(ElementarySpherical{beta});
        if (pn > 0) form.factors.push_back(SphericalElementaryExp{beta, pn});
        condition_sum += 2.0 * std::pow(radius / abs(beta), pn + 1);
        built += 2;
      } else if (rec.kind == ZeroRecord::Kind::real) {
        if (std::abs(rec.x) < config().eps_rel)
          fail(Errc::zero_root, "zero at the origin: factor it as q^m first");
        form.factors.push_back(ElementaryLinear{Quaternion{rec.x, 0, 0, 0}});
        if (pn > 0) form.factors.push_back(ElementaryExpFactor{Quaternion{rec.x, 0, 0, 0}, pn});
        condition_sum += std::pow(radius / std::abs(rec.x), pn + 1);
        built += 1;
      } else {
        // first copy: rotate the representative through the value of the
        // running product so the zero lands exactly at the listed point;
        // further copies reuse it (the prefix already vanishes there)
        if (!delta_set) {
          Quaternion v = eval_factored(form, rec.point);
          if (abs(v) > config().eps_rel) delta = conjugate_by(v, rec.point);
          delta_set = true;
        }
        form.factors.push_back(ElementaryLinear{delta});
        if (pn > 0) form.factors.push_back(ElementaryExpFactor{delta, pn});
        condition_sum += std::pow(radius / abs(delta), pn + 1);
        built += 1;
      }
    }
  }
  if (cert) {
    cert->certified = true;
    cert->condition_sum = condition_sum;
    cert->tail_factor_bound = 0;
    cert->factors_built = built;
  }
  return form;
}

FactorForm weierstrass_product(const ModulusRule& rule, const PRule& p, double radius, int count,
                               WeierstrassCertificate* cert) {
  WeierstrassCertificate c = certify_weierstrass(rule, p, radius, count);
  if (!c.certified)
    fail(Errc::convergence_not_certified, "condition sum diverges for the supplied rule");
  ZeroList zl;
  for (int n = 1; n <= count; ++n) zl.records.push_back(ZeroRecord::real_root(rule.modulus(n)));
  FactorForm form = weierstrass_product(zl, p, radius, nullptr);
  if (cert) *cert = c;
  return form;
}

GenusResult genus(const ModulusRule& rule) {
  switch (rule.kind) {
    case ModulusRule::Kind::logarithmic: return {0, true};
    case ModulusRule::Kind::geometric:
      if (!(rule.param > 1.0)) fail(Errc::model_invalid, "geometric modulus needs ratio > 1");
      return {0, false};  // sum g^{-lambda n} converges for every lambda > 0
    case ModulusRule::Kind::power_law: {
      double alpha = rule_alpha_guard(rule.param);
      // smallest p with (p+1) alpha > 1
      int p = 0;
      while ((p + 1) * alpha <= 1.0) ++p;
      return {p, false};
    }
  }
  return {0, true};
}

FactorForm blaschke_factor(const Quaternion& a, BlaschkeKind kind) {
  double m = abs(a);
  if (m < config().eps_rel) fail(Errc::zero_root, "Blaschke factor needs a != 0");
  if (m >= 1.0) fail(Errc::root_outside_ball, "Blaschke factor needs |a| < 1");
  FactorForm f;
  if (kind == BlaschkeKind::point)
    f.factors.push_back(BlaschkeLinear{a});
  else
    f.factors.push_back(BlaschkeSpherical{a});
  return f;
}

FactorForm blaschke_product(const BlaschkeZeroSpec& spec, BlaschkeCertificate* cert) {
  double csum = 0;
  FactorForm form;
  for (const auto& [c, m] : spec.spheres) {
    double mc = abs(c);
    if (mc < config().eps_rel) fail(Errc::zero_root, "Blaschke sphere at 0");
    if (mc >= 1.0) fail(Errc::root_outside_ball, "Blaschke sphere outside the unit ball");
    csum += 2.0 * m * (1.0 - mc);
    for (int k = 0; k < m; ++k) form.factors.push_back(BlaschkeSpherical{c});
  }
  auto points = spec.points;
  std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) {
    return abs(a.first) < abs(b.first);
  });
  for (const auto& [a, n] : points) {
    double ma = abs(a);
    if (ma < config().eps_rel) fail(Errc::zero_root, "Blaschke point at 0");
    if (ma >= 1.0) fail(Errc::root_outside_ball, "Blaschke point outside the unit ball");
    csum += n * (1.0 - ma);
    Quaternion alpha = a;
    Quaternion v = eval_factored(form, a);
    if (abs(v) > config().eps_rel) alpha = conjugate_by(v, a);
    for (int k = 0; k < n; ++k) form.factors.push_back(BlaschkeLinear{alpha});
  }
  if (cert) {
    cert->certified = true;
    cert->condition_sum = csum;
  }
  return form;
}

BlaschkeCertificate blaschke_condition(const BlaschkeRule& rule) {
  BlaschkeCertificate out;
  if (rule.c <= 0) fail(Errc::model_invalid, "rule needs c > 0");
  if (rule.kind == BlaschkeRule::Kind::geometric) {
    if (!(rule.param > 0 && rule.param < 1)) fail(Errc::model_invalid, "geometric ratio in (0,1)");
    out.certified = true;
    out.condition_sum = rule.c * rule.param / (1.0 - rule.param);
    return out;
  }
  // power: sum c j^{-alpha} converges iff alpha > 1
  if (rule.param <= 1.0) {
    out.certified = false;
    out.condition_sum = std::numeric_limits<double>::infinity();
    return out;
  }
  double s = 0;
  const int N = 100000;
  for (int j = 1; j <= N; ++j) s += rule.c * std::pow(j, -rule.param);
  s += rule.c * std::pow(N, 1.0 - rule.param) / (rule.param - 1.0);  // integral tail
  out.certified = true;
  out.condition_sum = s;
  return out;
}

ProductConvergenceReport quaternion_product_convergence(std::span<const Quaternion> a) {
  ProductConvergenceReport rep;
  Quaternion p = Quaternion::one();
  double ps = 1.0, abs_sum = 0;
  bool log_ok = true;
  double log_sum = 0;
  for (const Quaternion& an : a) {
    p = p * (Quaternion::one() + an);
    ps *= 1.0 + abs(an);
    abs_sum += abs(an);
    rep.partial_products.push_back(p);
    rep.star_partials.push_back(ps);
    if (abs(p - Quaternion::one()) > ps - 1.0 + 1e-12 * ps) rep.bound_term_ok = false;
    if (ps > std::exp(abs_sum) * (1.0 + 1e-12)) rep.bound_exp_ok = false;
    Quaternion u = Quaternion::one() + an;
    double im = abs_imag(u);
    if (abs(u) < config().eps_rel || (im <= config().eps_rel && real(u) < 0))
      log_ok = false;
    else
      log_sum += abs(qlog(u));
  }
  rep.abs_sum = abs_sum;
  rep.log_criterion = log_ok && std::isfinite(log_sum);
  // Cauchy verdict on the partial sums of |a_n|: negligible movement over
  // the last eighth of the sequence
  size_t n = a.size();
  if (n == 0) {
    rep.convergent = true;
    return rep;
  }
  double tail = 0;
  for (size_t k = n - std::max<size_t>(1, n / 8); k < n; ++k) tail += abs(a[k]);
  rep.convergent = tail <= 1e-6 * (1.0 + abs_sum) || abs_sum == 0.0;
  return rep;
}

}  // namespace slicereg
