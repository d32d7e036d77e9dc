#include "slicereg/quaternion.hpp"

#include <algorithm>
#include <ostream>

#include "slicereg/config.hpp"

namespace slicereg {

Quaternion inv(const Quaternion& q) {
  double n2 = norm_sq(q);
  if (std::sqrt(n2) < config().eps_rel) fail(Errc::zero_division, "inverse of (near-)zero quaternion");
  return conj(q) / n2;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
}

ImaginaryUnit::ImaginaryUnit(const Quaternion& im) {
  double n = abs_imag(im);
  if (n < config().eps_rel || std::abs(im.w) > config().eps_sphere * std::max(1.0, n))
    fail(Errc::invariant_violation, "imaginary unit must be purely imaginary and nonzero");
  u_ = Quaternion{0, im.x / n, im.y / n, im.z / n};
}

ImaginaryUnit orthogonal_unit(const ImaginaryUnit& I) {
  const Quaternion& u = I.value();
  // cross the axis with the basis vector it is least aligned with
  double ax = std::abs(u.x), ay = std::abs(u.y), az = std::abs(u.z);
  Quaternion e;
  if (ax <= ay && ax <= az) e = Quaternion::i();
  else if (ay <= az) e = Quaternion::j();
  else e = Quaternion::k();
  Quaternion v{0, u.y * e.z - u.z * e.y, u.z * e.x - u.x * e.z, u.x * e.y - u.y * e.x};
  return ImaginaryUnit(v);
}

Quaternion PolarForm::reassemble() const { return modulus * qexp(angle * axis.value()); }

ImaginaryUnit axis_of(const Quaternion& q) {
  double n = abs_imag(q);
  if (n < config().eps_rel * std::max(1.0, std::abs(q.w))) return ImaginaryUnit::i();
  return ImaginaryUnit(imag(q));
}

PolarForm polar(const Quaternion& q) {
  double m = abs(q);
  if (m < config().eps_rel) fail(Errc::domain_error, "polar form of zero is undefined");
  double c = std::clamp(real(q) / m, -1.0, 1.0);
  return PolarForm{m, std::acos(c), axis_of(q)};
}

bool same_sphere(const Quaternion& a, const Quaternion& b) {
  double scale = std::max({1.0, abs(a), abs(b)});
  return std::abs(real(a) - real(b)) <= config().eps_sphere * scale &&
         std::abs(abs_imag(a) - abs_imag(b)) <= config().eps_sphere * scale;
}

Quaternion qexp(const Quaternion& q) {
  double vy = abs_imag(q);
  double ew = std::exp(q.w);
  if (vy == 0) return Quaternion{ew, 0, 0, 0};
  double s = ew * std::sin(vy) / vy;
  return Quaternion{ew * std::cos(vy), s * q.x, s * q.y, s * q.z};
}

Quaternion qlog(const Quaternion& q) {
  double m = abs(q);
  double im = abs_imag(q);
  if (m < config().eps_rel || (im <= config().eps_rel * m && q.w < 0))
    fail(Errc::domain_error, "principal logarithm is undefined on (-inf, 0]");
  double theta = std::acos(std::clamp(q.w / m, -1.0, 1.0));
  Quaternion axis = axis_of(q).value();
  return Quaternion{std::log(m), 0, 0, 0} + theta * axis;
}

Quaternion conjugate_by(const Quaternion& c, const Quaternion& q) { return inv(c) * q * c; }

}  // namespace slicereg
