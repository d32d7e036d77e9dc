#ifndef SLICEREG_QUATERNION_HPP
#define SLICEREG_QUATERNION_HPP

#include <cmath>
#include <iosfwd>

#include "slicereg/errors.hpp"

namespace slicereg {

/// A quaternion q = w + x i + y j + z k with binary64 components.
/// Values are immutable in spirit: every operation returns a new value.
struct Quaternion {
  double w = 0, x = 0, y = 0, z = 0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
  constexpr Quaternion(double real) : w(real) {}

  static constexpr Quaternion zero() { return {}; }
  static constexpr Quaternion one() { return {1, 0, 0, 0}; }
  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }

/// Hamilton product: ij = -ji = k, jk = -kj = i, ki = -ik = j.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}
constexpr Quaternion operator*(double s, const Quaternion& a) { return {s * a.w, s * a.x, s * a.y, s * a.z}; }
constexpr Quaternion operator*(const Quaternion& a, double s) { return s * a; }
constexpr Quaternion operator/(const Quaternion& a, double s) { return {a.w / s, a.x / s, a.y / s, a.z / s}; }

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
constexpr double norm_sq(const Quaternion& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }
/// Overflow/underflow-safe modulus (components are scaled before squaring).
inline double abs(const Quaternion& q) {
  double m = std::max(std::max(std::abs(q.w), std::abs(q.x)), std::max(std::abs(q.y), std::abs(q.z)));
  if (m == 0.0 || !std::isfinite(m)) return m;
  double w = q.w / m, x = q.x / m, y = q.y / m, z = q.z / m;
  return m * std::sqrt(w * w + x * x + y * y + z * z);
}
constexpr double real(const Quaternion& q) { return q.w; }
constexpr Quaternion imag(const Quaternion& q) { return {0, q.x, q.y, q.z}; }
inline double abs_imag(const Quaternion& q) { return std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z); }

/// q^{-1} = conj(q)/|q|^2. Throws ZeroDivision below the configured epsilon.
Quaternion inv(const Quaternion& q);

constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
  return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// A point of the imaginary unit sphere S = { purely imaginary, |I| = 1 }.
/// Construction normalizes and rejects inputs too far from S.
class ImaginaryUnit {
 public:
  explicit ImaginaryUnit(const Quaternion& im);

  static ImaginaryUnit i() { return ImaginaryUnit(Quaternion::i()); }
  static ImaginaryUnit j() { return ImaginaryUnit(Quaternion::j()); }
  static ImaginaryUnit k() { return ImaginaryUnit(Quaternion::k()); }

  const Quaternion& value() const { return u_; }
  operator const Quaternion&() const { return u_; }

 private:
  Quaternion u_;
};

/// Dot product of the imaginary axes (used for the J ⟂ I requirement).
inline double axis_dot(const ImaginaryUnit& a, const ImaginaryUnit& b) {
  const Quaternion& p = a.value();
  const Quaternion& q = b.value();
  return p.x * q.x + p.y * q.y + p.z * q.z;
}

/// An orthogonal companion J to the axis I (deterministic choice).
ImaginaryUnit orthogonal_unit(const ImaginaryUnit& I);

/// q = modulus * exp(angle * axis), angle in [0, pi]. The axis of a real
/// quaternion is fixed to i by convention.
struct PolarForm {
  double modulus;
  double angle;
  ImaginaryUnit axis;

  Quaternion reassemble() const;
};

/// Axis I_q = Im(q)/|Im(q)|, or i for real q.
ImaginaryUnit axis_of(const Quaternion& q);

/// Principal polar decomposition; angle = arccos(Re q/|q|). Errors on q = 0.
PolarForm polar(const Quaternion& q);

/// True iff Re(a) = Re(b) and |Im(a)| = |Im(b)| within the sphere tolerance,
/// i.e. a and b lie on the same 2-sphere [q].
bool same_sphere(const Quaternion& a, const Quaternion& b);

/// exp(q) = e^Re(q) (cos|Im q| + I_q sin|Im q|).
Quaternion qexp(const Quaternion& q);

/// Principal logarithm ln|q| + arccos(Re q/|q|) I_q, defined off (-inf, 0].
Quaternion qlog(const Quaternion& q);

/// c^{-1} q c. Preserves Re and |Im| (stays on the sphere [q]).
Quaternion conjugate_by(const Quaternion& c, const Quaternion& q);

}  // namespace slicereg

#endif
