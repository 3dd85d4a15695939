#pragma once

/**
 * @file quaternion.hpp
 * @brief Real quaternions q = w + x i + y j + z k.
 *
 * Multiplication follows i² = j² = k² = ijk = -1 and is NOT commutative:
 * i*j = k but j*i = -k. Everything else in the library (matrices, the
 * expression language, the ODE solver) is built on this type, so operand
 * order matters everywhere.
 */

#include <iosfwd>
#include <string>

namespace quatode {

/// Absolute tolerance used by "is zero" style checks.
inline constexpr double kZeroTolerance = 1e-12;

struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  // Implicit from a real so that `2.0 * q` and `q + 1.0` read naturally.
  constexpr Quaternion(double w_) : w(w_) {}  // NOLINT(google-explicit-constructor)
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion unit_j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion unit_k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr bool operator==(const Quaternion&) const = default;

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s;
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }

/// Hamilton product.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

// Real scalars commute with everything, so these are unambiguous.
constexpr Quaternion operator*(double s, Quaternion q) { return q *= s; }
constexpr Quaternion operator*(Quaternion q, double s) { return q *= s; }
constexpr Quaternion operator/(Quaternion q, double s) { return q *= (1.0 / s); }

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
constexpr double norm2(const Quaternion& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }
double norm(const Quaternion& q);

constexpr double re(const Quaternion& q) { return q.w; }
constexpr Quaternion im(const Quaternion& q) { return {0.0, q.x, q.y, q.z}; }

/// q⁻¹ = conj(q)/|q|². Throws DomainError for q = 0.
Quaternion inv(const Quaternion& q);

/// Right division a/b = a·b⁻¹.
Quaternion operator/(const Quaternion& a, const Quaternion& b);

/// e^q = e^w (cos|v| + v/|v| sin|v|), v = im(q).
Quaternion qexp(const Quaternion& q);

bool is_zero(const Quaternion& q, double tol = kZeroTolerance);
bool is_real(const Quaternion& q, double tol = kZeroTolerance);
bool is_finite(const Quaternion& q);

/// Largest absolute component difference.
double max_abs_diff(const Quaternion& a, const Quaternion& b);

/// Renders "a+bi+cj+dk", omitting zero terms ("0" for the zero quaternion).
/// Unit coefficients are dropped: "i", "-k", "1-2j".
std::string to_string(const Quaternion& q);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// Shortest decimal text that round-trips the double exactly.
std::string format_real(double v);

}  // namespace quatode
