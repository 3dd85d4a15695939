#include "quatode/quaternion.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <ostream>

#include "quatode/errors.hpp"

namespace quatode {

double norm(const Quaternion& q) {
  return std::sqrt(norm2(q));
}

Quaternion inv(const Quaternion& q) {
  const double n2 = norm2(q);
  if (n2 == 0.0) {
    throw DomainError("division by the zero quaternion");
  }
  return conj(q) / n2;
}

Quaternion operator/(const Quaternion& a, const Quaternion& b) {
  return a * inv(b);
}

Quaternion qexp(const Quaternion& q) {
  const double scale = std::exp(q.w);
  const double vnorm = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
  // Removable singularity of sin|v|/|v| at v = 0.
  if (vnorm < 1e-300) {
    return {scale, 0.0, 0.0, 0.0};
  }
  const double s = scale * std::sin(vnorm) / vnorm;
  return {scale * std::cos(vnorm), s * q.x, s * q.y, s * q.z};
}

bool is_zero(const Quaternion& q, double tol) {
  return std::abs(q.w) <= tol && std::abs(q.x) <= tol && std::abs(q.y) <= tol &&
         std::abs(q.z) <= tol;
}

bool is_real(const Quaternion& q, double tol) {
  return is_zero(im(q), tol);
}

bool is_finite(const Quaternion& q) {
  return std::isfinite(q.w) && std::isfinite(q.x) && std::isfinite(q.y) && std::isfinite(q.z);
}

double max_abs_diff(const Quaternion& a, const Quaternion& b) {
  const Quaternion d = a - b;
  return std::max({std::abs(d.w), std::abs(d.x), std::abs(d.y), std::abs(d.z)});
}

std::string format_real(double v) {
  if (v == 0.0) {
    return "0";  // also folds -0
  }
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) {
    return std::to_string(v);
  }
  return std::string(buf.data(), end);
}

std::string to_string(const Quaternion& q) {
  const std::array<double, 4> coeff{q.w, q.x, q.y, q.z};
  const std::array<const char*, 4> unit{"", "i", "j", "k"};

  std::string out;
  for (std::size_t n = 0; n < coeff.size(); ++n) {
    const double c = coeff[n];
    if (c == 0.0) {
      continue;
    }
    std::string term;
    if (n > 0 && (c == 1.0 || c == -1.0)) {
      term = (c < 0.0 ? "-" : "") + std::string(unit[n]);
    } else {
      term = format_real(c) + unit[n];
    }
    if (!out.empty() && term.front() != '-') {
      out += '+';
    }
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << to_string(q);
}

}  // namespace quatode
