#include "quatode/complex_adjoint.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "quatode/errors.hpp"

namespace quatode {

using cd = std::complex<double>;

ComplexMatrix complex_adjoint(const QMatrix& a) {
  ComplexMatrix m(2 * a.rows(), 2 * a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const Quaternion& q = a(r, c);
      const cd z1(q.w, q.x);
      const cd z2(q.y, q.z);
      const auto R = static_cast<Eigen::Index>(2 * r);
      const auto C = static_cast<Eigen::Index>(2 * c);
      m(R, C) = z1;
      m(R, C + 1) = z2;
      m(R + 1, C) = -std::conj(z2);
      m(R + 1, C + 1) = std::conj(z1);
    }
  }
  return m;
}

QMatrix from_complex_adjoint(const ComplexMatrix& m, double tol) {
  if (m.rows() % 2 != 0 || m.cols() % 2 != 0) {
    throw InputError("complex adjoint must have even dimensions");
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const std::size_t rows = static_cast<std::size_t>(m.rows() / 2);
  const std::size_t cols = static_cast<std::size_t>(m.cols() / 2);
  QMatrix a(rows, cols);
  for (Eigen::Index r = 0; r < m.rows(); r += 2) {
    for (Eigen::Index c = 0; c < m.cols(); c += 2) {
      const cd z1 = m(r, c);
      const cd z2 = m(r, c + 1);
      const double defect = std::max(std::abs(m(r + 1, c) + std::conj(z2)),
                                     std::abs(m(r + 1, c + 1) - std::conj(z1)));
      if (defect > tol * scale) {
        throw InputError("matrix is not a complex adjoint: block (" + std::to_string(r / 2) + ", " +
                         std::to_string(c / 2) + ") violates the quaternion structure by " +
                         format_real(defect));
      }
      a(static_cast<std::size_t>(r / 2), static_cast<std::size_t>(c / 2)) =
          Quaternion(z1.real(), z1.imag(), z2.real(), z2.imag());
    }
  }
  return a;
}

namespace {

// Padé coefficients c_j = (2m - j)! m! / ((2m)! j! (m - j)!), in ascending j.
std::vector<double> pade_coefficients(int m) {
  std::vector<double> c(static_cast<std::size_t>(m) + 1);
  c[0] = 1.0;
  for (int j = 1; j <= m; ++j) {
    c[static_cast<std::size_t>(j)] =
        c[static_cast<std::size_t>(j) - 1] * static_cast<double>(m - j + 1) /
        (static_cast<double>(j) * static_cast<double>(2 * m - j + 1));
  }
  return c;
}

// Largest 1-norms for which degree-m Padé is accurate to double precision
// without scaling (Higham, 2005).
constexpr std::array<std::pair<int, double>, 4> kPadeThetas{{
    {3, 1.495585217958292e-2},
    {5, 2.539398330063230e-1},
    {7, 9.504178996162932e-1},
    {9, 2.097847961257068e0},
}};
constexpr double kTheta13 = 5.371920351148152;

ComplexMatrix pade_low(const ComplexMatrix& a, int m) {
  const auto c = pade_coefficients(m);
  const auto n = a.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix a2 = a * a;

  ComplexMatrix u_inner = c[1] * id;
  ComplexMatrix v = c[0] * id;
  ComplexMatrix power = id;
  for (int j = 2; j <= m; j += 2) {
    power = power * a2;
    v += c[static_cast<std::size_t>(j)] * power;
    if (j + 1 <= m) {
      u_inner += c[static_cast<std::size_t>(j) + 1] * power;
    }
  }
  const ComplexMatrix u = a * u_inner;
  return (v - u).partialPivLu().solve(v + u);
}

ComplexMatrix pade13(const ComplexMatrix& a) {
  const auto c = pade_coefficients(13);
  const auto n = a.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;

  const ComplexMatrix u_inner =
      a6 * (c[13] * a6 + c[11] * a4 + c[9] * a2) + c[7] * a6 + c[5] * a4 + c[3] * a2 + c[1] * id;
  const ComplexMatrix u = a * u_inner;
  const ComplexMatrix v =
      a6 * (c[12] * a6 + c[10] * a4 + c[8] * a2) + c[6] * a6 + c[4] * a4 + c[2] * a2 + c[0] * id;
  return (v - u).partialPivLu().solve(v + u);
}

}  // namespace

ComplexMatrix expm(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw ShapeError("expm requires a square matrix");
  }
  if (m.size() == 0) {
    return m;
  }
  const double norm1 = m.cwiseAbs().colwise().sum().maxCoeff();
  for (const auto& [degree, theta] : kPadeThetas) {
    if (norm1 <= theta) {
      return pade_low(m, degree);
    }
  }
  int squarings = 0;
  if (norm1 > kTheta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / kTheta13)));
  }
  ComplexMatrix r = pade13(m / std::ldexp(1.0, squarings));
  for (int s = 0; s < squarings; ++s) {
    r = r * r;
  }
  return r;
}

QMatrix expm(const QMatrix& a, double t) {
  if (!a.is_square()) {
    throw ShapeError("expm requires a square matrix");
  }
  const ComplexMatrix e = expm(ComplexMatrix(complex_adjoint(a) * t));
  // Round-off in the squarings can smear the block structure slightly.
  return from_complex_adjoint(e, 1e-6);
}

QMatrix inverse_via_adjoint(const QMatrix& a) {
  if (!a.is_square() || a.rows() == 0) {
    throw ShapeError("inverse requires a non-empty square matrix");
  }
  const ComplexMatrix m = complex_adjoint(a);
  const Eigen::PartialPivLU<ComplexMatrix> lu(m);
  if (!(lu.rcond() > 1e-14)) {
    throw SingularMatrixError("matrix is singular (reciprocal condition " +
                              format_real(lu.rcond()) + ")");
  }
  const auto n = m.rows();
  return from_complex_adjoint(lu.solve(ComplexMatrix::Identity(n, n)), 1e-6);
}

double adjoint_determinant(const QMatrix& a) {
  if (!a.is_square()) {
    throw ShapeError("determinant requires a square matrix");
  }
  return complex_adjoint(a).determinant().real();
}

}  // namespace quatode
