#include "quatode/determinant.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "quatode/errors.hpp"
#include "quatode/permutation.hpp"

namespace quatode {

namespace {

void require_square(const QMatrix& a, const char* what) {
  if (!a.is_square() || a.rows() == 0) {
    throw ShapeError(std::string(what) + " requires a non-empty square matrix, got " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

Quaternion permutation_term(const QMatrix& a, const Permutation& sigma) {
  const NormalCycleForm form = normal_cycle_form(sigma);
  Quaternion term = 1.0;
  for (const auto& cycle : form.cycles) {
    for (const std::size_t m : cycle) {
      term = term * a(m, sigma[m]);
    }
  }
  return form.sign() > 0 ? term : -term;
}

}  // namespace

Quaternion det_p(const QMatrix& a) {
  require_square(a, "det_p");
  const std::size_t n = a.rows();
  if (n > kMaxDetPDimension) {
    throw ShapeError("det_p enumerates n! permutations and is capped at n = " +
                     std::to_string(kMaxDetPDimension) + ", got n = " + std::to_string(n));
  }
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), std::size_t{0});

  // Lexicographic enumeration; the summation order is fixed so results are
  // bitwise reproducible.
  Quaternion sum;
  do {
    sum += permutation_term(a, Permutation(image));
  } while (std::next_permutation(image.begin(), image.end()));
  return sum;
}

double ddet(const QMatrix& a) {
  require_square(a, "ddet");
  const Quaternion d = det_p(conj_transpose(a) * a);
  const double imag = norm(im(d));
  if (imag > 1e-8 * (1.0 + std::abs(d.w))) {
    throw NumericalError("ddet has a non-vanishing imaginary part (" + format_real(imag) + ")");
  }
  return d.w;
}

double singular_tolerance(const QMatrix& a) {
  const double fro = frobenius_norm(a);
  return 1e-10 * (1.0 + std::pow(fro, 2.0 * static_cast<double>(a.rows())));
}

Quaternion w_entry(const QMatrix& a, std::size_t k, std::size_t j) {
  require_square(a, "w_entry");
  const std::size_t n = a.rows();
  if (k >= n || j >= n) {
    throw InputError("w_entry index out of range: (" + std::to_string(k) + ", " +
                     std::to_string(j) + ") for n = " + std::to_string(n));
  }
  // Column list (α1 … α_{j-1}, α_n, α_{j+1} … α_{n-1}, α_j).
  QMatrix swapped = a;
  if (j != n - 1) {
    for (std::size_t r = 0; r < n; ++r) {
      std::swap(swapped(r, j), swapped(r, n - 1));
    }
  }
  // Row list: the conjugate transposes of those columns, last one replaced by e_k⁺.
  QMatrix rows = conj_transpose(swapped);
  for (std::size_t c = 0; c < n; ++c) {
    rows(n - 1, c) = (c == k) ? Quaternion(1.0) : Quaternion();
  }
  return det_p(rows * swapped);
}

QMatrix inverse(const QMatrix& a) {
  require_square(a, "inverse");
  const std::size_t n = a.rows();
  const double d = ddet(a);
  if (std::abs(d) < singular_tolerance(a)) {
    throw SingularMatrixError("matrix is singular (ddet = " + format_real(d) + ")");
  }
  QMatrix b(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      b(j, k) = conj(w_entry(a, k, j)) / d;
    }
  }
  return b;
}

}  // namespace quatode
