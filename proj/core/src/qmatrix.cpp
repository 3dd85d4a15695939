#include "quatode/qmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "quatode/errors.hpp"

namespace quatode {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw ShapeError("matrix entry count does not match " + std::to_string(rows_) + "x" +
                     std::to_string(cols_));
  }
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw ShapeError("ragged matrix literal");
    }
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1.0;
  }
  return m;
}

QMatrix QMatrix::diagonal(std::span<const Quaternion> diag) {
  QMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) {
    m(i, i) = diag[i];
  }
  return m;
}

QMatrix QMatrix::from_columns(std::span<const QVector> columns) {
  if (columns.empty()) {
    return {};
  }
  const std::size_t n = columns.front().size();
  QMatrix m(n, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != n) {
      throw ShapeError("columns of unequal length");
    }
    for (std::size_t r = 0; r < n; ++r) {
      m(r, c) = columns[c][r];
    }
  }
  return m;
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    v[r] = (*this)(r, c);
  }
  return v;
}

QVector QMatrix::row(std::size_t r) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

namespace {

void require_same_shape(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("matrix shapes differ");
  }
}

}  // namespace

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  require_same_shape(*this, o);
  for (std::size_t n = 0; n < entries_.size(); ++n) {
    entries_[n] += o.entries_[n];
  }
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  require_same_shape(*this, o);
  for (std::size_t n = 0; n < entries_.size(); ++n) {
    entries_[n] -= o.entries_[n];
  }
  return *this;
}

QMatrix& QMatrix::operator*=(double s) {
  for (auto& e : entries_) {
    e *= s;
  }
  return *this;
}

QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
QMatrix operator*(double s, QMatrix a) { return a *= s; }

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("inner dimensions differ in matrix product");
  }
  QMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      Quaternion acc;
      for (std::size_t l = 0; l < a.cols(); ++l) {
        acc += a(r, l) * b(l, c);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

QVector operator*(const QMatrix& a, std::span<const Quaternion> v) {
  if (a.cols() != v.size()) {
    throw ShapeError("matrix-vector dimension mismatch");
  }
  QVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Quaternion acc;
    for (std::size_t l = 0; l < a.cols(); ++l) {
      acc += a(r, l) * v[l];
    }
    out[r] = acc;
  }
  return out;
}

QMatrix conj_transpose(const QMatrix& a) {
  QMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out(c, r) = conj(a(r, c));
    }
  }
  return out;
}

double frobenius_norm(const QMatrix& a) {
  double acc = 0.0;
  for (const auto& e : a.entries()) {
    acc += norm2(e);
  }
  return std::sqrt(acc);
}

double max_abs(const QMatrix& a) {
  double m = 0.0;
  for (const auto& e : a.entries()) {
    m = std::max({m, std::abs(e.w), std::abs(e.x), std::abs(e.y), std::abs(e.z)});
  }
  return m;
}

double max_abs_diff(const QMatrix& a, const QMatrix& b) {
  require_same_shape(a, b);
  double m = 0.0;
  for (std::size_t n = 0; n < a.entries().size(); ++n) {
    m = std::max(m, max_abs_diff(a.entries()[n], b.entries()[n]));
  }
  return m;
}

QVector operator+(QVector a, std::span<const Quaternion> b) {
  if (a.size() != b.size()) {
    throw ShapeError("vector lengths differ");
  }
  for (std::size_t n = 0; n < a.size(); ++n) {
    a[n] += b[n];
  }
  return a;
}

QVector operator-(QVector a, std::span<const Quaternion> b) {
  if (a.size() != b.size()) {
    throw ShapeError("vector lengths differ");
  }
  for (std::size_t n = 0; n < a.size(); ++n) {
    a[n] -= b[n];
  }
  return a;
}

QVector operator*(std::span<const Quaternion> v, const Quaternion& q) {
  QVector out(v.size());
  for (std::size_t n = 0; n < v.size(); ++n) {
    out[n] = v[n] * q;
  }
  return out;
}

QVector operator*(double s, QVector v) {
  for (auto& e : v) {
    e *= s;
  }
  return v;
}

double norm(std::span<const Quaternion> v) {
  double acc = 0.0;
  for (const auto& e : v) {
    acc += norm2(e);
  }
  return std::sqrt(acc);
}

double sup_norm(std::span<const Quaternion> v) {
  double m = 0.0;
  for (const auto& e : v) {
    m = std::max(m, norm(e));
  }
  return m;
}

double max_abs(std::span<const Quaternion> v) {
  double m = 0.0;
  for (const auto& e : v) {
    m = std::max({m, std::abs(e.w), std::abs(e.x), std::abs(e.y), std::abs(e.z)});
  }
  return m;
}

QVector zero_vector(std::size_t n) {
  return QVector(n);
}

std::ostream& operator<<(std::ostream& os, const QMatrix& a) {
  os << '[';
  for (std::size_t r = 0; r < a.rows(); ++r) {
    os << (r == 0 ? "[" : ", [");
    for (std::size_t c = 0; c < a.cols(); ++c) {
      os << (c == 0 ? "" : ", ") << a(r, c);
    }
    os << ']';
  }
  return os << ']';
}

}  // namespace quatode
