#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "quatode/quaternion.hpp"

namespace quatode {

/// Column vector over ℍ.
using QVector = std::vector<Quaternion>;

/// Dense row-major quaternion matrix. Indices are zero-based.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> entries);
  QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static QMatrix diagonal(std::span<const Quaternion> diag);
  static QMatrix from_columns(std::span<const QVector> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  Quaternion& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Quaternion> entries() const noexcept { return entries_; }

  QVector column(std::size_t c) const;
  QVector row(std::size_t r) const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(double s);

  bool operator==(const QMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Quaternion> entries_;
};

QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator*(double s, QMatrix a);
QVector operator*(const QMatrix& a, std::span<const Quaternion> v);

/// (A⁺)_{ij} = conj(A_{ji}).
QMatrix conj_transpose(const QMatrix& a);

double frobenius_norm(const QMatrix& a);
/// Largest absolute real component over all entries.
double max_abs(const QMatrix& a);
double max_abs_diff(const QMatrix& a, const QMatrix& b);

// Vector helpers. Scalars act on the right: v·q.
QVector operator+(QVector a, std::span<const Quaternion> b);
QVector operator-(QVector a, std::span<const Quaternion> b);
QVector operator*(std::span<const Quaternion> v, const Quaternion& q);
QVector operator*(double s, QVector v);
double norm(std::span<const Quaternion> v);
/// Largest quaternion modulus among the entries.
double sup_norm(std::span<const Quaternion> v);
/// Largest absolute real component, i.e. the ∞-norm on ℝ^{4n}.
double max_abs(std::span<const Quaternion> v);
QVector zero_vector(std::size_t n);

std::ostream& operator<<(std::ostream& os, const QMatrix& a);

}  // namespace quatode
