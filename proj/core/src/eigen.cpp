#include "quatode/eigen.hpp"

#include <algorithm>
#include <complex>
#include <string>

#include <Eigen/Eigenvalues>

#include "quatode/complex_adjoint.hpp"
#include "quatode/errors.hpp"

namespace quatode {

namespace {

// Rank threshold for the accumulated eigenvector basis (unit columns).
constexpr double kIndependenceThreshold = 1e-7;

// u is an eigenvector of χ(A); reading it as the first column of χ(v) gives
// u_{2m} = z1 and u_{2m+1} = -conj(z2) for v_m = z1 + z2·j.
QVector quaternion_vector(const Eigen::VectorXcd& u) {
  QVector v(static_cast<std::size_t>(u.size() / 2));
  for (std::size_t m = 0; m < v.size(); ++m) {
    const auto idx = static_cast<Eigen::Index>(2 * m);
    const std::complex<double> z1 = u(idx);
    const std::complex<double> z2 = -std::conj(u(idx + 1));
    v[m] = Quaternion(z1.real(), z1.imag(), z2.real(), z2.imag());
  }
  return v;
}

// The two complex columns of χ(v); v·c for complex c spans the first, v·j
// the second.
ComplexMatrix adjoint_columns(const QVector& v) {
  QMatrix col(v.size(), 1);
  for (std::size_t m = 0; m < v.size(); ++m) {
    col(m, 0) = v[m];
  }
  return complex_adjoint(col);
}

struct Candidate {
  Quaternion value;
  QVector vector;
};

}  // namespace

std::vector<RightEigenpair> right_eigenpairs(const QMatrix& a) {
  if (!a.is_square() || a.rows() == 0) {
    throw ShapeError("right_eigenpairs requires a non-empty square matrix");
  }
  const std::size_t n = a.rows();
  const Eigen::ComplexEigenSolver<ComplexMatrix> solver(complex_adjoint(a));
  if (solver.info() != Eigen::Success) {
    throw DefectiveMatrixError("eigen-decomposition of the complex adjoint did not converge");
  }

  std::vector<Candidate> candidates;
  for (Eigen::Index e = 0; e < solver.eigenvalues().size(); ++e) {
    std::complex<double> lambda = solver.eigenvalues()(e);
    QVector v = quaternion_vector(solver.eigenvectors().col(e));
    if (lambda.imag() < 0.0) {
      // A(v·j) = v·λ·j = (v·j)·conj(λ).
      v = std::span<const Quaternion>(v) * Quaternion::unit_j();
      lambda = std::conj(lambda);
    }
    candidates.push_back({Quaternion(lambda.real(), lambda.imag(), 0.0, 0.0), std::move(v)});
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](const auto& l, const auto& r) {
    return l.value.w != r.value.w ? l.value.w < r.value.w : l.value.x < r.value.x;
  });

  std::vector<RightEigenpair> pairs;
  ComplexMatrix basis(static_cast<Eigen::Index>(2 * n), 0);
  for (auto& cand : candidates) {
    if (pairs.size() == n) {
      break;
    }
    const double len = norm(cand.vector);
    if (len == 0.0) {
      continue;
    }
    QVector unit = (1.0 / len) * std::move(cand.vector);
    ComplexMatrix trial(basis.rows(), basis.cols() + 2);
    trial << basis, adjoint_columns(unit);
    Eigen::FullPivLU<ComplexMatrix> lu(trial);
    lu.setThreshold(kIndependenceThreshold);
    if (static_cast<std::size_t>(lu.rank()) != 2 * (pairs.size() + 1)) {
      continue;
    }
    basis = std::move(trial);
    pairs.push_back({cand.value, std::move(unit)});
  }
  if (pairs.size() != n) {
    throw DefectiveMatrixError("only " + std::to_string(pairs.size()) + " of " + std::to_string(n) +
                               " independent right eigenvectors found; use the matrix exponential");
  }

  const double scale = std::max(1.0, frobenius_norm(a));
  for (const auto& p : pairs) {
    const QVector lhs = a * std::span<const Quaternion>(p.vector);
    const QVector rhs = std::span<const Quaternion>(p.vector) * p.value;
    if (norm(lhs - rhs) > 1e-8 * scale) {
      throw DefectiveMatrixError("right eigenpair residual too large for eigenvalue " +
                                 to_string(p.value));
    }
  }
  return pairs;
}

}  // namespace quatode
