#pragma once

/**
 * @file fundamental.hpp
 * @brief Fundamental matrices Φ(t) of the homogeneous system x' = A(t)x.
 *
 * The columns of Φ are n right-independent solutions, so every solution of
 * the homogeneous system is Φ(t)q for a constant quaternion vector q.
 * Three constructions are provided:
 *
 *  - exponential: Φ(t) = exp(A (t - t_ref)) for constant A;
 *  - eigen: columns v_m e^{λ_m t} from right eigenpairs of constant A;
 *  - numeric: classical RK4 on Φ' = A(t)Φ, Φ(t_ref) = I, with cubic
 *    Hermite dense output between grid points.
 */

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "quatode/expr.hpp"
#include "quatode/qmatrix.hpp"

namespace quatode {

enum class FundamentalKind { exponential, eigen, numeric };

std::string to_string(FundamentalKind kind);

class FundamentalMatrix {
 public:
  FundamentalMatrix(std::size_t dim, FundamentalKind kind, double t_ref,
                    std::function<QMatrix(double)> evaluator);

  QMatrix operator()(double t) const { return evaluator_(t); }

  /// Φ(t)⁻¹: the double-determinant inverse for n ≤ 4, LU on the complex
  /// adjoint above that.
  QMatrix inverse_at(double t) const;

  std::size_t dim() const noexcept { return dim_; }
  FundamentalKind kind() const noexcept { return kind_; }
  double t_ref() const noexcept { return t_ref_; }

 private:
  std::size_t dim_;
  FundamentalKind kind_;
  double t_ref_;
  std::function<QMatrix(double)> evaluator_;
};

/// Largest dimension for which inverses go through det_p.
inline constexpr std::size_t kChenInverseMaxDim = 4;

/// Inverse used throughout the solver: det_p based for small n.
QMatrix solver_inverse(const QMatrix& a);

/// ddet(A) for small n, det χ(A) beyond kChenInverseMaxDim.
double independence_measure(const QMatrix& a);

/// Φ(t) = exp(A (t - t_ref)).
FundamentalMatrix fundamental_constant(const QMatrix& a, double t_ref);

/// Φ(t) with columns v_m·e^{λ_m t}. Throws DefectiveMatrixError when the
/// eigenvectors are not right-independent.
FundamentalMatrix fundamental_eigen(const QMatrix& a);

/// RK4 on Φ' = A(t)Φ over [t_begin, t_end] ∋ t_ref using `steps` steps in
/// total (split between the two sides of t_ref). Evaluating outside the
/// window throws InputError. Throws NumericalError if Φ becomes singular at
/// a grid point.
FundamentalMatrix fundamental_numeric(const ExprMatrix& a, double t_ref, double t_begin,
                                      double t_end, int steps);

}  // namespace quatode
