#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace quatode {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Problems with what the caller handed in: malformed data, bad shapes,
// syntax errors. The CLI maps these to exit status 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// The input was well formed but the numerics failed: singular matrices,
// quadrature that would not converge, defective spectra. Exit status 3.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(std::string reason, std::size_t position, const std::string& context = {})
      : InputError((context.empty() ? std::string() : context + ": ") + "parse error at position " +
                   std::to_string(position) + ": " + reason),
        reason_(std::move(reason)),
        context_(context),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& reason() const noexcept { return reason_; }

  const std::string& context() const noexcept { return context_; }

  /// Same error, prefixed with where the source came from (e.g. "cell [0][1]").
  /// Contexts nest outermost first.
  ParseError in_context(const std::string& outer) const {
    return ParseError(reason_, position_, context_.empty() ? outer : outer + " " + context_);
  }

 private:
  std::string reason_;
  std::string context_;
  std::size_t position_;
};

// Evaluation of a well-formed expression that is outside its domain,
// e.g. sin() of a non-real quaternion.
class EvalError : public InputError {
 public:
  using InputError::InputError;
};

// Division by the zero quaternion.
class DomainError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SingularMatrixError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class QuadratureError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Right eigenvectors could not be extracted (defective complex adjoint).
class DefectiveMatrixError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace quatode
