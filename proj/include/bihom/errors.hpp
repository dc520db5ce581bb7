#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bihom {

/// Input text rejected by a parser; offset is a byte position into the source.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// Itemized structural-validation failures (missing op, dimension mismatch, ...).
class ShapeError : public std::runtime_error {
public:
  explicit ShapeError(std::vector<std::string> items)
      : std::runtime_error(join(items)), items_(std::move(items)) {}

  const std::vector<std::string>& items() const noexcept { return items_; }

private:
  static std::string join(const std::vector<std::string>& items) {
    std::string s = "shape error:";
    for (const auto& it : items) {
      s += "\n  - ";
      s += it;
    }
    return s;
  }
  std::vector<std::string> items_;
};

/// A construction was invoked on input that fails its stated precondition.
class PreconditionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Division by zero in the scalar field.
class ArithmeticError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Matrix inversion attempted on a matrix whose determinant is the zero
/// rational function.
class SingularMatrixError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Specialization of parameters hit a vanishing denominator or a missing value.
class EvaluationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace bihom
