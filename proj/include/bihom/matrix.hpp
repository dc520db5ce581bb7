#pragma once

#include <optional>
#include <vector>

#include "bihom/scalar.hpp"

namespace bihom {

using VectorS = std::vector<Scalar>;

/// Dense matrix over the scalar field, row-major. Column j is the image of
/// basis vector j.
class MatrixS {
public:
  MatrixS(int rows, int cols, const Scalar& fill)
      : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows * cols), fill) {}

  static MatrixS zero(int rows, int cols, const std::vector<std::string>& params) {
    return MatrixS(rows, cols, Scalar::zero(params));
  }
  static MatrixS identity(int n, const std::vector<std::string>& params);
  static MatrixS diagonal(const VectorS& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Scalar& at(int i, int j) const { return e_[static_cast<std::size_t>(i * cols_ + j)]; }
  Scalar& at(int i, int j) { return e_[static_cast<std::size_t>(i * cols_ + j)]; }

  VectorS column(int j) const;
  VectorS apply(const VectorS& v) const;  // matrix * column vector

  MatrixS operator+(const MatrixS& o) const;
  MatrixS operator-(const MatrixS& o) const;
  MatrixS operator*(const MatrixS& o) const;
  MatrixS scaled(const Scalar& c) const;
  bool operator==(const MatrixS& o) const;
  bool operator!=(const MatrixS& o) const { return !(*this == o); }
  bool is_zero() const;

  Scalar determinant() const;  // square only
  /// Exact inverse by fraction-exact Gaussian elimination, first-nonzero-row
  /// pivoting; nullopt when the determinant is the zero rational function.
  std::optional<MatrixS> try_inverse() const;
  MatrixS inverse() const;  // throws SingularMatrixError

  /// Column rank over the rational-function field.
  int rank() const;

private:
  int rows_, cols_;
  std::vector<Scalar> e_;
};

bool maps_commute(const MatrixS& f, const MatrixS& g);

VectorS vec_add(const VectorS& a, const VectorS& b);
VectorS vec_sub(const VectorS& a, const VectorS& b);
VectorS vec_scale(const Scalar& c, const VectorS& v);
VectorS vec_neg(const VectorS& v);
bool vec_is_zero(const VectorS& v);
VectorS basis_vector(int dim, int index, const std::vector<std::string>& params);

}  // namespace bihom
