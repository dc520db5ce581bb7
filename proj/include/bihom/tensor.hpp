#pragma once

#include "bihom/matrix.hpp"

namespace bihom {

/// Structure constants of a bilinear operation on an n-dimensional space:
/// x_i * x_j = sum_k c[i][j][k] x_k.
class StructureTensor {
public:
  StructureTensor(int dim, const std::vector<std::string>& params)
      : dim_(dim),
        params_(params),
        c_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim) *
               static_cast<std::size_t>(dim),
           Scalar::zero(params)) {}

  int dim() const { return dim_; }
  const std::vector<std::string>& parameters() const { return params_; }

  const Scalar& at(int i, int j, int k) const { return c_[index(i, j, k)]; }
  void set(int i, int j, int k, const Scalar& s) { c_[index(i, j, k)] = s; }

  /// x_i * x_j as a coordinate vector.
  VectorS on_basis(int i, int j) const;

  /// Bilinear extension: (u*v)_k = sum_{i,j} u_i v_j c[i][j][k].
  VectorS eval(const VectorS& u, const VectorS& v) const;

  StructureTensor operator+(const StructureTensor& o) const;
  StructureTensor operator-(const StructureTensor& o) const;
  StructureTensor scaled(const Scalar& s) const;
  StructureTensor operator-() const;
  /// Transposed arguments: flip(i,j) = (j,i).
  StructureTensor flipped() const;

  bool operator==(const StructureTensor& o) const { return dim_ == o.dim_ && c_ == o.c_; }
  bool operator!=(const StructureTensor& o) const { return !(*this == o); }
  bool is_zero() const;

private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
            static_cast<std::size_t>(j)) *
               static_cast<std::size_t>(dim_) +
           static_cast<std::size_t>(k);
  }

  int dim_;
  std::vector<std::string> params_;
  std::vector<Scalar> c_;
};

/// True iff f(x_i * x_j) = f(x_i) * f(x_j) for all basis pairs (sufficient by
/// bilinearity).
bool is_morphism(const StructureTensor& t, const MatrixS& f);

}  // namespace bihom
