#include "bihom/tensor.hpp"

#include <cassert>
#include <stdexcept>

namespace bihom {

VectorS StructureTensor::on_basis(int i, int j) const {
  VectorS v;
  v.reserve(static_cast<std::size_t>(dim_));
  for (int k = 0; k < dim_; ++k) v.push_back(at(i, j, k));
  return v;
}

VectorS StructureTensor::eval(const VectorS& u, const VectorS& v) const {
  if (static_cast<int>(u.size()) != dim_ || static_cast<int>(v.size()) != dim_)
    throw std::logic_error("bilinear evaluation: dimension mismatch");
  VectorS out(static_cast<std::size_t>(dim_), Scalar::zero(params_));
  for (int i = 0; i < dim_; ++i) {
    const Scalar& ui = u[static_cast<std::size_t>(i)];
    if (ui.is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      const Scalar& vj = v[static_cast<std::size_t>(j)];
      if (vj.is_zero()) continue;
      Scalar uv = ui * vj;
      for (int k = 0; k < dim_; ++k) {
        const Scalar& c = at(i, j, k);
        if (c.is_zero()) continue;
        out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k)] + uv * c;
      }
    }
  }
  return out;
}

StructureTensor StructureTensor::operator+(const StructureTensor& o) const {
  assert(dim_ == o.dim_);
  StructureTensor r = *this;
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] + o.c_[k];
  return r;
}

StructureTensor StructureTensor::operator-(const StructureTensor& o) const {
  assert(dim_ == o.dim_);
  StructureTensor r = *this;
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] - o.c_[k];
  return r;
}

StructureTensor StructureTensor::scaled(const Scalar& s) const {
  StructureTensor r = *this;
  for (auto& x : r.c_) x = x * s;
  return r;
}

StructureTensor StructureTensor::operator-() const {
  StructureTensor r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

StructureTensor StructureTensor::flipped() const {
  StructureTensor r(dim_, params_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) r.set(i, j, k, at(j, i, k));
  return r;
}

bool StructureTensor::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool is_morphism(const StructureTensor& t, const MatrixS& f) {
  if (f.rows() != f.cols() || f.rows() != t.dim())
    throw std::logic_error("is_morphism: size mismatch");
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j) {
      VectorS lhs = f.apply(t.on_basis(i, j));
      VectorS rhs = t.eval(f.column(i), f.column(j));
      if (!vec_is_zero(vec_sub(lhs, rhs))) return false;
    }
  return true;
}

}  // namespace bihom
