#include "bihom/matrix.hpp"

#include <cassert>
#include <stdexcept>

#include "bihom/errors.hpp"

namespace bihom {

MatrixS MatrixS::identity(int n, const std::vector<std::string>& params) {
  MatrixS m = zero(n, n, params);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::constant(params, Rational(1));
  return m;
}

MatrixS MatrixS::diagonal(const VectorS& d) {
  int n = static_cast<int>(d.size());
  assert(n > 0);
  MatrixS m = zero(n, n, d[0].parameters());
  for (int i = 0; i < n; ++i) m.at(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

VectorS MatrixS::column(int j) const {
  VectorS v;
  v.reserve(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

VectorS MatrixS::apply(const VectorS& v) const {
  assert(static_cast<int>(v.size()) == cols_);
  VectorS out;
  out.reserve(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    Scalar acc = Scalar::zero(v.empty() ? std::vector<std::string>{} : v[0].parameters());
    for (int j = 0; j < cols_; ++j) {
      const Scalar& x = v[static_cast<std::size_t>(j)];
      if (x.is_zero() || at(i, j).is_zero()) continue;
      acc = acc + at(i, j) * x;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

MatrixS MatrixS::operator+(const MatrixS& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  MatrixS r = *this;
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
  return r;
}

MatrixS MatrixS::operator-(const MatrixS& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  MatrixS r = *this;
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
  return r;
}

MatrixS MatrixS::operator*(const MatrixS& o) const {
  assert(cols_ == o.rows_);
  MatrixS r(rows_, o.cols_, Scalar::zero(e_.empty() ? std::vector<std::string>{} : e_[0].parameters()));
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& bkj = o.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) = r.at(i, j) + aik * bkj;
      }
    }
  return r;
}

MatrixS MatrixS::scaled(const Scalar& c) const {
  MatrixS r = *this;
  for (auto& x : r.e_) x = x * c;
  return r;
}

bool MatrixS::operator==(const MatrixS& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t k = 0; k < e_.size(); ++k)
    if (e_[k] != o.e_[k]) return false;
  return true;
}

bool MatrixS::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

namespace {

// Gauss-Jordan on [m | rhs]; returns false when m is singular. rhs may be
// empty (rank/determinant only). Pivot: first row with a nonzero entry.
bool eliminate(MatrixS& m, MatrixS* rhs, Scalar* det, int* rank_out) {
  int rows = m.rows(), cols = m.cols();
  const auto params = rows > 0 ? m.at(0, 0).parameters() : std::vector<std::string>{};
  Scalar det_acc = Scalar::constant(params, Rational(1));
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (!m.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
      if (rhs)
        for (int j = 0; j < rhs->cols(); ++j) std::swap(rhs->at(pivot, j), rhs->at(rank, j));
      det_acc = -det_acc;
    }
    Scalar p = m.at(rank, col);
    det_acc = det_acc * p;
    Scalar pinv = p.inverse();
    for (int j = 0; j < cols; ++j) m.at(rank, j) = m.at(rank, j) * pinv;
    if (rhs)
      for (int j = 0; j < rhs->cols(); ++j) rhs->at(rank, j) = rhs->at(rank, j) * pinv;
    for (int i = 0; i < rows; ++i) {
      if (i == rank) continue;
      Scalar f = m.at(i, col);
      if (f.is_zero()) continue;
      for (int j = 0; j < cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(rank, j);
      if (rhs)
        for (int j = 0; j < rhs->cols(); ++j)
          rhs->at(i, j) = rhs->at(i, j) - f * rhs->at(rank, j);
    }
    ++rank;
  }
  if (det) *det = det_acc;
  if (rank_out) *rank_out = rank;
  return rank == rows && rank == cols;
}

}  // namespace

Scalar MatrixS::determinant() const {
  if (rows_ != cols_) throw std::logic_error("determinant of non-square matrix");
  MatrixS work = *this;
  Scalar det = Scalar::zero(e_.empty() ? std::vector<std::string>{} : e_[0].parameters());
  int rank = 0;
  bool ok = eliminate(work, nullptr, &det, &rank);
  if (!ok) return Scalar::zero(det.parameters());
  return det;
}

std::optional<MatrixS> MatrixS::try_inverse() const {
  if (rows_ != cols_) throw std::logic_error("inverse of non-square matrix");
  const auto params = e_.empty() ? std::vector<std::string>{} : e_[0].parameters();
  MatrixS work = *this;
  MatrixS inv = identity(rows_, params);
  if (!eliminate(work, &inv, nullptr, nullptr)) return std::nullopt;
  return inv;
}

MatrixS MatrixS::inverse() const {
  auto inv = try_inverse();
  if (!inv) throw SingularMatrixError("matrix is singular over the rational-function field");
  return *inv;
}

int MatrixS::rank() const {
  MatrixS work = *this;
  int rank = 0;
  eliminate(work, nullptr, nullptr, &rank);
  return rank;
}

bool maps_commute(const MatrixS& f, const MatrixS& g) {
  if (f.rows() != f.cols() || g.rows() != g.cols() || f.rows() != g.rows())
    throw std::logic_error("maps_commute requires square matrices of equal size");
  return (f * g - g * f).is_zero();
}

VectorS vec_add(const VectorS& a, const VectorS& b) {
  assert(a.size() == b.size());
  VectorS r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
  return r;
}

VectorS vec_sub(const VectorS& a, const VectorS& b) {
  assert(a.size() == b.size());
  VectorS r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
  return r;
}

VectorS vec_scale(const Scalar& c, const VectorS& v) {
  VectorS r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(c * x);
  return r;
}

VectorS vec_neg(const VectorS& v) {
  VectorS r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(-x);
  return r;
}

bool vec_is_zero(const VectorS& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

VectorS basis_vector(int dim, int index, const std::vector<std::string>& params) {
  VectorS v(static_cast<std::size_t>(dim), Scalar::zero(params));
  v[static_cast<std::size_t>(index)] = Scalar::constant(params, Rational(1));
  return v;
}

}  // namespace bihom
