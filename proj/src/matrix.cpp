#include "wq/matrix.hpp"

#include <utility>

namespace wq {

ScalarMatrix::ScalarMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

ScalarMatrix ScalarMatrix::identity(FieldSpec field, std::size_t n) {
  ScalarMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& rhs) const {
  if (cols_ != rhs.rows_ || field_ != rhs.field_) {
    throw Error(Errc::InvalidArgument, "matrix product shape or field mismatch");
  }
  ScalarMatrix out(field_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        if (!rhs(k, c).is_zero()) out(r, c) += a * rhs(k, c);
      }
    }
  }
  return out;
}

bool ScalarMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool ScalarMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && !(*this)(r, c).is_zero()) return false;
  return true;
}

Scalar ScalarMatrix::determinant() const {
  if (rows_ != cols_) throw Error(Errc::InvalidArgument, "determinant of a non-square matrix");
  ScalarMatrix a = *this;
  Scalar det = Scalar::one(field_);
  const std::size_t n = rows_;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return Scalar::zero(field_);
    if (pivot != k) {
      for (std::size_t c = k; c < n; ++c) std::swap(a(k, c), a(pivot, c));
      det.apply_sign(-1);
    }
    det *= a(k, k);
    const Scalar inv = a(k, k).inverse();
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k).is_zero()) continue;
      const Scalar factor = a(r, k) * inv;
      for (std::size_t c = k; c < n; ++c) a(r, c) -= factor * a(k, c);
    }
  }
  return det;
}

std::size_t ScalarMatrix::rank() const {
  EchelonBasis basis(field_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    basis.insert(std::vector<Scalar>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_));
  }
  return basis.rank();
}

void EchelonBasis::reduce(std::vector<Scalar>& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (v[p].is_zero()) continue;
    const Scalar factor = v[p];
    const auto& row = rows_[i];
    for (std::size_t c = p; c < dim_; ++c) {
      if (!row[c].is_zero()) v[c] -= factor * row[c];
    }
  }
}

bool EchelonBasis::contains(std::vector<Scalar> v) const {
  if (v.size() != dim_) throw Error(Errc::InvalidArgument, "vector length mismatch");
  reduce(v);
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

bool EchelonBasis::insert(std::vector<Scalar> v) {
  if (v.size() != dim_) throw Error(Errc::InvalidArgument, "vector length mismatch");
  reduce(v);
  std::size_t p = 0;
  while (p < dim_ && v[p].is_zero()) ++p;
  if (p == dim_) return false;
  const Scalar inv = v[p].inverse();
  for (std::size_t c = p; c < dim_; ++c) v[c] *= inv;
  // Keep the basis fully reduced: clear column p from older rows.
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    const Scalar factor = row[p];
    for (std::size_t c = p; c < dim_; ++c) {
      if (!v[c].is_zero()) row[c] -= factor * v[c];
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

}  // namespace wq
