#pragma once

#include <cstddef>
#include <vector>

#include "wq/scalars.hpp"

namespace wq {

/// Dense row-major matrix over one of the supported fields.
class ScalarMatrix {
 public:
  ScalarMatrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static ScalarMatrix identity(FieldSpec field, std::size_t n);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ScalarMatrix transpose() const;
  ScalarMatrix operator*(const ScalarMatrix& rhs) const;

  bool is_symmetric() const;
  bool is_diagonal() const;

  // Gaussian elimination on a copy.
  Scalar determinant() const;
  std::size_t rank() const;

  friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Incrementally grown row-echelon basis of a subspace of field^dim.
/// Vectors are kept fully reduced with unit pivots, so membership and
/// insertion are a single sweep.
class EchelonBasis {
 public:
  EchelonBasis(FieldSpec field, std::size_t dim) : field_(field), dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<std::vector<Scalar>>& rows() const noexcept { return rows_; }

  // Returns true when v was independent of the current span.
  bool insert(std::vector<Scalar> v);
  bool contains(std::vector<Scalar> v) const;

 private:
  void reduce(std::vector<Scalar>& v) const;

  FieldSpec field_;
  std::size_t dim_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace wq
