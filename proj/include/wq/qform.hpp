#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "wq/matrix.hpp"
#include "wq/scalars.hpp"

namespace wq {

/// Non-degenerate diagonal quadratic form <a_1, ..., a_n>.
///
/// Rank 0 is allowed and stands for the zero class of the Witt group; every
/// other operation that needs a quadric or a Clifford algebra checks its own
/// rank precondition.
class DiagonalForm {
 public:
  DiagonalForm(FieldSpec field, std::vector<Scalar> coeffs);
  DiagonalForm(FieldSpec field, std::initializer_list<long> coeffs);

  // m<-1> + n<1>
  static DiagonalForm split_signs(FieldSpec field, std::size_t minus, std::size_t plus);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rank() const noexcept { return coeffs_.size(); }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }

  Scalar determinant() const;
  // (-1)^(n(n-1)/2) det
  Scalar signed_discriminant() const;

  DiagonalForm orthogonal_sum(const DiagonalForm& other) const;
  DiagonalForm tensor(const DiagonalForm& other) const;

  std::string to_string() const;

  friend bool operator==(const DiagonalForm&, const DiagonalForm&) = default;

 private:
  FieldSpec field_;
  std::vector<Scalar> coeffs_;
};

/// Square Gram matrix with exact symmetry.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(ScalarMatrix entries);

  const ScalarMatrix& entries() const noexcept { return entries_; }
  const FieldSpec& field() const noexcept { return entries_.field(); }
  std::size_t size() const noexcept { return entries_.rows(); }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }

 private:
  ScalarMatrix entries_;
};

struct Diagonalization {
  DiagonalForm form;
  // Invertible C with C^T M C = diag(form).
  ScalarMatrix change_of_basis;
};

Diagonalization diagonalize(const SymmetricMatrix& m);

struct Signature {
  std::size_t pos = 0;
  std::size_t neg = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature(const DiagonalForm& q);

bool is_isotropic(const DiagonalForm& q);

// <<a1 a2, ..., a1 an>>, entries in binary-counter order over subsets of {2..n}.
DiagonalForm pfister(const DiagonalForm& q);

// Image of [q] under the signature isomorphism W(R) -> Z.
long witt_class_real(const DiagonalForm& q);

bool witt_equivalent(const DiagonalForm& f, const DiagonalForm& g);

}  // namespace wq
