#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wq/error.hpp"

namespace wq {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix transpose() const;
  // [this | rhs]
  IntMatrix hconcat(const IntMatrix& rhs) const;
  IntMatrix column(std::size_t c) const;

  bool is_zero() const;
  mpz_class determinant() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  std::size_t rank;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Finitely generated abelian group Z^r + Z/d_1 + ... + Z/d_k with
/// d_1 | d_2 | ... and every d_i >= 2.
///
/// Generators are ordered free part first, then the torsion factors. Maps
/// between groups are integer matrices on these generators.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  // Normalises arbitrary cyclic orders (>= 0, 0 meaning Z) to invariant factors.
  static AbelianGroup from_cyclic_orders(const std::vector<mpz_class>& orders);
  static AbelianGroup free(std::size_t rank) { return AbelianGroup(rank, {}); }
  static AbelianGroup cyclic(const mpz_class& order);
  static AbelianGroup trivial() { return {}; }

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<mpz_class>& torsion() const noexcept { return torsion_; }
  std::size_t generator_count() const noexcept { return free_rank_ + torsion_.size(); }
  // Order of generator i: 0 for free generators.
  mpz_class generator_order(std::size_t i) const;
  bool is_trivial() const noexcept { return generator_count() == 0; }

  AbelianGroup direct_sum(const AbelianGroup& other) const;

  // "0", "Z", "Z/4", "Z + Z", "Z/2 + Z/2"
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  AbelianGroup(std::size_t free_rank, std::vector<mpz_class> torsion)
      : free_rank_(free_rank), torsion_(std::move(torsion)) {}

  std::size_t free_rank_ = 0;
  std::vector<mpz_class> torsion_;
};

/// Homomorphism given on generators: column j is the image of domain
/// generator j. Rows belonging to torsion generators are reduced mod their
/// order; construction rejects matrices that do not kill the domain torsion.
class GroupMap {
 public:
  GroupMap(AbelianGroup domain, AbelianGroup codomain, IntMatrix matrix);

  static GroupMap zero(AbelianGroup domain, AbelianGroup codomain);
  static GroupMap identity(const AbelianGroup& group);

  const AbelianGroup& domain() const noexcept { return domain_; }
  const AbelianGroup& codomain() const noexcept { return codomain_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

  // this after inner
  GroupMap compose(const GroupMap& inner) const;

  friend bool operator==(const GroupMap&, const GroupMap&) = default;

 private:
  AbelianGroup domain_;
  AbelianGroup codomain_;
  IntMatrix matrix_;
};

AbelianGroup kernel(const GroupMap& f);
AbelianGroup cokernel(const GroupMap& f);
AbelianGroup image(const GroupMap& f);

bool is_zero_map(const GroupMap& f);
bool is_injective(const GroupMap& f);
bool is_surjective(const GroupMap& f);

/// im(f) = ker(g) inside the middle group, compared as lattices of Z^b
/// containing the relation lattice.
bool is_exact_at(const GroupMap& f, const GroupMap& g);

/// Lattice-level helpers, exposed for testing. Columns are generators.
bool lattice_contains(const IntMatrix& generators, const IntMatrix& vectors);
IntMatrix integer_kernel(const IntMatrix& m);
// L(generators) / L(sub) for L(sub) inside L(generators).
AbelianGroup subquotient(const IntMatrix& generators, const IntMatrix& sub);

/// The subquotient together with ambient representatives of its canonical
/// generators and the coordinate map back from the lattice.
struct SubquotientBasis {
  AbelianGroup group;
  // Column g is an ambient vector representing generator g.
  IntMatrix section;
  // Group coordinates of lattice vectors (columns). Throws InvalidArgument
  // for vectors outside the lattice.
  IntMatrix coordinates(const IntMatrix& vectors) const;

  IntMatrix lattice_u;
  std::vector<mpz_class> lattice_d;
  IntMatrix inner_u;
  std::vector<std::size_t> kept;
};

SubquotientBasis subquotient_basis(const IntMatrix& generators, const IntMatrix& sub);

IntMatrix unimodular_inverse(const IntMatrix& m);

/// ker f -> domain and codomain -> coker f on canonical generators.
GroupMap kernel_inclusion(const GroupMap& f);
GroupMap cokernel_projection(const GroupMap& f);

}  // namespace wq
