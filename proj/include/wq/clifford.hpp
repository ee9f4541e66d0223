#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "wq/qform.hpp"

namespace wq {

/// Blade index: bit i set means e_{i+1} occurs in e^Delta.
using Blade = std::uint32_t;

inline constexpr std::size_t kDefaultRankCap = 10;

inline int blade_grade(Blade b) noexcept { return __builtin_popcount(b); }
inline bool is_even_blade(Blade b) noexcept { return (blade_grade(b) & 1) == 0; }

// (-1)^#{(i,j): i in a, j in b, i > j}
int blade_sign(Blade a, Blade b) noexcept;

// Sign picked up by reversing e_{i1} ... e_{ik}: (-1)^(k(k-1)/2).
int reversal_sign(Blade b) noexcept;

struct BladeProduct {
  int sign;
  Scalar scale;
  Blade blade;
};

/// e^a * e^b = sign * scale * e^(a xor b), scale = prod of a_i over a & b.
BladeProduct blade_mul(Blade a, Blade b, const DiagonalForm& q);

/// C(q) as a structure-constant algebra on the blade basis. Shared by every
/// element built over the same form.
class CliffordAlgebra {
 public:
  static std::shared_ptr<const CliffordAlgebra> make(const DiagonalForm& q,
                                                     std::size_t rank_cap = kDefaultRankCap);

  const DiagonalForm& form() const noexcept { return form_; }
  const FieldSpec& field() const noexcept { return form_.field(); }
  std::size_t rank() const noexcept { return form_.rank(); }
  std::size_t dimension() const noexcept { return std::size_t{1} << rank(); }

  // q(e^Delta) = prod_{i in Delta} a_i
  const Scalar& blade_norm(Blade b) const { return blade_norms_[b]; }

  // Even blades in increasing mask order; the coordinate order of C_0(q).
  const std::vector<Blade>& even_blades() const noexcept { return even_blades_; }
  std::size_t even_index(Blade b) const { return even_index_[b]; }

 private:
  explicit CliffordAlgebra(DiagonalForm q);

  DiagonalForm form_;
  std::vector<Scalar> blade_norms_;
  std::vector<Blade> even_blades_;
  std::vector<std::size_t> even_index_;
};

using AlgebraPtr = std::shared_ptr<const CliffordAlgebra>;

/// Sparse element of C(q): sorted (blade, coefficient) pairs, no zeros stored.
class CliffordElement {
 public:
  using Term = std::pair<Blade, Scalar>;

  explicit CliffordElement(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}
  CliffordElement(AlgebraPtr algebra, std::vector<Term> terms);

  static CliffordElement scalar(AlgebraPtr algebra, const Scalar& s);
  static CliffordElement blade(AlgebraPtr algebra, Blade b);
  static CliffordElement blade(AlgebraPtr algebra, Blade b, const Scalar& coeff);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_even() const noexcept;
  Scalar coeff(Blade b) const;

  // Coordinates on the even blade basis. Throws InvalidArgument when odd.
  std::vector<Scalar> even_coordinates() const;
  static CliffordElement from_even_coordinates(AlgebraPtr algebra, const std::vector<Scalar>& coords);

  CliffordElement operator-() const;
  friend CliffordElement operator+(const CliffordElement& x, const CliffordElement& y);
  friend CliffordElement operator-(const CliffordElement& x, const CliffordElement& y);
  friend CliffordElement operator*(const Scalar& s, const CliffordElement& x);

  friend bool operator==(const CliffordElement& x, const CliffordElement& y);

 private:
  AlgebraPtr algebra_;
  std::vector<Term> terms_;
};

CliffordElement mul(const CliffordElement& x, const CliffordElement& y);
inline CliffordElement operator*(const CliffordElement& x, const CliffordElement& y) { return mul(x, y); }

// e^b * x, without materialising e^b.
CliffordElement left_mul_blade(Blade b, const CliffordElement& x);

/// Canonical involution: identity on P, reverses products.
CliffordElement involution(const CliffordElement& x);

/// Coefficient of the empty blade.
Scalar trace(const CliffordElement& x);

/// B(x, y) = tr(involution(x) y)
Scalar bform(const CliffordElement& x, const CliffordElement& y);

enum class AlgebraPart { Full, Even };

SymmetricMatrix gram_of_B(const DiagonalForm& q, AlgebraPart part, std::size_t rank_cap = kDefaultRankCap);

/// Diagonal form of (x, y) -> tr(x involution(y)) on the blade basis of C_0(q).
DiagonalForm trace_of_beta(const DiagonalForm& q, std::size_t rank_cap = kDefaultRankCap);

/// Basis of a left ideal of C_0(q), in reduced echelon form on the even
/// blade coordinates.
struct IdealBasis {
  AlgebraPtr algebra;
  std::vector<CliffordElement> vectors;
  // The element whose left multiples span the ideal.
  CliffordElement generator;

  std::size_t dimension() const noexcept { return vectors.size(); }
  bool is_left_ideal() const;
};

struct IdealSearchOptions {
  std::uint64_t seed = 0;
  std::size_t candidates = 16;
  std::size_t jobs = 1;
};

struct IdealSearchResult {
  IdealBasis ideal;
  std::size_t target_dimension;
  // Index of the winning candidate in seed order.
  std::size_t candidate;
  std::vector<std::size_t> candidate_dimensions;
};

/// Span of {e^Delta * x : Delta even}.
IdealBasis left_ideal_generated_by(const CliffordElement& x);

/// Minimal left ideal of C_0(n<1>) over the rationals, 3 <= n <= 9,
/// certified by reaching dimension 2^delta(n).
IdealSearchResult minimal_left_ideal(const DiagonalForm& q, const IdealSearchOptions& options = {});

/// Gram matrix of (x, y) -> tr(x involution(y)) on the ideal basis.
SymmetricMatrix restricted_trace_form(const IdealBasis& ideal);

}  // namespace wq
