#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "wq/abelian.hpp"

namespace wq {

/// #{l : 0 < l < n, l = 0, 1, 2 or 4 mod 8}
std::size_t delta(std::size_t n);

enum class CoreAlgebra { K, X, Y, KxK, YxY };
enum class InvolutionType { Orthogonal, Symplectic, Unitary };

std::string_view to_string(CoreAlgebra core) noexcept;
std::string_view to_string(InvolutionType type) noexcept;

// Dimension over the base field: k 1, X 2, Y 4, k x k 2, Y x Y 8.
std::size_t core_dimension(CoreAlgebra core) noexcept;

// Dimension of a minimal right ideal of the core, per simple factor.
std::size_t core_irreducible_dimension(CoreAlgebra core) noexcept;

/// Isomorphism class of C_0(n<1>) = C^{n-1,0}, with its canonical involution.
struct AlgebraClass {
  std::size_t matrix_size;
  CoreAlgebra core;
  InvolutionType involution;

  std::size_t dimension() const noexcept { return matrix_size * matrix_size * core_dimension(core); }
  // "M2(Y)", "Y x Y", "M8(k) x M8(k)", ...
  std::string algebra_name() const;

  friend bool operator==(const AlgebraClass&, const AlgebraClass&) = default;
};

AlgebraClass classify_C0_definite(std::size_t n);

/// W^0 and W^2 of (C_0(n<1>), canonical involution) over the reals.
struct C0WittGroups {
  AbelianGroup w0;
  AbelianGroup w2;
};

C0WittGroups witt_groups_of_C0_real(std::size_t n);

enum class VanishingJustification {
  Field,
  Semiperfect,
  HenselianPair,
  ResidueFieldLift,
  RegularLocalContainingField,
  Unknown,
};

std::string_view to_string(VanishingJustification j) noexcept;

struct VanishingVerdict {
  bool vanishes;
  VanishingJustification justification;
};

/// Facts about the base ring supplied by the caller; nothing is inferred.
struct RingFacts {
  bool is_field_char_ne_2 = false;
  bool is_semiperfect = false;
  bool is_henselian_pair = false;
  bool is_local_with_lifted_residue_field = false;
  bool is_regular_local_containing_field = false;
};

/// Whether the odd-indexed Witt groups of C_0(q) and C(q) are known to vanish.
VanishingVerdict odd_witt_vanishes(const RingFacts& ring);

}  // namespace wq
