#include "wq/classify.hpp"

#include <array>

#include "wq/error.hpp"

namespace wq {

std::size_t delta(std::size_t n) {
  std::size_t count = 0;
  for (std::size_t l = 1; l < n; ++l) {
    const std::size_t r = l % 8;
    if (r == 0 || r == 1 || r == 2 || r == 4) ++count;
  }
  return count;
}

std::string_view to_string(CoreAlgebra core) noexcept {
  switch (core) {
    case CoreAlgebra::K: return "k";
    case CoreAlgebra::X: return "X";
    case CoreAlgebra::Y: return "Y";
    case CoreAlgebra::KxK: return "k x k";
    case CoreAlgebra::YxY: return "Y x Y";
  }
  return "?";
}

std::string_view to_string(InvolutionType type) noexcept {
  switch (type) {
    case InvolutionType::Orthogonal: return "orthogonal";
    case InvolutionType::Symplectic: return "symplectic";
    case InvolutionType::Unitary: return "unitary";
  }
  return "?";
}

std::size_t core_dimension(CoreAlgebra core) noexcept {
  switch (core) {
    case CoreAlgebra::K: return 1;
    case CoreAlgebra::X: return 2;
    case CoreAlgebra::Y: return 4;
    case CoreAlgebra::KxK: return 2;
    case CoreAlgebra::YxY: return 8;
  }
  return 0;
}

std::size_t core_irreducible_dimension(CoreAlgebra core) noexcept {
  switch (core) {
    case CoreAlgebra::K:
    case CoreAlgebra::KxK: return 1;
    case CoreAlgebra::X: return 2;
    case CoreAlgebra::Y:
    case CoreAlgebra::YxY: return 4;
  }
  return 0;
}

std::string AlgebraClass::algebra_name() const {
  auto simple = [this](std::string_view factor) {
    if (matrix_size == 1) return std::string(factor);
    return "M" + std::to_string(matrix_size) + "(" + std::string(factor) + ")";
  };
  switch (core) {
    case CoreAlgebra::KxK: return simple("k") + " x " + simple("k");
    case CoreAlgebra::YxY: return simple("Y") + " x " + simple("Y");
    default: return simple(to_string(core));
  }
}

AlgebraClass classify_C0_definite(std::size_t n) {
  if (n < 2) throw Error(Errc::RankTooSmall, "C_0 classification needs n >= 2");
  // C_0^{0,n} = C^{n-1,0} for n = 2..9; one period further multiplies the
  // matrix size by 16.
  static constexpr std::array<AlgebraClass, 8> base = {{
      {1, CoreAlgebra::X, InvolutionType::Unitary},       // n = 2
      {1, CoreAlgebra::Y, InvolutionType::Symplectic},    // n = 3
      {1, CoreAlgebra::YxY, InvolutionType::Symplectic},  // n = 4
      {2, CoreAlgebra::Y, InvolutionType::Symplectic},    // n = 5
      {4, CoreAlgebra::X, InvolutionType::Unitary},       // n = 6
      {8, CoreAlgebra::K, InvolutionType::Orthogonal},    // n = 7
      {8, CoreAlgebra::KxK, InvolutionType::Orthogonal},  // n = 8
      {16, CoreAlgebra::K, InvolutionType::Orthogonal},   // n = 9
  }};
  AlgebraClass cls = base[(n - 2) % 8];
  for (std::size_t period = 0; period < (n - 2) / 8; ++period) cls.matrix_size *= 16;
  return cls;
}

C0WittGroups witt_groups_of_C0_real(std::size_t n) {
  if (n < 2) throw Error(Errc::RankTooSmall, "C_0 Witt groups need n >= 2");
  const std::size_t r = n % 8;
  const AbelianGroup z = AbelianGroup::free(1);
  const AbelianGroup z2 = AbelianGroup::cyclic(2);
  if (n % 2 == 1) {
    // Morita-equivalent to H (n = 3, 5 mod 8) or R (n = 1, 7 mod 8).
    return {z, (r == 3 || r == 5) ? z2 : AbelianGroup::trivial()};
  }
  switch (r) {
    case 2:
    case 6: return {z, z};                               // C, unitary
    case 4: return {AbelianGroup::free(2), z2.direct_sum(z2)};  // H x H
    default: return {AbelianGroup::free(2), AbelianGroup::trivial()};  // R x R
  }
}

std::string_view to_string(VanishingJustification j) noexcept {
  switch (j) {
    case VanishingJustification::Field: return "field";
    case VanishingJustification::Semiperfect: return "semiperfect";
    case VanishingJustification::HenselianPair: return "henselian-pair";
    case VanishingJustification::ResidueFieldLift: return "residue-field-lift";
    case VanishingJustification::RegularLocalContainingField: return "regular-local-containing-field";
    case VanishingJustification::Unknown: return "unknown";
  }
  return "unknown";
}

VanishingVerdict odd_witt_vanishes(const RingFacts& ring) {
  if (ring.is_field_char_ne_2) return {true, VanishingJustification::Field};
  if (ring.is_semiperfect) return {true, VanishingJustification::Semiperfect};
  if (ring.is_henselian_pair) return {true, VanishingJustification::HenselianPair};
  if (ring.is_local_with_lifted_residue_field) return {true, VanishingJustification::ResidueFieldLift};
  if (ring.is_regular_local_containing_field) return {true, VanishingJustification::RegularLocalContainingField};
  return {false, VanishingJustification::Unknown};
}

}  // namespace wq
