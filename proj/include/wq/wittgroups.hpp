#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wq/abelian.hpp"
#include "wq/classify.hpp"
#include "wq/qform.hpp"

namespace wq {

/// A Witt group answer: either a concrete group or a symbolic expression in
/// the atoms W0(k), W0(k,det P), W0(C0(q)_sigma), W2(C0(q)_sigma), ker(tr),
/// coker(tr).
class WittEntry {
 public:
  static WittEntry determined(AbelianGroup group, std::string provenance);
  static WittEntry symbolic(std::string expression, std::string provenance);

  bool is_determined() const noexcept { return std::holds_alternative<AbelianGroup>(value_); }
  const AbelianGroup& group() const;
  const std::string& provenance() const noexcept { return provenance_; }
  std::string to_string() const;

  friend bool operator==(const WittEntry&, const WittEntry&) = default;

 private:
  WittEntry(std::variant<AbelianGroup, std::string> value, std::string provenance)
      : value_(std::move(value)), provenance_(std::move(provenance)) {}

  std::variant<AbelianGroup, std::string> value_;
  std::string provenance_;
};

struct SequenceNode {
  std::string label;
  WittEntry entry;
  friend bool operator==(const SequenceNode&, const SequenceNode&) = default;
};

/// Long exact sequence. maps[i] goes from nodes[i] to nodes[i+1]; a cyclic
/// sequence also has maps.back() from the last node to the first.
struct ExactSequence {
  std::string name;
  std::string provenance;
  bool cyclic = false;
  std::vector<SequenceNode> nodes;
  std::vector<std::optional<GroupMap>> maps;

  friend bool operator==(const ExactSequence&, const ExactSequence&) = default;
};

struct ExactnessCheck {
  std::size_t position;
  bool exact;
};

/// Checks im = ker at every node whose two neighbours, the node itself and
/// both adjacent maps are determined.
std::vector<ExactnessCheck> audit_exactness(const ExactSequence& seq);

enum class ParityCase { OddDimension, DimensionTwoMod4, DimensionZeroMod4 };

std::string_view to_string(ParityCase parity) noexcept;
ParityCase parity_case(std::size_t d) noexcept;

struct WittReport {
  std::string input;
  std::size_t d = 0;
  ParityCase parity = ParityCase::OddDimension;
  // W^0 .. W^3 of the quadric.
  std::vector<WittEntry> entries;
  std::vector<ExactSequence> sequences;
  std::vector<std::string> notes;
};

// Compares everything except the input echo.
bool same_content(const WittReport& a, const WittReport& b);

/// tr: W0(C_0(n<1>)) -> W0(R) on the standard generators.
GroupMap trace_map_real_definite(std::size_t n);

/// Witt groups of the quadric m<-1> + n<1> over the reals.
WittReport quadric_witt_real(std::size_t m, std::size_t n);

/// Case tables and exact sequences over a semilocal ring, symbolic in the
/// coefficient-algebra data.
WittReport quadric_witt_semilocal_report(std::size_t d, bool det_trivial, const VanishingVerdict& assumptions);

/// W0(R) / <<a1 a2, ..., a1 an>> W0(R) for odd n.
AbelianGroup pfister_cokernel_real(const DiagonalForm& q);

}  // namespace wq
