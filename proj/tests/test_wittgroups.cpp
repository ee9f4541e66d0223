#include <doctest.h>

#include "wq/wittgroups.hpp"

using namespace wq;

namespace {
const FieldSpec R = FieldSpec::real();
const AbelianGroup Z = AbelianGroup::free(1);
const AbelianGroup Z2 = AbelianGroup::cyclic(2);
const AbelianGroup Zero = AbelianGroup::trivial();

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::InvalidArgument;
}

std::vector<std::string> values(const WittReport& r) {
  std::vector<std::string> out;
  for (const auto& e : r.entries) out.push_back(e.to_string());
  return out;
}

bool all_exact(const WittReport& r) {
  for (const auto& seq : r.sequences)
    for (const auto& check : audit_exactness(seq))
      if (!check.exact) return false;
  return true;
}

std::size_t audited(const WittReport& r) {
  std::size_t count = 0;
  for (const auto& seq : r.sequences) count += audit_exactness(seq).size();
  return count;
}

const VanishingVerdict field_verdict{true, VanishingJustification::Field};
}  // namespace

TEST_CASE("trace map examples") {
  const GroupMap t3 = trace_map_real_definite(3);
  CHECK(t3.domain() == Z);
  CHECK(t3.matrix() == IntMatrix{{4}});
  const GroupMap t4 = trace_map_real_definite(4);
  CHECK(t4.domain() == AbelianGroup::free(2));
  CHECK(t4.matrix() == IntMatrix{{4, 4}});
  CHECK(trace_map_real_definite(7).matrix() == IntMatrix{{8}});
  CHECK(code_of([] { trace_map_real_definite(1); }) == Errc::RankTooSmall);
}

TEST_CASE("definite real quadrics") {
  const WittReport r3 = quadric_witt_real(0, 3);
  CHECK(values(r3) == std::vector<std::string>{"Z/4", "Z/2", "0", "0"});
  CHECK(r3.parity == ParityCase::OddDimension);
  CHECK(r3.entries[0].provenance().find("Corollary QRodd") != std::string::npos);
  CHECK(r3.sequences.size() == 1);
  CHECK(r3.sequences[0].nodes.size() == 12);
  CHECK(audited(r3) == 12);

  const WittReport r4 = quadric_witt_real(0, 4);
  CHECK(values(r4) == std::vector<std::string>{"Z/4", "Z/2 + Z/2", "0", "0"});
  CHECK(r4.entries[1].provenance() == "Corollary QReven");
  CHECK(r4.sequences.size() == 2);
  CHECK(audited(r4) == 24);

  CHECK(values(quadric_witt_real(0, 6)) == std::vector<std::string>{"Z/8", "0", "0", "0"});
  CHECK(values(quadric_witt_real(9, 0)) == std::vector<std::string>{"Z/16", "0", "0", "0"});
  CHECK(values(quadric_witt_real(0, 2)) == std::vector<std::string>{"Z/2", "0", "0", "0"});
  CHECK(code_of([] { quadric_witt_real(1, 0); }) == Errc::EmptyQuadric);
  CHECK(code_of([] { quadric_witt_real(0, 0); }) == Errc::EmptyQuadric);
}

TEST_CASE("isotropic real quadrics") {
  const WittReport r = quadric_witt_real(1, 2);
  CHECK(r.d == 1);
  CHECK(r.entries[0].is_determined());
  CHECK(r.entries[0].group() == Z);
  CHECK(r.entries[2].is_determined());
  CHECK(r.entries[2].group().is_trivial());
  CHECK_FALSE(r.entries[1].is_determined());
  CHECK(r.entries[1].to_string() == "W2(C0(q)_sigma)");
  CHECK_FALSE(r.entries[3].is_determined());
  CHECK(r.entries[3].to_string() == "W0(C0(q)_sigma)");

  const WittReport r22 = quadric_witt_real(2, 2);
  CHECK(r22.parity == ParityCase::DimensionTwoMod4);
  CHECK(r22.entries[0].group() == Z);
  CHECK(r22.sequences.size() == 1);

  const WittReport r33 = quadric_witt_real(3, 3);
  CHECK(r33.parity == ParityCase::DimensionZeroMod4);
  CHECK(r33.entries[2].group().is_trivial());
  CHECK_FALSE(r33.entries[0].is_determined());
}

TEST_CASE("semilocal reports") {
  const WittReport d3 = quadric_witt_semilocal_report(3, true, field_verdict);
  CHECK(values(d3) == std::vector<std::string>{"coker(tr)", "W2(C0(q)_sigma)", "0", "ker(tr)"});

  const WittReport d2 = quadric_witt_semilocal_report(2, false, field_verdict);
  bool found = false;
  for (const auto& seq : d2.sequences) {
    if (seq.name != "5-term exact sequence") continue;
    found = true;
    std::vector<std::string> labels;
    for (const auto& n : seq.nodes) labels.push_back(n.label);
    CHECK(labels == std::vector<std::string>{"0", "W2(Q)", "W0(k,det P)", "ker(tr)", "W3(Q)", "0"});
  }
  CHECK(found);

  const WittReport d4 = quadric_witt_semilocal_report(4, true, field_verdict);
  found = false;
  for (const auto& seq : d4.sequences) {
    if (seq.name != "6-term exact sequence") continue;
    found = true;
    std::vector<std::string> labels;
    for (const auto& n : seq.nodes) labels.push_back(n.label);
    CHECK(labels == std::vector<std::string>{"0", "coker(tr)", "W0(Q)", "W0(k)", "W2(C0(q)_sigma)", "W1(Q)", "0"});
  }
  CHECK(found);

  CHECK(code_of([] { quadric_witt_semilocal_report(3, true, {false, VanishingJustification::Unknown}); }) ==
        Errc::HypothesisNotMet);
}

TEST_CASE("Pfister quotient over the reals") {
  CHECK(pfister_cokernel_real(DiagonalForm(R, {1, 1, 1})) == AbelianGroup::cyclic(4));
  CHECK(pfister_cokernel_real(DiagonalForm::split_signs(R, 0, 5)) == AbelianGroup::cyclic(16));
  // A hyperbolic Pfister form generates the zero ideal, leaving all of W(R).
  CHECK(pfister_cokernel_real(DiagonalForm(R, {1, 1, -1})) == Z);
  CHECK(code_of([] { pfister_cokernel_real(DiagonalForm(FieldSpec::rational(), {1, 1, 1})); }) ==
        Errc::UnsupportedField);
  CHECK(code_of([] { pfister_cokernel_real(DiagonalForm(R, {1, 1, 1, 1})); }) == Errc::EvenRank);
  CHECK(code_of([] { pfister_cokernel_real(DiagonalForm(R, {1})); }) == Errc::RankTooSmall);
}

TEST_CASE("exactness audit catches a broken sequence") {
  ExactSequence seq{"broken", "test", false, {}, {}};
  seq.nodes = {{"A", WittEntry::determined(Z, "t")},
               {"B", WittEntry::determined(Z, "t")},
               {"C", WittEntry::determined(Z2, "t")}};
  seq.maps = {GroupMap(Z, Z, IntMatrix{{4}}), GroupMap(Z, Z2, IntMatrix{{1}})};
  const auto checks = audit_exactness(seq);
  REQUIRE(checks.size() == 1);
  CHECK_FALSE(checks[0].exact);
  seq.maps[0] = GroupMap(Z, Z, IntMatrix{{2}});
  CHECK(audit_exactness(seq)[0].exact);
  CHECK_THROWS_AS(WittEntry::determined(Z, ""), Error);
}

TEST_CASE("property: quadric symmetry") {
  for (std::size_t total = 2; total <= 12; ++total)
    for (std::size_t m = 0; m <= total; ++m)
      CHECK(same_content(quadric_witt_real(m, total - m), quadric_witt_real(total - m, m)));
}

TEST_CASE("property: two paths to W0 agree") {
  for (std::size_t n = 2; n <= 26; ++n) {
    CHECK(cokernel(trace_map_real_definite(n)) == quadric_witt_real(0, n).entries[0].group());
  }
}

TEST_CASE("property: every emitted sequence is exact") {
  for (std::size_t n = 2; n <= 26; ++n) CHECK(all_exact(quadric_witt_real(0, n)));
  for (std::size_t d = 1; d <= 12; ++d) {
    CHECK(all_exact(quadric_witt_semilocal_report(d, true, field_verdict)));
    CHECK(all_exact(quadric_witt_semilocal_report(d, false, field_verdict)));
  }
  for (std::size_t total = 2; total <= 12; ++total)
    for (std::size_t m = 1; m < total; ++m) CHECK(all_exact(quadric_witt_real(m, total - m)));
}

TEST_CASE("property: determined entries carry provenance") {
  for (std::size_t total = 2; total <= 12; ++total)
    for (std::size_t m = 0; m <= total; ++m) {
      for (const auto& e : quadric_witt_real(m, total - m).entries) CHECK_FALSE(e.provenance().empty());
    }
}
