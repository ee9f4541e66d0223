#include "wq/wittgroups.hpp"

#include <utility>

namespace wq {

WittEntry WittEntry::determined(AbelianGroup group, std::string provenance) {
  if (provenance.empty()) throw Error(Errc::InvalidArgument, "determined entry without provenance");
  return WittEntry(std::move(group), std::move(provenance));
}

WittEntry WittEntry::symbolic(std::string expression, std::string provenance) {
  return WittEntry(std::move(expression), std::move(provenance));
}

const AbelianGroup& WittEntry::group() const {
  if (!is_determined()) throw Error(Errc::InvalidArgument, "symbolic entry has no group");
  return std::get<AbelianGroup>(value_);
}

std::string WittEntry::to_string() const {
  if (is_determined()) return group().to_string();
  return std::get<std::string>(value_);
}

std::string_view to_string(ParityCase parity) noexcept {
  switch (parity) {
    case ParityCase::OddDimension: return "d odd";
    case ParityCase::DimensionTwoMod4: return "d = 2 mod 4";
    case ParityCase::DimensionZeroMod4: return "d = 0 mod 4";
  }
  return "?";
}

ParityCase parity_case(std::size_t d) noexcept {
  if (d % 2 == 1) return ParityCase::OddDimension;
  return d % 4 == 2 ? ParityCase::DimensionTwoMod4 : ParityCase::DimensionZeroMod4;
}

bool same_content(const WittReport& a, const WittReport& b) {
  return a.d == b.d && a.parity == b.parity && a.entries == b.entries && a.sequences == b.sequences &&
         a.notes == b.notes;
}

std::vector<ExactnessCheck> audit_exactness(const ExactSequence& seq) {
  const std::size_t count = seq.nodes.size();
  std::vector<ExactnessCheck> checks;
  if (count < 3) return checks;
  const std::size_t first = seq.cyclic ? 0 : 1;
  const std::size_t last = seq.cyclic ? count : count - 1;
  for (std::size_t j = first; j < last; ++j) {
    const std::size_t prev = (j + count - 1) % count;
    const std::size_t next = (j + 1) % count;
    const auto& in = seq.maps[prev];
    const auto& out = seq.maps[j];
    if (!in || !out) continue;
    if (!seq.nodes[prev].entry.is_determined() || !seq.nodes[j].entry.is_determined() ||
        !seq.nodes[next].entry.is_determined()) {
      continue;
    }
    checks.push_back({j, is_exact_at(*in, *out)});
  }
  return checks;
}

namespace {

const AbelianGroup kZ = AbelianGroup::free(1);
const AbelianGroup kZero = AbelianGroup::trivial();

mpz_class pow2(std::size_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

SequenceNode node(std::string label, WittEntry entry) { return {std::move(label), std::move(entry)}; }

SequenceNode zero_node(std::string label, std::string provenance) {
  return node(std::move(label), WittEntry::determined(kZero, std::move(provenance)));
}

SequenceNode symbolic_node(std::string label, std::string provenance) {
  std::string expr = label;
  return node(std::move(label), WittEntry::symbolic(std::move(expr), std::move(provenance)));
}

ExactSequence make_sequence(std::string name, std::string provenance, bool cyclic, std::vector<SequenceNode> nodes) {
  ExactSequence seq{std::move(name), std::move(provenance), cyclic, std::move(nodes), {}};
  seq.maps.resize(cyclic ? seq.nodes.size() : seq.nodes.size() - 1);
  return seq;
}

// Any map into or out of a determined trivial group is the zero map.
void fill_zero_maps(ExactSequence& seq) {
  const std::size_t count = seq.nodes.size();
  for (std::size_t i = 0; i < seq.maps.size(); ++i) {
    if (seq.maps[i]) continue;
    const auto& src = seq.nodes[i].entry;
    const auto& dst = seq.nodes[(i + 1) % count].entry;
    if (!src.is_determined() || !dst.is_determined()) continue;
    if (src.group().is_trivial() || dst.group().is_trivial()) {
      seq.maps[i] = GroupMap::zero(src.group(), dst.group());
    }
  }
}

void set_map(ExactSequence& seq, std::size_t from, IntMatrix matrix) {
  const std::size_t count = seq.nodes.size();
  seq.maps[from] = GroupMap(seq.nodes[from].entry.group(), seq.nodes[(from + 1) % count].entry.group(),
                            std::move(matrix));
}

void require_exact(const WittReport& report) {
  for (const auto& seq : report.sequences) {
    for (const auto& check : audit_exactness(seq)) {
      if (!check.exact) {
        throw Error(Errc::InvariantViolation, seq.name + " fails exactness at " + seq.nodes[check.position].label);
      }
    }
  }
}

// Closed-form W^i(Q_{0,n}) over the reals.
std::vector<WittEntry> definite_entries(std::size_t n) {
  const std::string source = n % 2 ? "Corollary QRodd" : "Corollary QReven";
  const AbelianGroup w0 = AbelianGroup::cyclic(pow2(delta(n)));
  AbelianGroup w1 = kZero;
  if (n % 2 == 1 && (n % 8 == 3 || n % 8 == 5)) w1 = AbelianGroup::cyclic(2);
  if (n % 2 == 0 && n % 8 == 4) w1 = AbelianGroup::cyclic(2).direct_sum(AbelianGroup::cyclic(2));
  return {WittEntry::determined(w0, source + "; Theorem " + (n % 2 ? "Wn1odd" : "Wn1even")),
          WittEntry::determined(w1, source), WittEntry::determined(kZero, source),
          WittEntry::determined(kZero, source)};
}

WittReport definite_report(std::size_t n, std::string input) {
  const std::size_t d = n - 2;
  WittReport report{std::move(input), d, parity_case(d), definite_entries(n), {}, {}};
  const auto& w = report.entries;
  const GroupMap tr = trace_map_real_definite(n);
  const C0WittGroups c0 = witt_groups_of_C0_real(n);
  const std::string c0_source = "Table " + std::string(n % 2 ? "1" : "2") + " with Morita equivalence";
  const std::string real_source = "W0(R) = Z, W2(R) = 0, W^odd(R) = 0";
  auto k_node = [&](int i) {
    return i == 0 ? node("W0(k)", WittEntry::determined(kZ, real_source))
                  : zero_node("W" + std::to_string(i) + "(k)", real_source);
  };
  auto c0_node = [&](int i) {
    const std::string label = "W" + std::to_string(i) + "(C0(q)_sigma)";
    if (i == 0) return node(label, WittEntry::determined(c0.w0, c0_source));
    if (i == 2) return node(label, WittEntry::determined(c0.w2, c0_source));
    return zero_node(label, "odd Witt groups of C0 vanish over a field");
  };
  auto q_node = [&](int i) { return node("W" + std::to_string(i) + "(Q)", w[i]); };

  if (n % 2 == 1) {
    ExactSequence seq = make_sequence(
        "12-term long exact sequence", "Theorem WQod", true,
        {k_node(0), q_node(0), c0_node(1), k_node(1), q_node(1), c0_node(2), k_node(2), q_node(2), c0_node(3),
         k_node(3), q_node(3), c0_node(0)});
    set_map(seq, 0, IntMatrix{{1}});                                      // p*
    set_map(seq, 4, IntMatrix::identity(w[1].group().generator_count()));  // W1(Q) = W2(C0)
    seq.maps[11] = tr;
    fill_zero_maps(seq);
    report.sequences.push_back(std::move(seq));
    report.notes.push_back("Pfister quotient " + pfister_cokernel_real(DiagonalForm::split_signs(FieldSpec::real(), 0, n)).to_string() +
                           " surjects onto W0(Q); the trace ideal sharpens it to " + w[0].to_string());
  } else {
    const AbelianGroup coker = cokernel(tr);
    const AbelianGroup ker = kernel(tr);
    const std::string a_source = "Theorem WQeve (sequence for the subcategory A)";
    auto a_node = [&](int i) {
      const std::string label = "W" + std::to_string(i) + "(A)";
      switch (i) {
        case 0: return node(label, WittEntry::determined(coker, a_source));
        case 1: return node(label, WittEntry::determined(c0.w2, a_source));
        case 2: return zero_node(label, a_source);
        default: return node(label, WittEntry::determined(ker, a_source));
      }
    };
    ExactSequence first = make_sequence(
        "12-term sequence for A", a_source, true,
        {k_node(0), a_node(0), c0_node(1), k_node(1), a_node(1), c0_node(2), k_node(2), a_node(2), c0_node(3),
         k_node(3), a_node(3), c0_node(0)});
    set_map(first, 0, IntMatrix{{1}});
    set_map(first, 4, IntMatrix::identity(c0.w2.generator_count()));
    set_map(first, 10, kernel_inclusion(tr).matrix());
    first.maps[11] = tr;
    fill_zero_maps(first);

    // W^i(A) -> W^i(Q) -> W^{i-d}(k, det P) -> W^{i+1}(A); det P is a square.
    std::vector<SequenceNode> nodes;
    for (int i = 0; i < 4; ++i) {
      nodes.push_back(a_node(i));
      nodes.push_back(q_node(i));
      const int shifted = static_cast<int>((i - static_cast<int>(d % 4) + 4) % 4);
      nodes.push_back(k_node(shifted));
    }
    ExactSequence second = make_sequence("12-term sequence for Q", "Theorem WQeve", true, std::move(nodes));
    set_map(second, 0, IntMatrix::identity(coker.generator_count()));  // coker(tr) = W0(Q)
    if (d % 4 == 2) {
      // W0(k) sits at slot i = 2 and maps isomorphically onto ker(tr) = Z.
      set_map(second, 8, IntMatrix{{1}});
      set_map(second, 3, IntMatrix::identity(c0.w2.generator_count()));  // W1(A) = W1(Q)
    } else {
      // W0(k) sits at slot i = 0, maps to zero from W0(Q) and onto W2(C0) = Z.
      set_map(second, 1, IntMatrix(1, coker.generator_count()));
      set_map(second, 2, IntMatrix{{1}});
    }
    fill_zero_maps(second);
    report.sequences.push_back(std::move(first));
    report.sequences.push_back(std::move(second));
  }
  require_exact(report);
  return report;
}

WittReport isotropic_report(std::size_t d, std::string input) {
  WittReport report{std::move(input), d, parity_case(d), {}, {}, {}};
  const std::string w0k = "W0(R) = Z; Lemma isorational (p* split injective)";
  const std::string src = d % 2 ? "Corollary gewqodd" : "Corollary GWQkeven";
  const std::string note = "mixed-signature C0 involution is not tabulated";
  switch (report.parity) {
    case ParityCase::OddDimension:
      report.entries = {WittEntry::determined(kZ, src + "; " + w0k), WittEntry::symbolic("W2(C0(q)_sigma)", src),
                        WittEntry::determined(kZero, src), WittEntry::symbolic("W0(C0(q)_sigma)", src)};
      break;
    case ParityCase::DimensionTwoMod4: {
      report.entries = {WittEntry::determined(kZ, src + "; " + w0k), WittEntry::symbolic("W2(C0(q)_sigma)", src),
                        WittEntry::symbolic("ker(W0(k) -> W0(C0(q)_sigma))", src),
                        WittEntry::symbolic("coker(W0(k) -> W0(C0(q)_sigma))", src)};
      ExactSequence seq = make_sequence(
          "5-term exact sequence", src, false,
          {zero_node("0", src), symbolic_node("W2(Q)", src), node("W0(k)", WittEntry::determined(kZ, w0k)),
           symbolic_node("W0(C0(q)_sigma)", src), symbolic_node("W3(Q)", src), zero_node("0", src)});
      fill_zero_maps(seq);
      report.sequences.push_back(std::move(seq));
      break;
    }
    case ParityCase::DimensionZeroMod4: {
      report.entries = {WittEntry::symbolic("Z + ker(W0(k) -> W2(C0(q)_sigma))", src + "; " + w0k),
                        WittEntry::symbolic("coker(W0(k) -> W2(C0(q)_sigma))", src),
                        WittEntry::determined(kZero, src), WittEntry::symbolic("W0(C0(q)_sigma)", src)};
      ExactSequence seq = make_sequence(
          "6-term exact sequence", src, false,
          {zero_node("0", src), node("W0(k)", WittEntry::determined(kZ, w0k)), symbolic_node("W0(Q)", src),
           node("W0(k)", WittEntry::determined(kZ, w0k)), symbolic_node("W2(C0(q)_sigma)", src),
           symbolic_node("W1(Q)", src), zero_node("0", src)});
      fill_zero_maps(seq);
      report.sequences.push_back(std::move(seq));
      break;
    }
  }
  report.notes.push_back(note);
  return report;
}

}  // namespace

GroupMap trace_map_real_definite(std::size_t n) {
  if (n < 2) throw Error(Errc::RankTooSmall, "trace map needs n >= 2");
  const mpz_class scale = pow2(delta(n));
  IntMatrix m(1, 1);
  m(0, 0) = scale;
  if (n % 4 == 0) {
    m = IntMatrix(1, 2);
    m(0, 0) = scale;
    m(0, 1) = scale;
    return GroupMap(AbelianGroup::free(2), kZ, std::move(m));
  }
  return GroupMap(kZ, kZ, std::move(m));
}

WittReport quadric_witt_real(std::size_t m, std::size_t n) {
  if (m + n < 2) throw Error(Errc::EmptyQuadric, "m + n must be at least 2");
  const std::string input = std::to_string(m) + "<-1> + " + std::to_string(n) + "<1>";
  if (m == 0 || n == 0) {
    WittReport report = definite_report(m + n, input);
    report.notes.push_back("Q_{0,n} and Q_{n,0} are isomorphic varieties");
    return report;
  }
  return isotropic_report(m + n - 2, input);
}

WittReport quadric_witt_semilocal_report(std::size_t d, bool det_trivial, const VanishingVerdict& assumptions) {
  if (!assumptions.vanishes) {
    throw Error(Errc::HypothesisNotMet, "odd Witt groups of C0(q) are not known to vanish");
  }
  const std::string wk = det_trivial ? "W0(k)" : "W0(k,det P)";
  const ParityCase parity = parity_case(d);
  const std::string src = d % 2 ? "Theorem WQod" : "Theorem WQeve";
  const std::string semilocal = "W^i(k) = 0 for i odd (semilocal)";
  WittReport report{"semilocal, d = " + std::to_string(d), d, parity, {}, {}, {}};
  report.notes.push_back(std::string("odd Witt groups of C0 vanish: ") + std::string(to_string(assumptions.justification)));

  auto k_node = [&](int i) {
    return i == 0 ? symbolic_node("W0(k)", src) : (i == 2 ? symbolic_node("W2(k)", src) : zero_node("W" + std::to_string(i) + "(k)", semilocal));
  };
  auto c0_node = [&](int i) {
    const std::string label = "W" + std::to_string(i) + "(C0(q)_sigma)";
    return i % 2 ? zero_node(label, "hypothesis: odd Witt groups of C0 vanish") : symbolic_node(label, src);
  };

  switch (parity) {
    case ParityCase::OddDimension: {
      report.entries = {WittEntry::symbolic("coker(tr)", src), WittEntry::symbolic("W2(C0(q)_sigma)", src),
                        WittEntry::determined(kZero, src), WittEntry::symbolic("ker(tr)", src)};
      auto q_node = [&](int i) { return node("W" + std::to_string(i) + "(Q)", report.entries[i]); };
      ExactSequence seq = make_sequence(
          "12-term long exact sequence", src, true,
          {k_node(0), q_node(0), c0_node(1), k_node(1), q_node(1), c0_node(2), k_node(2), q_node(2), c0_node(3),
           k_node(3), q_node(3), c0_node(0)});
      fill_zero_maps(seq);
      report.sequences.push_back(std::move(seq));
      break;
    }
    case ParityCase::DimensionTwoMod4: {
      report.entries = {WittEntry::symbolic("coker(tr)", src), WittEntry::symbolic("W2(C0(q)_sigma)", src),
                        WittEntry::symbolic("ker(" + wk + " -> ker(tr))", src),
                        WittEntry::symbolic("coker(" + wk + " -> ker(tr))", src)};
      ExactSequence seq = make_sequence("5-term exact sequence", src, false,
                                        {zero_node("0", src), symbolic_node("W2(Q)", src), symbolic_node(wk, src),
                                         symbolic_node("ker(tr)", src), symbolic_node("W3(Q)", src),
                                         zero_node("0", src)});
      fill_zero_maps(seq);
      report.sequences.push_back(std::move(seq));
      break;
    }
    case ParityCase::DimensionZeroMod4: {
      report.entries = {WittEntry::symbolic("extension of ker(" + wk + " -> W2(C0(q)_sigma)) by coker(tr)", src),
                        WittEntry::symbolic("coker(" + wk + " -> W2(C0(q)_sigma))", src),
                        WittEntry::determined(kZero, src), WittEntry::symbolic("ker(tr)", src)};
      ExactSequence seq = make_sequence(
          "6-term exact sequence", src, false,
          {zero_node("0", src), symbolic_node("coker(tr)", src), symbolic_node("W0(Q)", src),
           symbolic_node(wk, src), symbolic_node("W2(C0(q)_sigma)", src), symbolic_node("W1(Q)", src),
           zero_node("0", src)});
      fill_zero_maps(seq);
      report.sequences.push_back(std::move(seq));
      break;
    }
  }
  if (parity != ParityCase::OddDimension) {
    // The sequence for the subcategory A is the odd-dimensional table.
    const std::string a_src = "Theorem WQeve (sequence for the subcategory A)";
    auto a_node = [&](int i) {
      const std::string label = "W" + std::to_string(i) + "(A)";
      switch (i) {
        case 0: return node(label, WittEntry::symbolic("coker(tr)", a_src));
        case 1: return node(label, WittEntry::symbolic("W2(C0(q)_sigma)", a_src));
        case 2: return zero_node(label, a_src);
        default: return node(label, WittEntry::symbolic("ker(tr)", a_src));
      }
    };
    ExactSequence seq = make_sequence(
        "12-term sequence for A", a_src, true,
        {k_node(0), a_node(0), c0_node(1), k_node(1), a_node(1), c0_node(2), k_node(2), a_node(2), c0_node(3),
         k_node(3), a_node(3), c0_node(0)});
    fill_zero_maps(seq);
    report.sequences.push_back(std::move(seq));
  }
  require_exact(report);
  return report;
}

AbelianGroup pfister_cokernel_real(const DiagonalForm& q) {
  if (q.field().kind() != FieldKind::RealExact) {
    throw Error(Errc::UnsupportedField, "Pfister quotient is evaluated over the reals");
  }
  if (q.rank() % 2 == 0) throw Error(Errc::EvenRank, "Pfister quotient needs odd rank");
  if (q.rank() < 3) throw Error(Errc::RankTooSmall, "Pfister quotient needs rank >= 3");
  // Signature of <<b_2, ..., b_n>> is the product of (1 + sign b_j).
  mpz_class s = 1;
  for (std::size_t j = 1; j < q.rank(); ++j) {
    if (signum(q[0] * q[j]) < 0) return kZ;
    s *= 2;
  }
  return AbelianGroup::cyclic(s);
}

}  // namespace wq
