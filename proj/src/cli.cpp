#include "wq/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wq/abelian.hpp"
#include "wq/classify.hpp"
#include "wq/clifford.hpp"
#include "wq/error.hpp"
#include "wq/qform.hpp"
#include "wq/scalars.hpp"
#include "wq/wittgroups.hpp"

namespace wq::cli {

using nlohmann::ordered_json;

namespace {

struct Request {
  std::string command;
  std::string field = "real";
  std::uint64_t p = 0;
  std::vector<std::string> form;
  std::optional<std::size_t> n;
  std::optional<std::size_t> d;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  bool pretty = false;
  std::size_t max_rank = kDefaultRankCap;
};

std::size_t default_max_rank() {
  const char* env = std::getenv("WQ_MAX_RANK");
  if (env == nullptr || *env == '\0') return kDefaultRankCap;
  char* end = nullptr;
  const unsigned long value = std::strtoul(env, &end, 10);
  if (*end != '\0' || value == 0 || value > 20) {
    throw Error(Errc::InvalidArgument, "WQ_MAX_RANK must be an integer in 1..20");
  }
  return value;
}

FieldSpec field_of(const Request& req) {
  if (req.field == "real") return FieldSpec::real();
  if (req.field == "rational") return FieldSpec::rational();
  if (req.field == "fp") {
    if (req.p == 0) throw Error(Errc::InvalidArgument, "--field fp needs --p");
    return FieldSpec::prime(req.p);
  }
  throw Error(Errc::InvalidArgument, "unknown field '" + req.field + "'");
}

// "v:m" tokens, optionally comma separated.
DiagonalForm parse_form(const FieldSpec& field, const std::vector<std::string>& tokens) {
  std::vector<Scalar> coeffs;
  for (const auto& token : tokens) {
    std::stringstream pieces(token);
    std::string piece;
    while (std::getline(pieces, piece, ',')) {
      if (piece.empty()) continue;
      const auto colon = piece.rfind(':');
      if (colon == std::string::npos || colon == 0 || colon + 1 == piece.size()) {
        throw Error(Errc::InvalidArgument, "form term '" + piece + "' is not value:multiplicity");
      }
      const std::string count_text = piece.substr(colon + 1);
      if (!std::all_of(count_text.begin(), count_text.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
          count_text.size() > 3) {
        throw Error(Errc::InvalidArgument, "bad multiplicity in '" + piece + "'");
      }
      const Scalar value = Scalar::parse(field, piece.substr(0, colon));
      if (value.is_zero()) throw Error(Errc::ZeroInput, "form coefficient is zero in '" + piece + "'");
      coeffs.insert(coeffs.end(), std::stoul(count_text), value);
    }
  }
  return DiagonalForm(field, std::move(coeffs));
}

DiagonalForm require_form(const Request& req) {
  if (req.form.empty()) throw Error(Errc::InvalidArgument, req.command + " needs --form");
  return parse_form(field_of(req), req.form);
}

ordered_json matrix_json(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json entry_json(const WittEntry& e) {
  ordered_json j;
  j["value"] = e.to_string();
  j["determined"] = e.is_determined();
  j["provenance"] = e.provenance();
  return j;
}

void collect_sources(const std::string& provenance, std::set<std::string>& out) {
  std::stringstream parts(provenance);
  std::string part;
  while (std::getline(parts, part, ';')) {
    const auto start = part.find_first_not_of(' ');
    if (start != std::string::npos) out.insert(part.substr(start));
  }
}

struct Body {
  ordered_json input;
  ordered_json results;
  std::set<std::string> provenance;
};

Body report_body(const WittReport& report) {
  Body body;
  body.results["d"] = report.d;
  body.results["parity"] = std::string(to_string(report.parity));
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    body.results["W" + std::to_string(i)] = report.entries[i].to_string();
    collect_sources(report.entries[i].provenance(), body.provenance);
  }
  ordered_json detail = ordered_json::object();
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    detail["W" + std::to_string(i)] = entry_json(report.entries[i]);
  }
  body.results["entries"] = std::move(detail);

  ordered_json sequences = ordered_json::array();
  for (const auto& seq : report.sequences) {
    ordered_json s;
    s["name"] = seq.name;
    s["provenance"] = seq.provenance;
    s["cyclic"] = seq.cyclic;
    ordered_json nodes = ordered_json::array();
    for (const auto& node : seq.nodes) {
      nodes.push_back({{"label", node.label}, {"value", node.entry.to_string()}, {"provenance", node.entry.provenance()}});
    }
    s["nodes"] = std::move(nodes);
    ordered_json maps = ordered_json::array();
    for (const auto& map : seq.maps) maps.push_back(map ? matrix_json(map->matrix()) : ordered_json(nullptr));
    s["maps"] = std::move(maps);
    ordered_json audit = ordered_json::array();
    for (const auto& check : audit_exactness(seq)) {
      audit.push_back({{"at", seq.nodes[check.position].label}, {"exact", check.exact}});
    }
    s["exactness"] = std::move(audit);
    sequences.push_back(std::move(s));
  }
  body.results["sequences"] = std::move(sequences);
  body.results["notes"] = report.notes;
  return body;
}

Body cmd_classify(const Request& req) {
  if (!req.n) throw Error(Errc::InvalidArgument, "classify needs --n");
  const std::size_t n = *req.n;
  const AlgebraClass cls = classify_C0_definite(n);
  const C0WittGroups groups = witt_groups_of_C0_real(n);
  Body body;
  body.input["n"] = n;
  body.results["algebra"] = cls.algebra_name();
  body.results["involution"] = std::string(to_string(cls.involution));
  body.results["delta"] = delta(n);
  body.results["matrix_size"] = cls.matrix_size;
  body.results["core"] = std::string(to_string(cls.core));
  body.results["dimension"] = cls.dimension();
  body.results["irreducible_dimension"] = cls.matrix_size * core_irreducible_dimension(cls.core);
  body.results["W0_C0"] = groups.w0.to_string();
  body.results["W2_C0"] = groups.w2.to_string();
  body.provenance = {n % 2 ? "Table 1" : "Table 2", "periodicity C^{n+8,0} = M16(C^{n,0})", "Morita equivalence"};
  return body;
}

Body cmd_witt(const Request& req) {
  const FieldSpec field = field_of(req);
  std::optional<DiagonalForm> form;
  if (!req.form.empty()) form = parse_form(field, req.form);

  if (field.kind() == FieldKind::RealExact && !req.d) {
    if (!form) throw Error(Errc::InvalidArgument, "witt over the reals needs --form");
    const Signature sig = signature(*form);
    Body body = report_body(quadric_witt_real(sig.neg, sig.pos));
    body.input["form"] = form->to_string();
    body.input["signature"] = {sig.pos, sig.neg};
    return body;
  }

  std::size_t d = 0;
  if (req.d) {
    d = *req.d;
    if (form && form->rank() != d + 2) {
      throw Error(Errc::RankMismatch, "--d must equal rank(form) - 2");
    }
  } else if (form) {
    if (form->rank() < 2) throw Error(Errc::EmptyQuadric, "quadric needs rank >= 2");
    d = form->rank() - 2;
  } else {
    throw Error(Errc::InvalidArgument, "witt needs --form or --d");
  }
  if (d == 0 && !form) throw Error(Errc::EmptyQuadric, "d must be at least 1");
  const bool det_trivial = form && is_square(form->determinant());
  RingFacts facts;
  facts.is_field_char_ne_2 = true;
  Body body = report_body(quadric_witt_semilocal_report(d, det_trivial, odd_witt_vanishes(facts)));
  if (form) body.input["form"] = form->to_string();
  body.input["d"] = d;
  body.input["det_trivial"] = det_trivial;
  return body;
}

Body cmd_oracle(const Request& req) {
  if (!req.n) throw Error(Errc::InvalidArgument, "oracle needs --n");
  const std::size_t n = *req.n;
  if (n > req.max_rank) throw Error(Errc::RankCapExceeded, "n exceeds --max-rank");
  // The oracle works over Q; "real" data is rational anyway.
  const FieldSpec field = req.field == "real" ? FieldSpec::rational() : field_of(req);
  const DiagonalForm q = DiagonalForm::split_signs(field, 0, n);
  IdealSearchOptions opts;
  opts.seed = req.seed;
  opts.jobs = req.jobs;
  const IdealSearchResult found = minimal_left_ideal(q, opts);
  const Diagonalization diag = diagonalize(restricted_trace_form(found.ideal));
  const Signature sig = signature(diag.form);
  Body body;
  body.input["n"] = n;
  body.input["field"] = field.name();
  body.input["seed"] = req.seed;
  body.results["ideal_dim"] = found.ideal.dimension();
  body.results["signature"] = {sig.pos, sig.neg};
  body.results["predicted"] = found.target_dimension;
  const bool definite = sig.neg == 0 && sig.pos == found.ideal.dimension();
  body.results["positive_definite"] = definite;
  body.results["candidate"] = found.candidate;
  body.results["candidate_dimensions"] = found.candidate_dimensions;
  body.results["trace_form"] = diag.form.to_string();
  body.provenance = {"oracle"};
  if (!definite) {
    throw Error(Errc::InvariantViolation, "restricted trace form is not positive definite");
  }
  return body;
}

Body cmd_verify_trace(const Request& req) {
  const DiagonalForm q = require_form(req);
  const DiagonalForm traced = trace_of_beta(q, req.max_rank);
  const DiagonalForm expected = pfister(q);
  // Entries agree up to square classes.
  bool same_classes = traced.rank() == expected.rank();
  std::vector<bool> used(expected.rank(), false);
  for (std::size_t i = 0; same_classes && i < traced.rank(); ++i) {
    std::size_t j = 0;
    while (j < expected.rank() && (used[j] || !is_square(traced[i] * expected[j]))) ++j;
    if (j == expected.rank()) same_classes = false;
    else used[j] = true;
  }
  Body body;
  body.input["form"] = q.to_string();
  body.input["field"] = q.field().name();
  body.results["rank"] = traced.rank();
  body.results["same_square_classes"] = same_classes;
  if (q.field().kind() == FieldKind::RationalExact) {
    body.results["witt_equivalent"] = nullptr;
  } else {
    body.results["witt_equivalent"] = witt_equivalent(traced, expected);
  }
  if (q.field().kind() == FieldKind::RealExact) {
    body.results["witt_class"] = witt_class_real(traced);
  }
  body.provenance = {"trace of beta is the Pfister form"};
  const bool ok = same_classes &&
                  (body.results["witt_equivalent"].is_null() || body.results["witt_equivalent"].get<bool>());
  if (!ok) throw Error(Errc::InvariantViolation, "trace form and Pfister form disagree");
  return body;
}

// ---- selfcheck -------------------------------------------------------------

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::size_t between(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  Scalar nonzero(const FieldSpec& field) {
    for (;;) {
      const long num = std::uniform_int_distribution<long>(-5, 5)(rng_);
      if (num == 0) continue;
      Scalar s(field, num);
      if (field.kind() != FieldKind::PrimeField && between(0, 2) == 0) {
        s = Scalar(field, mpq_class(num, static_cast<long>(between(1, 4))));
      }
      if (!s.is_zero()) return s;
    }
  }

  Scalar any(const FieldSpec& field) {
    return between(0, 3) == 0 ? Scalar::zero(field) : nonzero(field);
  }

  DiagonalForm form(const FieldSpec& field, std::size_t rank) {
    std::vector<Scalar> coeffs;
    for (std::size_t i = 0; i < rank; ++i) coeffs.push_back(nonzero(field));
    return DiagonalForm(field, std::move(coeffs));
  }

  CliffordElement element(const AlgebraPtr& algebra) {
    std::vector<CliffordElement::Term> terms;
    for (Blade b = 0; b < algebra->dimension(); ++b) {
      if (between(0, 2) == 0) continue;
      terms.emplace_back(b, nonzero(algebra->field()));
    }
    return CliffordElement(algebra, std::move(terms));
  }

 private:
  std::mt19937_64 rng_;
};

SuiteResult run_suite(const std::string& name, std::size_t trials, const std::function<bool(std::size_t)>& trial) {
  SuiteResult result{name};
  for (std::size_t i = 0; i < trials; ++i) {
    bool ok = false;
    try {
      ok = trial(i);
    } catch (const Error&) {
      ok = false;
    }
    ++(ok ? result.passed : result.failed);
  }
  return result;
}

std::vector<SuiteResult> selfcheck(std::uint64_t seed) {
  Sampler sample(seed);
  const std::vector<FieldSpec> fields = {FieldSpec::rational(), FieldSpec::prime(7)};
  std::vector<SuiteResult> out;

  out.push_back(run_suite("trace symmetry", 100, [&](std::size_t i) {
    const FieldSpec& f = fields[i % 2];
    const auto alg = CliffordAlgebra::make(sample.form(f, sample.between(1, 4)));
    const auto x = sample.element(alg);
    const auto y = sample.element(alg);
    return trace(x * y) == trace(y * x);
  }));
  out.push_back(run_suite("involution laws", 100, [&](std::size_t i) {
    const FieldSpec& f = fields[i % 2];
    const auto alg = CliffordAlgebra::make(sample.form(f, sample.between(1, 4)));
    const auto x = sample.element(alg);
    const auto y = sample.element(alg);
    return involution(involution(x)) == x && involution(x * y) == involution(y) * involution(x);
  }));
  out.push_back(run_suite("B non-degenerate", 20, [&](std::size_t i) {
    const DiagonalForm q = sample.form(fields[i % 2], sample.between(1, 4));
    return !gram_of_B(q, AlgebraPart::Full).entries().determinant().is_zero();
  }));
  out.push_back(run_suite("trace of beta is Pfister", 20, [&](std::size_t i) {
    const FieldSpec f = i % 2 ? FieldSpec::real() : FieldSpec::prime(5);
    const DiagonalForm q = sample.form(f, sample.between(2, 5));
    return witt_equivalent(trace_of_beta(q), pfister(q));
  }));
  out.push_back(run_suite("classification dimension", 25, [&](std::size_t i) {
    const std::size_t n = i + 2;
    const AlgebraClass cls = classify_C0_definite(n);
    return cls.dimension() == (std::size_t{1} << (n - 1));
  }));
  out.push_back(run_suite("trace cokernel matches W0", 8, [&](std::size_t i) {
    const std::size_t n = i + 3;
    return cokernel(trace_map_real_definite(n)) == quadric_witt_real(0, n).entries[0].group();
  }));
  out.push_back(run_suite("quadric symmetry", 11, [&](std::size_t i) {
    const std::size_t total = i + 2;
    for (std::size_t m = 0; m <= total; ++m) {
      if (!same_content(quadric_witt_real(m, total - m), quadric_witt_real(total - m, m))) return false;
    }
    return true;
  }));
  out.push_back(run_suite("semilocal exactness", 8, [&](std::size_t i) {
    const WittReport r = quadric_witt_semilocal_report(i + 1, i % 2 == 0, {true, VanishingJustification::Field});
    for (const auto& seq : r.sequences) {
      for (const auto& check : audit_exactness(seq)) {
        if (!check.exact) return false;
      }
    }
    return true;
  }));
  return out;
}

Body cmd_selfcheck(const Request& req, bool& all_passed) {
  Body body;
  body.input["seed"] = req.seed;
  ordered_json suites = ordered_json::array();
  std::size_t passed = 0;
  std::size_t failed = 0;
  for (const auto& suite : selfcheck(req.seed)) {
    suites.push_back({{"name", suite.name}, {"passed", suite.passed}, {"failed", suite.failed}});
    passed += suite.passed;
    failed += suite.failed;
  }
  body.results["suites"] = std::move(suites);
  body.results["passed"] = passed;
  body.results["failed"] = failed;
  body.provenance = {"property suites"};
  all_passed = failed == 0;
  return body;
}

// ---- output ----------------------------------------------------------------

void render_pretty(const ordered_json& value, const std::string& path, std::ostream& out) {
  if (value.is_object()) {
    for (const auto& [key, child] : value.items()) render_pretty(child, path.empty() ? key : path + "." + key, out);
  } else if (value.is_array() && !value.empty() && (value.front().is_object() || value.front().is_array())) {
    for (std::size_t i = 0; i < value.size(); ++i) render_pretty(value[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    std::string text = value.is_string() ? value.get<std::string>() : value.dump();
    out << path;
    if (path.size() < 32) out << std::string(32 - path.size(), ' ');
    out << "  " << text << '\n';
  }
}

void emit(const ordered_json& doc, bool pretty, std::ostream& out) {
  if (pretty) {
    render_pretty(doc, "", out);
  } else {
    out << doc.dump(2) << '\n';
  }
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::Indeterminate:
    case Errc::HypothesisNotMet:
    case Errc::MinimalityNotCertified:
      return Refused;
    case Errc::InvariantViolation:
      return InvariantFailure;
    default:
      return InvalidInput;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto started = std::chrono::steady_clock::now();
  Request req;
  ordered_json doc;
  doc["schema_version"] = "1";

  CLI::App app{"Clifford algebras and Witt groups of quadrics", "witt-quadrics"};
  app.add_option("command", req.command, "classify | witt | oracle | verify-trace | selfcheck")->required();
  app.add_option("--field", req.field, "real | rational | fp");
  app.add_option("--p", req.p, "odd prime for --field fp");
  app.add_option("--form", req.form, "value:multiplicity terms")->allow_extra_args();
  app.add_option("--n", req.n, "rank of n<1>");
  app.add_option("--d", req.d, "dimension of the quadric");
  app.add_option("--seed", req.seed, "seed for randomized searches");
  app.add_option("--jobs", req.jobs, "parallel candidate evaluations")->check(CLI::Range(1, 64));
  app.add_flag("--pretty", req.pretty, "aligned key/value rendering");
  auto* max_rank = app.add_option("--max-rank", req.max_rank, "Clifford algebra rank cap")->check(CLI::Range(1, 20));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (max_rank->count() == 0) req.max_rank = default_max_rank();
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "witt-quadrics: " << e.what() << '\n';
    return InvalidInput;
  } catch (const Error& e) {
    err << "witt-quadrics: " << e.what() << '\n';
    return InvalidInput;
  }

  doc["command"] = req.command;
  int code = Ok;
  try {
    Body body;
    if (req.command == "classify") {
      body = cmd_classify(req);
    } else if (req.command == "witt") {
      body = cmd_witt(req);
    } else if (req.command == "oracle") {
      body = cmd_oracle(req);
    } else if (req.command == "verify-trace") {
      body = cmd_verify_trace(req);
    } else if (req.command == "selfcheck") {
      bool all_passed = true;
      body = cmd_selfcheck(req, all_passed);
      if (!all_passed) code = InvariantFailure;
    } else {
      throw Error(Errc::InvalidArgument, "unknown command '" + req.command + "'");
    }
    doc["input"] = body.input.is_null() ? ordered_json::object() : body.input;
    doc["results"] = std::move(body.results);
    doc["provenance"] = std::vector<std::string>(body.provenance.begin(), body.provenance.end());
  } catch (const Error& e) {
    code = exit_code_for(e.code());
    doc["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    err << "witt-quadrics: " << e.what() << '\n';
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
  doc["timing"] = {{"elapsed_ms", elapsed.count()}};
  emit(doc, req.pretty, out);
  return code;
}

}  // namespace wq::cli
