#include "wq/clifford.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <optional>
#include <random>

#include "wq/classify.hpp"

namespace wq {

int blade_sign(Blade a, Blade b) noexcept {
  int swaps = 0;
  for (Blade shifted = a >> 1; shifted; shifted >>= 1) swaps += __builtin_popcount(shifted & b);
  return (swaps & 1) ? -1 : 1;
}

int reversal_sign(Blade b) noexcept {
  const int k = blade_grade(b);
  return ((k * (k - 1) / 2) & 1) ? -1 : 1;
}

BladeProduct blade_mul(Blade a, Blade b, const DiagonalForm& q) {
  const std::size_t n = q.rank();
  const Blade limit = n >= 32 ? ~Blade{0} : (Blade{1} << n) - 1;
  if ((a & ~limit) || (b & ~limit)) {
    throw Error(Errc::RankMismatch, "blade index exceeds rank " + std::to_string(n));
  }
  Scalar scale = Scalar::one(q.field());
  for (std::size_t i = 0; i < n; ++i)
    if ((a & b) >> i & 1) scale *= q[i];
  return {blade_sign(a, b), std::move(scale), a ^ b};
}

CliffordAlgebra::CliffordAlgebra(DiagonalForm q) : form_(std::move(q)) {
  const std::size_t dim = dimension();
  blade_norms_.reserve(dim);
  even_index_.assign(dim, dim);
  for (Blade b = 0; b < dim; ++b) {
    if (b == 0) {
      blade_norms_.push_back(Scalar::one(field()));
    } else {
      // Strip the lowest set bit and reuse the smaller blade.
      const int low = __builtin_ctz(b);
      blade_norms_.push_back(blade_norms_[b & (b - 1)] * form_[low]);
    }
    if (is_even_blade(b)) {
      even_index_[b] = even_blades_.size();
      even_blades_.push_back(b);
    }
  }
}

std::shared_ptr<const CliffordAlgebra> CliffordAlgebra::make(const DiagonalForm& q, std::size_t rank_cap) {
  if (q.rank() == 0) throw Error(Errc::RankTooSmall, "Clifford algebra of the zero form");
  if (q.rank() > rank_cap || q.rank() > 20) {
    throw Error(Errc::RankCapExceeded,
                "rank " + std::to_string(q.rank()) + " exceeds cap " + std::to_string(rank_cap));
  }
  return std::shared_ptr<const CliffordAlgebra>(new CliffordAlgebra(q));
}

namespace {

void require_same_algebra(const CliffordElement& x, const CliffordElement& y) {
  if (x.algebra() == y.algebra()) return;
  if (x.algebra()->rank() != y.algebra()->rank() || x.algebra()->form() != y.algebra()->form()) {
    throw Error(Errc::RankMismatch, "elements of different Clifford algebras");
  }
}

// Dense accumulator over the blade basis, flushed into sorted sparse terms.
class Accumulator {
 public:
  explicit Accumulator(const CliffordAlgebra& alg)
      : field_(alg.field()), slots_(alg.dimension()), used_(alg.dimension(), 0) {}

  void add(Blade b, Scalar value) {
    if (!used_[b]) {
      used_[b] = 1;
      slots_[b].emplace(std::move(value));
      touched_.push_back(b);
    } else {
      *slots_[b] += value;
    }
  }

  std::vector<CliffordElement::Term> take() {
    std::sort(touched_.begin(), touched_.end());
    std::vector<CliffordElement::Term> terms;
    terms.reserve(touched_.size());
    for (Blade b : touched_) {
      if (!slots_[b]->is_zero()) terms.emplace_back(b, std::move(*slots_[b]));
    }
    return terms;
  }

 private:
  FieldSpec field_;
  std::vector<std::optional<Scalar>> slots_;
  std::vector<char> used_;
  std::vector<Blade> touched_;
};

}  // namespace

CliffordElement::CliffordElement(AlgebraPtr algebra, std::vector<Term> terms)
    : algebra_(std::move(algebra)) {
  Accumulator acc(*algebra_);
  for (auto& [b, c] : terms) {
    if (b >= algebra_->dimension()) throw Error(Errc::RankMismatch, "blade outside the algebra");
    if (c.field() != algebra_->field()) throw Error(Errc::MixedFields, "coefficient field mismatch");
    acc.add(b, std::move(c));
  }
  terms_ = acc.take();
}

CliffordElement CliffordElement::scalar(AlgebraPtr algebra, const Scalar& s) {
  return CliffordElement(algebra, {{0, s}});
}

CliffordElement CliffordElement::blade(AlgebraPtr algebra, Blade b) {
  const Scalar one = Scalar::one(algebra->field());
  return CliffordElement(algebra, {{b, one}});
}

CliffordElement CliffordElement::blade(AlgebraPtr algebra, Blade b, const Scalar& coeff) {
  return CliffordElement(algebra, {{b, coeff}});
}

bool CliffordElement::is_even() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return is_even_blade(t.first); });
}

Scalar CliffordElement::coeff(Blade b) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                             [](const Term& t, Blade key) { return t.first < key; });
  if (it != terms_.end() && it->first == b) return it->second;
  return Scalar::zero(algebra_->field());
}

std::vector<Scalar> CliffordElement::even_coordinates() const {
  std::vector<Scalar> coords(algebra_->even_blades().size(), Scalar::zero(algebra_->field()));
  for (const auto& [b, c] : terms_) {
    if (!is_even_blade(b)) throw Error(Errc::InvalidArgument, "element is not in the even part");
    coords[algebra_->even_index(b)] = c;
  }
  return coords;
}

CliffordElement CliffordElement::from_even_coordinates(AlgebraPtr algebra, const std::vector<Scalar>& coords) {
  const auto& blades = algebra->even_blades();
  if (coords.size() != blades.size()) throw Error(Errc::RankMismatch, "coordinate vector length");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) terms.emplace_back(blades[i], coords[i]);
  CliffordElement out(algebra);
  out.terms_ = std::move(terms);
  return out;
}

CliffordElement CliffordElement::operator-() const {
  CliffordElement out = *this;
  for (auto& t : out.terms_) t.second.apply_sign(-1);
  return out;
}

CliffordElement operator+(const CliffordElement& x, const CliffordElement& y) {
  require_same_algebra(x, y);
  Accumulator acc(*x.algebra_);
  for (const auto& [b, c] : x.terms_) acc.add(b, c);
  for (const auto& [b, c] : y.terms_) acc.add(b, c);
  CliffordElement out(x.algebra_);
  out.terms_ = acc.take();
  return out;
}

CliffordElement operator-(const CliffordElement& x, const CliffordElement& y) { return x + (-y); }

CliffordElement operator*(const Scalar& s, const CliffordElement& x) {
  CliffordElement out(x.algebra_);
  if (s.is_zero()) return out;
  out.terms_ = x.terms_;
  for (auto& t : out.terms_) t.second *= s;
  return out;
}

bool operator==(const CliffordElement& x, const CliffordElement& y) {
  return x.algebra_->form() == y.algebra_->form() && x.terms_ == y.terms_;
}

CliffordElement mul(const CliffordElement& x, const CliffordElement& y) {
  require_same_algebra(x, y);
  const CliffordAlgebra& alg = *x.algebra();
  Accumulator acc(alg);
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      Scalar value = ca * cb;
      const Blade shared = a & b;
      if (shared) value *= alg.blade_norm(shared);
      value.apply_sign(blade_sign(a, b));
      acc.add(a ^ b, std::move(value));
    }
  }
  return CliffordElement(x.algebra(), [&] {
    // Terms are already canonical; the constructor re-sorts cheaply.
    return acc.take();
  }());
}

CliffordElement left_mul_blade(Blade b, const CliffordElement& x) {
  const CliffordAlgebra& alg = *x.algebra();
  std::vector<CliffordElement::Term> terms;
  terms.reserve(x.terms().size());
  for (const auto& [a, c] : x.terms()) {
    Scalar value = c;
    const Blade shared = a & b;
    if (shared) value *= alg.blade_norm(shared);
    value.apply_sign(blade_sign(b, a));
    terms.emplace_back(a ^ b, std::move(value));
  }
  return CliffordElement(x.algebra(), std::move(terms));
}

CliffordElement involution(const CliffordElement& x) {
  CliffordElement out = x;
  std::vector<CliffordElement::Term> terms = x.terms();
  for (auto& [b, c] : terms) c.apply_sign(reversal_sign(b));
  return CliffordElement(x.algebra(), std::move(terms));
}

Scalar trace(const CliffordElement& x) { return x.coeff(0); }

Scalar bform(const CliffordElement& x, const CliffordElement& y) {
  require_same_algebra(x, y);
  // Only pairs of equal blades reach e^0.
  const CliffordAlgebra& alg = *x.algebra();
  Scalar sum = Scalar::zero(alg.field());
  auto it = y.terms().begin();
  for (const auto& [a, ca] : x.terms()) {
    while (it != y.terms().end() && it->first < a) ++it;
    if (it == y.terms().end()) break;
    if (it->first != a) continue;
    Scalar v = ca * it->second * alg.blade_norm(a);
    v.apply_sign(reversal_sign(a) * blade_sign(a, a));
    sum += v;
  }
  return sum;
}

SymmetricMatrix gram_of_B(const DiagonalForm& q, AlgebraPart part, std::size_t rank_cap) {
  const AlgebraPtr alg = CliffordAlgebra::make(q, rank_cap);
  std::vector<Blade> basis;
  for (Blade b = 0; b < alg->dimension(); ++b)
    if (part == AlgebraPart::Full || is_even_blade(b)) basis.push_back(b);
  ScalarMatrix gram(q.field(), basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if ((basis[i] ^ basis[j]) != 0) continue;  // product never reaches e^0
      gram(i, j) = bform(CliffordElement::blade(alg, basis[i]), CliffordElement::blade(alg, basis[j]));
    }
  }
  return SymmetricMatrix(std::move(gram));
}

DiagonalForm trace_of_beta(const DiagonalForm& q, std::size_t rank_cap) {
  if (q.rank() < 2) throw Error(Errc::RankTooSmall, "trace of beta needs rank >= 2");
  const AlgebraPtr alg = CliffordAlgebra::make(q, rank_cap);
  const auto& blades = alg->even_blades();
  std::vector<Scalar> diag;
  diag.reserve(blades.size());
  // e^D involution(e^D) = reversal_sign(D) e^D e^D
  for (Blade b : blades) {
    const BladeProduct p = blade_mul(b, b, q);
    Scalar entry = p.scale;
    diag.push_back(entry.apply_sign(p.sign * reversal_sign(b)));
  }
  // Off-diagonal entries vanish: distinct blades multiply to a non-scalar blade.
  for (std::size_t i = 0; i < blades.size(); ++i) {
    for (std::size_t j = i + 1; j < blades.size(); ++j) {
      if (blade_mul(blades[i], blades[j], q).blade == 0) {
        throw Error(Errc::InvariantViolation, "beta trace form is not diagonal on blades");
      }
    }
  }
  return DiagonalForm(q.field(), std::move(diag));
}

IdealBasis left_ideal_generated_by(const CliffordElement& x) {
  if (!x.is_even()) throw Error(Errc::InvalidArgument, "ideal generator must lie in C_0");
  const AlgebraPtr& alg = x.algebra();
  EchelonBasis basis(alg->field(), alg->even_blades().size());
  for (Blade b : alg->even_blades()) basis.insert(left_mul_blade(b, x).even_coordinates());
  IdealBasis ideal{alg, {}, x};
  for (const auto& row : basis.rows()) ideal.vectors.push_back(CliffordElement::from_even_coordinates(alg, row));
  return ideal;
}

bool IdealBasis::is_left_ideal() const {
  EchelonBasis span(algebra->field(), algebra->even_blades().size());
  for (const auto& v : vectors) {
    if (!span.insert(v.even_coordinates())) return false;  // dependent basis
  }
  for (const auto& v : vectors) {
    for (Blade b : algebra->even_blades()) {
      if (!span.contains(left_mul_blade(b, v).even_coordinates())) return false;
    }
  }
  return true;
}

namespace {

bool blades_commute(Blade a, Blade b) { return blade_sign(a, b) == blade_sign(b, a); }

bool in_xor_span(Blade b, const std::vector<Blade>& reduced) {
  for (Blade r : reduced) {
    const Blade top = Blade{1} << (31 - __builtin_clz(r));
    if (b & top) b ^= r;
  }
  return b == 0;
}

void xor_span_insert(Blade b, std::vector<Blade>& reduced) {
  for (Blade r : reduced) {
    const Blade top = Blade{1} << (31 - __builtin_clz(r));
    if (b & top) b ^= r;
  }
  if (b == 0) return;
  reduced.push_back(b);
  std::sort(reduced.begin(), reduced.end(), std::greater<>());
}

// One seeded candidate: a product of commuting idempotents (1 +- e^D)/2 for
// even blades with (e^D)^2 = 1, chosen greedily in a shuffled order. Without
// such blades the candidate is a random even element.
CliffordElement ideal_candidate(const AlgebraPtr& alg, std::uint64_t seed, std::size_t index) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + index);
  const FieldSpec field = alg->field();
  std::vector<Blade> involutive;
  for (Blade b : alg->even_blades()) {
    if (b == 0) continue;
    Scalar square = alg->blade_norm(b);
    square.apply_sign(blade_sign(b, b));
    if (square.is_one()) involutive.push_back(b);
  }
  if (involutive.empty()) {
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::vector<CliffordElement::Term> terms;
    for (Blade b : alg->even_blades()) terms.emplace_back(b, Scalar(field, coeff(rng)));
    return CliffordElement(alg, std::move(terms));
  }
  std::shuffle(involutive.begin(), involutive.end(), rng);
  std::vector<Blade> chosen;
  std::vector<Blade> span;
  const Scalar half = Scalar::one(field) / Scalar(field, 2L);
  CliffordElement x = CliffordElement::scalar(alg, Scalar::one(field));
  for (Blade b : involutive) {
    if (in_xor_span(b, span)) continue;
    if (!std::all_of(chosen.begin(), chosen.end(), [&](Blade c) { return blades_commute(b, c); })) continue;
    const long sign = (rng() & 1) ? 1 : -1;
    const auto idempotent = half * (CliffordElement::scalar(alg, Scalar::one(field)) +
                                    CliffordElement::blade(alg, b, Scalar(field, sign)));
    x = mul(x, idempotent);
    chosen.push_back(b);
    xor_span_insert(b, span);
  }
  return x;
}

}  // namespace

IdealSearchResult minimal_left_ideal(const DiagonalForm& q, const IdealSearchOptions& options) {
  const std::size_t n = q.rank();
  if (q.field().is_prime_field()) throw Error(Errc::UnsupportedField, "trace oracle runs over Q");
  for (const auto& c : q.coeffs()) {
    if (!c.is_one()) throw Error(Errc::InvalidArgument, "trace oracle expects the form n<1>");
  }
  if (n < 3) throw Error(Errc::RankTooSmall, "trace oracle needs n >= 3");
  if (n > 9) throw Error(Errc::RankCapExceeded, "trace oracle supports n <= 9");
  if (options.candidates == 0) throw Error(Errc::InvalidArgument, "empty candidate budget");

  const AlgebraPtr alg = CliffordAlgebra::make(q);
  const std::size_t target = std::size_t{1} << delta(n);
  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);

  IdealSearchResult result{IdealBasis{alg, {}, CliffordElement(alg)}, target, 0, {}};
  for (std::size_t start = 0; start < options.candidates; start += jobs) {
    const std::size_t stop = std::min(options.candidates, start + jobs);
    std::vector<IdealBasis> batch;
    if (jobs == 1) {
      batch.push_back(left_ideal_generated_by(ideal_candidate(alg, options.seed, start)));
    } else {
      std::vector<std::future<IdealBasis>> pending;
      for (std::size_t i = start; i < stop; ++i) {
        pending.push_back(std::async(std::launch::async, [&alg, &options, i] {
          return left_ideal_generated_by(ideal_candidate(alg, options.seed, i));
        }));
      }
      for (auto& f : pending) batch.push_back(f.get());
    }
    // First certified candidate in seed order wins.
    for (std::size_t k = 0; k < batch.size(); ++k) {
      result.candidate_dimensions.push_back(batch[k].dimension());
      if (batch[k].dimension() == target) {
        result.ideal = std::move(batch[k]);
        result.candidate = start + k;
        return result;
      }
    }
  }
  const auto smallest = *std::min_element(result.candidate_dimensions.begin(), result.candidate_dimensions.end());
  throw Error(Errc::MinimalityNotCertified,
              "smallest ideal found has dimension " + std::to_string(smallest) + ", expected " +
                  std::to_string(target));
}

SymmetricMatrix restricted_trace_form(const IdealBasis& ideal) {
  const std::size_t d = ideal.dimension();
  ScalarMatrix gram(ideal.algebra->field(), d, d);
  std::vector<CliffordElement> conj;
  conj.reserve(d);
  for (const auto& v : ideal.vectors) conj.push_back(involution(v));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) gram(i, j) = trace(mul(ideal.vectors[i], conj[j]));
  return SymmetricMatrix(std::move(gram));
}

}  // namespace wq
