#include "wq/scalars.hpp"

#include <charconv>

namespace wq {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::MixedFields: return "MixedFields";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::UnsupportedField: return "UnsupportedField";
    case Errc::DegenerateForm: return "DegenerateForm";
    case Errc::Indeterminate: return "Indeterminate";
    case Errc::RankTooSmall: return "RankTooSmall";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::RankCapExceeded: return "RankCapExceeded";
    case Errc::MinimalityNotCertified: return "MinimalityNotCertified";
    case Errc::HypothesisNotMet: return "HypothesisNotMet";
    case Errc::EmptyQuadric: return "EmptyQuadric";
    case Errc::EvenRank: return "EvenRank";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return result;
}

std::uint64_t reduce_mod(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) {
    throw Error(Errc::InvalidArgument, "prime field needs an odd prime, got " + std::to_string(p));
  }
  return FieldSpec(FieldKind::PrimeField, p);
}

std::string FieldSpec::name() const {
  switch (kind_) {
    case FieldKind::RationalExact: return "rational";
    case FieldKind::RealExact: return "real";
    case FieldKind::PrimeField: return "F" + std::to_string(p_);
  }
  return "?";
}

Scalar::Scalar(FieldSpec field, long value) : field_(field) {
  if (field_.is_prime_field()) {
    value_ = reduce_mod(mpz_class(value), field_.p());
  } else {
    value_ = mpq_class(value);
  }
}

Scalar::Scalar(FieldSpec field, const mpq_class& value) : field_(field) {
  mpq_class q = value;
  q.canonicalize();
  if (field_.is_prime_field()) {
    const std::uint64_t p = field_.p();
    const std::uint64_t den = reduce_mod(q.get_den(), p);
    if (den == 0) throw Error(Errc::DivisionByZero, "denominator divisible by " + std::to_string(p));
    value_ = mulmod(reduce_mod(q.get_num(), p), powmod(den, p - 2, p), p);
  } else {
    value_ = std::move(q);
  }
}

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw Error(Errc::InvalidArgument, "not a rational number: '" + s + "'");
  }
  if (q.get_den() == 0) throw Error(Errc::DivisionByZero, "zero denominator in '" + s + "'");
  return Scalar(field, q);
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (field_.is_prime_field()) throw Error(Errc::UnsupportedField, "residue has no rational value");
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
  if (!field_.is_prime_field()) throw Error(Errc::UnsupportedField, "rational has no residue");
  return std::get<std::uint64_t>(value_);
}

void Scalar::require_same_field(const Scalar& rhs) const {
  if (field_ != rhs.field_) {
    throw Error(Errc::MixedFields, field_.name() + " vs " + rhs.field_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.apply_sign(-1);
  return out;
}

Scalar& Scalar::apply_sign(int sign) {
  if (sign >= 0) return *this;
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    if (*r != 0) *r = field_.p() - *r;
  } else {
    auto& q = std::get<mpq_class>(value_);
    mpq_neg(q.get_mpq_t(), q.get_mpq_t());
  }
  return *this;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    const std::uint64_t p = field_.p();
    *r = (*r + std::get<std::uint64_t>(rhs.value_)) % p;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    const std::uint64_t p = field_.p();
    *r = (*r + p - std::get<std::uint64_t>(rhs.value_)) % p;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    *r = mulmod(*r, std::get<std::uint64_t>(rhs.value_), field_.p());
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  Scalar out = *this;
  if (auto* r = std::get_if<std::uint64_t>(&out.value_)) {
    *r = powmod(*r, field_.p() - 2, field_.p());
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    mpq_inv(q.get_mpq_t(), q.get_mpq_t());
  }
  return out;
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar result = one(field_);
  Scalar base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return std::to_string(*r);
  return std::get<mpq_class>(value_).get_str();
}

Scalar field_arithmetic(const Scalar& x, const Scalar& y, ScalarOp op) {
  switch (op) {
    case ScalarOp::Add: return x + y;
    case ScalarOp::Sub: return x - y;
    case ScalarOp::Mul: return x * y;
    case ScalarOp::Div: return x / y;
  }
  throw Error(Errc::InvalidArgument, "unknown operation");
}

bool is_square(const Scalar& x) {
  if (x.is_zero()) throw Error(Errc::ZeroInput, "square-class of zero");
  switch (x.field().kind()) {
    case FieldKind::RealExact:
      return sgn(x.rational()) > 0;
    case FieldKind::RationalExact: {
      const mpq_class& q = x.rational();
      if (sgn(q) < 0) return false;
      return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 &&
             mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
    }
    case FieldKind::PrimeField: {
      const std::uint64_t p = x.field().p();
      return powmod(x.residue(), (p - 1) / 2, p) == 1;
    }
  }
  return false;
}

int signum(const Scalar& x) {
  if (x.field().is_prime_field()) {
    throw Error(Errc::UnsupportedField, "sign is undefined over " + x.field().name());
  }
  return sgn(x.rational());
}

}  // namespace wq
