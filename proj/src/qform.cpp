#include "wq/qform.hpp"

#include <algorithm>
#include <utility>

namespace wq {

namespace {

constexpr long kIsotropySearchBox = 50;
constexpr std::size_t kIsotropySearchBudget = 1'000'000;

bool rational_is_square_or_zero(const mpq_class& q) {
  if (sgn(q) == 0) return true;
  if (sgn(q) < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

// Looks for an integer vector (x_1..x_{n-1}) in growing boxes such that
// -(a_1 x_1^2 + ... + a_{n-1} x_{n-1}^2) / a_n is a rational square.
bool rational_isotropy_search(const DiagonalForm& q) {
  const std::size_t n = q.rank();
  std::vector<mpq_class> a;
  for (const auto& c : q.coeffs()) a.push_back(c.rational());
  const mpq_class last = a.back();
  std::size_t budget = kIsotropySearchBudget;
  std::vector<long> x(n - 1, 0);
  for (long r = 1; r <= kIsotropySearchBox; ++r) {
    std::fill(x.begin(), x.end(), 0);
    while (true) {
      if (std::ranges::max(x) == r) {
        if (budget-- == 0) return false;
        mpq_class sum = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) sum += a[i] * (x[i] * x[i]);
        mpq_class t = -sum / last;
        if (rational_is_square_or_zero(t)) return true;
      }
      std::size_t i = 0;
      while (i < x.size() && x[i] == r) x[i++] = 0;
      if (i == x.size()) break;
      ++x[i];
    }
  }
  return false;
}

}  // namespace

DiagonalForm::DiagonalForm(FieldSpec field, std::vector<Scalar> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.field() != field_) throw Error(Errc::MixedFields, "coefficient over " + c.field().name());
    if (c.is_zero()) throw Error(Errc::DegenerateForm, "zero diagonal coefficient");
  }
}

DiagonalForm::DiagonalForm(FieldSpec field, std::initializer_list<long> coeffs)
    : DiagonalForm(field, [&] {
        std::vector<Scalar> v;
        for (long c : coeffs) v.emplace_back(field, c);
        return v;
      }()) {}

DiagonalForm DiagonalForm::split_signs(FieldSpec field, std::size_t minus, std::size_t plus) {
  std::vector<Scalar> v(minus, Scalar(field, -1L));
  v.insert(v.end(), plus, Scalar::one(field));
  return DiagonalForm(field, std::move(v));
}

Scalar DiagonalForm::determinant() const {
  Scalar d = Scalar::one(field_);
  for (const auto& c : coeffs_) d *= c;
  return d;
}

Scalar DiagonalForm::signed_discriminant() const {
  Scalar d = determinant();
  const std::size_t n = rank();
  if ((n * (n - 1) / 2) % 2 == 1) d.apply_sign(-1);
  return d;
}

DiagonalForm DiagonalForm::orthogonal_sum(const DiagonalForm& other) const {
  if (field_ != other.field_) throw Error(Errc::MixedFields, "orthogonal sum across fields");
  std::vector<Scalar> v = coeffs_;
  v.insert(v.end(), other.coeffs_.begin(), other.coeffs_.end());
  return DiagonalForm(field_, std::move(v));
}

DiagonalForm DiagonalForm::tensor(const DiagonalForm& other) const {
  if (field_ != other.field_) throw Error(Errc::MixedFields, "tensor product across fields");
  std::vector<Scalar> v;
  v.reserve(rank() * other.rank());
  for (const auto& a : coeffs_)
    for (const auto& b : other.coeffs_) v.push_back(a * b);
  return DiagonalForm(field_, std::move(v));
}

std::string DiagonalForm::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ",";
    s += coeffs_[i].to_string();
  }
  return s + ">";
}

SymmetricMatrix::SymmetricMatrix(ScalarMatrix entries) : entries_(std::move(entries)) {
  if (!entries_.is_symmetric()) throw Error(Errc::InvalidArgument, "matrix is not symmetric");
}

Diagonalization diagonalize(const SymmetricMatrix& m) {
  const FieldSpec field = m.field();
  const std::size_t n = m.size();
  ScalarMatrix a = m.entries();
  ScalarMatrix c = ScalarMatrix::identity(field, n);

  // Column operation col_dst += factor * col_src on C, mirrored as a
  // congruence on A.
  auto add_multiple = [&](std::size_t dst, std::size_t src, const Scalar& factor) {
    for (std::size_t r = 0; r < n; ++r) c(r, dst) += factor * c(r, src);
    for (std::size_t r = 0; r < n; ++r) a(r, dst) += factor * a(r, src);
    for (std::size_t k = 0; k < n; ++k) a(dst, k) += factor * a(src, k);
  };
  auto swap_basis = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < n; ++r) std::swap(c(r, i), c(r, j));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, pivot).is_zero()) ++pivot;
    if (pivot == n) {
      // No usable diagonal entry: e_i <- e_i + e_j makes a(i,i) = 2 a(i,j).
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i) {
        for (std::size_t j = i + 1; j < n && !found; ++j) {
          if (!a(i, j).is_zero()) {
            add_multiple(i, j, Scalar::one(field));
            pivot = i;
            found = true;
          }
        }
      }
      if (!found) throw Error(Errc::DegenerateForm, "Gram matrix is singular");
    }
    swap_basis(k, pivot);
    const Scalar inv = a(k, k).inverse();
    for (std::size_t j = k + 1; j < n; ++j) {
      if (a(k, j).is_zero()) continue;
      add_multiple(j, k, -(a(k, j) * inv));
    }
  }

  std::vector<Scalar> diag;
  diag.reserve(n);
  for (std::size_t i = 0; i < n; ++i) diag.push_back(a(i, i));
  return {DiagonalForm(field, std::move(diag)), std::move(c)};
}

Signature signature(const DiagonalForm& q) {
  if (q.field().is_prime_field()) {
    throw Error(Errc::UnsupportedField, "signature needs an ordered field");
  }
  Signature s;
  for (const auto& c : q.coeffs()) (signum(c) > 0 ? s.pos : s.neg)++;
  return s;
}

bool is_isotropic(const DiagonalForm& q) {
  const std::size_t n = q.rank();
  if (n <= 1) return false;
  switch (q.field().kind()) {
    case FieldKind::RealExact: {
      const auto s = signature(q);
      return s.pos > 0 && s.neg > 0;
    }
    case FieldKind::PrimeField:
      if (n >= 3) return true;
      return is_square(-(q[0] * q[1]));
    case FieldKind::RationalExact: {
      const auto s = signature(q);
      if (s.pos == 0 || s.neg == 0) return false;
      if (n == 2) return is_square(-(q[0] * q[1]));
      if (rational_isotropy_search(q)) return true;
      throw Error(Errc::Indeterminate,
                  "no isotropic vector found for " + q.to_string() + " within the search box");
    }
  }
  return false;
}

DiagonalForm pfister(const DiagonalForm& q) {
  const std::size_t n = q.rank();
  if (n < 2) throw Error(Errc::RankTooSmall, "Pfister form needs rank >= 2");
  std::vector<Scalar> slots;
  for (std::size_t j = 1; j < n; ++j) slots.push_back(q[0] * q[j]);
  const std::size_t count = std::size_t{1} << slots.size();
  std::vector<Scalar> entries;
  entries.reserve(count);
  for (std::size_t subset = 0; subset < count; ++subset) {
    Scalar e = Scalar::one(q.field());
    for (std::size_t j = 0; j < slots.size(); ++j)
      if (subset >> j & 1) e *= slots[j];
    entries.push_back(std::move(e));
  }
  return DiagonalForm(q.field(), std::move(entries));
}

long witt_class_real(const DiagonalForm& q) {
  if (q.field().kind() != FieldKind::RealExact) {
    throw Error(Errc::UnsupportedField, "W(R) class needs the real field, got " + q.field().name());
  }
  const auto s = signature(q);
  return static_cast<long>(s.pos) - static_cast<long>(s.neg);
}

bool witt_equivalent(const DiagonalForm& f, const DiagonalForm& g) {
  if (f.field() != g.field()) throw Error(Errc::MixedFields, "Witt comparison across fields");
  switch (f.field().kind()) {
    case FieldKind::RealExact:
      return witt_class_real(f) == witt_class_real(g);
    case FieldKind::PrimeField:
      return f.rank() % 2 == g.rank() % 2 &&
             is_square(f.signed_discriminant()) == is_square(g.signed_discriminant());
    case FieldKind::RationalExact:
      break;
  }
  throw Error(Errc::UnsupportedField, "Witt equivalence over Q is not decided");
}

}  // namespace wq
