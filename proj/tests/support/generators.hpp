#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "wq/abelian.hpp"
#include "wq/clifford.hpp"
#include "wq/qform.hpp"
#include "wq/scalars.hpp"

namespace wq::testing {

// Small hand-rolled generators; every suite seeds its own instance so
// failures reproduce.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool coin() { return integer(0, 1) == 1; }

  Scalar nonzero(const FieldSpec& field) {
    for (;;) {
      long num = integer(-9, 9);
      if (num == 0) continue;
      if (field.is_prime_field()) {
        Scalar s(field, num);
        if (!s.is_zero()) return s;
        continue;
      }
      return Scalar(field, mpq_class(num, integer(1, 6)));
    }
  }

  Scalar any(const FieldSpec& field) { return integer(0, 4) == 0 ? Scalar::zero(field) : nonzero(field); }

  DiagonalForm form(const FieldSpec& field, std::size_t rank) {
    std::vector<Scalar> coeffs;
    for (std::size_t i = 0; i < rank; ++i) coeffs.push_back(nonzero(field));
    return DiagonalForm(field, std::move(coeffs));
  }

  CliffordElement element(const AlgebraPtr& algebra, bool even_only = false) {
    std::vector<CliffordElement::Term> terms;
    for (Blade b = 0; b < algebra->dimension(); ++b) {
      if (even_only && !is_even_blade(b)) continue;
      if (integer(0, 2) == 0) continue;
      terms.emplace_back(b, nonzero(algebra->field()));
    }
    return CliffordElement(algebra, std::move(terms));
  }

  ScalarMatrix symmetric(const FieldSpec& field, std::size_t n) {
    ScalarMatrix m(field, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r; c < n; ++c) {
        m(r, c) = any(field);
        m(c, r) = m(r, c);
      }
    return m;
  }

  IntMatrix int_matrix(std::size_t rows, std::size_t cols, long bound) {
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = integer(-bound, bound);
    return m;
  }

  AbelianGroup group(std::size_t max_generators) {
    std::vector<mpz_class> orders;
    const std::size_t count = index(0, max_generators);
    for (std::size_t i = 0; i < count; ++i) orders.push_back(integer(0, 3) == 0 ? 0 : integer(2, 12));
    return AbelianGroup::from_cyclic_orders(orders);
  }

  GroupMap group_map(const AbelianGroup& domain, const AbelianGroup& codomain) {
    // Multiplying a free column by the exponent of the codomain torsion and
    // torsion columns by their order's cofactor keeps the map well defined.
    IntMatrix m(codomain.generator_count(), domain.generator_count());
    for (std::size_t c = 0; c < domain.generator_count(); ++c) {
      const mpz_class order = domain.generator_order(c);
      for (std::size_t r = 0; r < codomain.generator_count(); ++r) {
        mpz_class entry = integer(-4, 4);
        const mpz_class target = codomain.generator_order(r);
        if (order != 0) {
          if (target == 0) {
            entry = 0;
          } else {
            // entry * order must vanish mod target
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), order.get_mpz_t(), target.get_mpz_t());
            entry *= target / g;
          }
        }
        m(r, c) = entry;
      }
    }
    return GroupMap(domain, codomain, std::move(m));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace wq::testing
