#include <doctest.h>

#include "generators.hpp"
#include "wq/abelian.hpp"

using namespace wq;

namespace {
bool is_diagonal_chain(const IntMatrix& d, std::size_t rank) {
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c) {
      if (r != c && d(r, c) != 0) return false;
      if (r == c && (r < rank) != (d(r, c) > 0)) return false;
      if (r == c && d(r, c) < 0) return false;
    }
  for (std::size_t i = 1; i < rank; ++i) {
    if (!mpz_divisible_p(d(i, i).get_mpz_t(), d(i - 1, i - 1).get_mpz_t())) return false;
  }
  return true;
}

mpz_class abs_det(const IntMatrix& m) { return abs(m.determinant()); }
}  // namespace

TEST_CASE("Smith normal form examples") {
  CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).d == IntMatrix{{1, 0}, {0, 6}});
  CHECK(smith_normal_form(IntMatrix::identity(3)).d == IntMatrix::identity(3));
  CHECK(smith_normal_form(IntMatrix{{4}}).d == IntMatrix{{4}});
  const auto snf = smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  CHECK(snf.d == IntMatrix{{2, 0, 0}, {0, 6, 0}, {0, 0, 12}});
  CHECK(smith_normal_form(IntMatrix(2, 3)).rank == 0);
}

TEST_CASE("group normalisation and printing") {
  CHECK(AbelianGroup::trivial().to_string() == "0");
  CHECK(AbelianGroup::free(1).to_string() == "Z");
  CHECK(AbelianGroup::cyclic(4).to_string() == "Z/4");
  CHECK(AbelianGroup::cyclic(1).is_trivial());
  CHECK(AbelianGroup::cyclic(0) == AbelianGroup::free(1));
  CHECK(AbelianGroup::from_cyclic_orders({2, 3}) == AbelianGroup::cyclic(6));
  CHECK(AbelianGroup::from_cyclic_orders({2, 2}).to_string() == "Z/2 + Z/2");
  CHECK(AbelianGroup::from_cyclic_orders({4, 0, 6}).to_string() == "Z + Z/2 + Z/12");
  CHECK(AbelianGroup::free(2).to_string() == "Z + Z");
}

TEST_CASE("kernel, cokernel and image examples") {
  const AbelianGroup Z = AbelianGroup::free(1);
  const GroupMap times4(Z, Z, IntMatrix{{4}});
  CHECK(cokernel(times4) == AbelianGroup::cyclic(4));
  CHECK(kernel(times4).is_trivial());
  CHECK(image(times4) == Z);
  CHECK(is_injective(times4));
  CHECK_FALSE(is_surjective(times4));

  const GroupMap trace(AbelianGroup::free(2), Z, IntMatrix{{4, 4}});
  CHECK(kernel(trace) == Z);
  CHECK(cokernel(trace) == AbelianGroup::cyclic(4));

  const AbelianGroup Z4 = AbelianGroup::cyclic(4);
  const GroupMap reduce(Z, Z4, IntMatrix{{1}});
  CHECK(kernel(reduce) == Z);
  CHECK(is_surjective(reduce));
  const GroupMap doubling(Z4, Z4, IntMatrix{{2}});
  CHECK(kernel(doubling) == AbelianGroup::cyclic(2));
  CHECK(image(doubling) == AbelianGroup::cyclic(2));
  CHECK(cokernel(doubling) == AbelianGroup::cyclic(2));
  CHECK(is_exact_at(doubling, doubling));
  CHECK_FALSE(is_exact_at(GroupMap::zero(Z4, Z4), doubling));
}

TEST_CASE("maps must respect torsion") {
  const AbelianGroup Z2 = AbelianGroup::cyclic(2);
  const AbelianGroup Z = AbelianGroup::free(1);
  CHECK_THROWS_AS(GroupMap(Z2, Z, IntMatrix{{1}}), Error);
  CHECK_THROWS_AS(GroupMap(AbelianGroup::cyclic(4), Z2, IntMatrix{{3}}).compose(GroupMap(Z, Z, IntMatrix{{1, 2}})), Error);
  CHECK(GroupMap(Z, Z2, IntMatrix{{3}}).matrix() == IntMatrix{{1}});
}

TEST_CASE("kernel inclusion and cokernel projection") {
  const AbelianGroup Z = AbelianGroup::free(1);
  const GroupMap trace(AbelianGroup::free(2), Z, IntMatrix{{4, 4}});
  const GroupMap inc = kernel_inclusion(trace);
  CHECK(inc.domain() == Z);
  CHECK(is_zero_map(trace.compose(inc)));
  CHECK(is_exact_at(inc, trace));
  const GroupMap proj = cokernel_projection(trace);
  CHECK(proj.codomain() == AbelianGroup::cyclic(4));
  CHECK(is_exact_at(trace, proj));
  CHECK(is_surjective(proj));
}

TEST_CASE("property: Smith normal form certificates") {
  testing::Gen gen(41);
  for (int i = 0; i < 500; ++i) {
    const IntMatrix m = gen.int_matrix(gen.index(1, 6), gen.index(1, 6), gen.coin() ? 3 : 20);
    const SmithForm snf = smith_normal_form(m);
    CHECK(snf.u * m * snf.v == snf.d);
    CHECK(abs_det(snf.u) == 1);
    CHECK(abs_det(snf.v) == 1);
    CHECK(is_diagonal_chain(snf.d, snf.rank));
  }
}

TEST_CASE("property: canonical sequence of a map is exact") {
  testing::Gen gen(42);
  for (int i = 0; i < 300; ++i) {
    const AbelianGroup a = gen.group(4);
    const AbelianGroup b = gen.group(4);
    const GroupMap f = gen.group_map(a, b);
    const GroupMap inc = kernel_inclusion(f);
    const GroupMap proj = cokernel_projection(f);
    CHECK(inc.domain() == kernel(f));
    CHECK(proj.codomain() == cokernel(f));
    const GroupMap into_kernel = GroupMap::zero(AbelianGroup::trivial(), inc.domain());
    const GroupMap out_of_cokernel = GroupMap::zero(proj.codomain(), AbelianGroup::trivial());
    CHECK(is_exact_at(into_kernel, inc));
    CHECK(is_exact_at(inc, f));
    CHECK(is_exact_at(f, proj));
    CHECK(is_exact_at(proj, out_of_cokernel));
    // first isomorphism theorem
    CHECK(cokernel(inc) == image(f));
  }
}

TEST_CASE("property: integer kernel really is the kernel") {
  testing::Gen gen(43);
  for (int i = 0; i < 200; ++i) {
    const IntMatrix m = gen.int_matrix(gen.index(1, 5), gen.index(1, 6), 6);
    const IntMatrix k = integer_kernel(m);
    CHECK((m * k).is_zero());
    const SmithForm snf = smith_normal_form(m);
    CHECK(k.cols() == m.cols() - snf.rank);
  }
}

TEST_CASE("property: unimodular inverse") {
  testing::Gen gen(44);
  for (int i = 0; i < 100; ++i) {
    const IntMatrix m = gen.int_matrix(4, 4, 9);
    const SmithForm snf = smith_normal_form(m);
    CHECK(snf.u * unimodular_inverse(snf.u) == IntMatrix::identity(4));
  }
}
