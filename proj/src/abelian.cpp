#include "wq/abelian.hpp"

#include <algorithm>
#include <utility>

namespace wq {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(Errc::InvalidArgument, "ragged integer matrix");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(Errc::InvalidArgument, "integer matrix shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (sgn((*this)(r, k)) == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += (*this)(r, k) * rhs(k, c);
    }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_) throw Error(Errc::InvalidArgument, "hconcat row mismatch");
  IntMatrix out(rows_, cols_ + rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, cols_ + c) = rhs(r, c);
  }
  return out;
}

IntMatrix IntMatrix::column(std::size_t c) const {
  IntMatrix out(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) out(r, 0) = (*this)(r, c);
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpz_class& x) { return sgn(x) == 0; });
}

mpz_class IntMatrix::determinant() const {
  if (rows_ != cols_) throw Error(Errc::InvalidArgument, "determinant of a non-square matrix");
  // Fraction-free Bareiss elimination.
  IntMatrix a = *this;
  const std::size_t n = rows_;
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && sgn(a(swap, k)) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row dst += factor * row src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& factor) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += factor * m(src, c);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& factor) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += factor * m(r, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto bring_smallest = [&](bool whole_block) {
      std::size_t best_r = rows, best_c = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c) {
          if (!whole_block && r != t && c != t) continue;
          if (sgn(a(r, c)) == 0) continue;
          if (best_r == rows || abs(a(r, c)) < abs(a(best_r, best_c))) {
            best_r = r;
            best_c = c;
          }
        }
      if (best_r == rows) return false;
      swap_rows(a, t, best_r);
      swap_rows(u, t, best_r);
      swap_cols(a, t, best_c);
      swap_cols(v, t, best_c);
      return true;
    };
    if (!bring_smallest(true)) break;

    while (true) {
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (sgn(a(r, t)) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a(r, t).get_mpz_t(), a(t, t).get_mpz_t());
        add_row(a, r, t, -q);
        add_row(u, r, t, -q);
        if (sgn(a(r, t)) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (sgn(a(t, c)) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a(t, c).get_mpz_t(), a(t, t).get_mpz_t());
        add_col(a, c, t, -q);
        add_col(v, c, t, -q);
        if (sgn(a(t, c)) != 0) clean = false;
      }
      if (!clean) {
        bring_smallest(false);
        continue;
      }
      // Enforce the divisibility chain on the remaining block.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols && divides; ++c) {
          if (!mpz_divisible_p(a(r, c).get_mpz_t(), a(t, t).get_mpz_t())) {
            add_row(a, t, r, 1);
            add_row(u, t, r, 1);
            divides = false;
          }
        }
      if (divides) break;
      bring_smallest(false);
    }
    if (sgn(a(t, t)) < 0) {
      for (std::size_t c = 0; c < cols; ++c) a(t, c) = -a(t, c);
      for (std::size_t c = 0; c < rows; ++c) u(t, c) = -u(t, c);
    }
  }
  return {std::move(u), std::move(a), std::move(v), t};
}

AbelianGroup AbelianGroup::from_cyclic_orders(const std::vector<mpz_class>& orders) {
  IntMatrix rel(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (sgn(orders[i]) < 0) throw Error(Errc::InvalidArgument, "negative cyclic order");
    rel(i, i) = orders[i];
  }
  const SmithForm snf = smith_normal_form(rel);
  std::size_t free_rank = orders.size() - snf.rank;
  std::vector<mpz_class> torsion;
  for (std::size_t i = 0; i < snf.rank; ++i)
    if (snf.d(i, i) > 1) torsion.push_back(snf.d(i, i));
  return AbelianGroup(free_rank, std::move(torsion));
}

AbelianGroup AbelianGroup::cyclic(const mpz_class& order) { return from_cyclic_orders({order}); }

mpz_class AbelianGroup::generator_order(std::size_t i) const {
  if (i < free_rank_) return 0;
  return torsion_.at(i - free_rank_);
}

AbelianGroup AbelianGroup::direct_sum(const AbelianGroup& other) const {
  std::vector<mpz_class> orders(free_rank_ + other.free_rank_, 0);
  orders.insert(orders.end(), torsion_.begin(), torsion_.end());
  orders.insert(orders.end(), other.torsion_.begin(), other.torsion_.end());
  return from_cyclic_orders(orders);
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts(free_rank_, "Z");
  for (const auto& d : torsion_) parts.push_back("Z/" + d.get_str());
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " + " : "") + parts[i];
  return s;
}

namespace {

// Columns: order * e_i for each torsion generator.
IntMatrix relations(const AbelianGroup& g) {
  IntMatrix r(g.generator_count(), g.torsion().size());
  for (std::size_t k = 0; k < g.torsion().size(); ++k) r(g.free_rank() + k, k) = g.torsion()[k];
  return r;
}

IntMatrix top_rows(const IntMatrix& m, std::size_t count) {
  IntMatrix out(count, m.cols());
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

}  // namespace

GroupMap::GroupMap(AbelianGroup domain, AbelianGroup codomain, IntMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != codomain_.generator_count() || matrix_.cols() != domain_.generator_count()) {
    throw Error(Errc::InvalidArgument, "map matrix shape does not match the groups");
  }
  for (std::size_t r = 0; r < matrix_.rows(); ++r) {
    const mpz_class order = codomain_.generator_order(r);
    if (sgn(order) == 0) continue;
    for (std::size_t c = 0; c < matrix_.cols(); ++c)
      mpz_fdiv_r(matrix_(r, c).get_mpz_t(), matrix_(r, c).get_mpz_t(), order.get_mpz_t());
  }
  for (std::size_t c = 0; c < matrix_.cols(); ++c) {
    const mpz_class order = domain_.generator_order(c);
    if (sgn(order) == 0) continue;
    for (std::size_t r = 0; r < matrix_.rows(); ++r) {
      const mpz_class image = order * matrix_(r, c);
      const mpz_class target = codomain_.generator_order(r);
      const bool killed = sgn(target) == 0 ? sgn(image) == 0
                                           : mpz_divisible_p(image.get_mpz_t(), target.get_mpz_t()) != 0;
      if (!killed) {
        throw Error(Errc::InvalidArgument, "map does not respect the torsion of its domain");
      }
    }
  }
}

GroupMap GroupMap::zero(AbelianGroup domain, AbelianGroup codomain) {
  IntMatrix m(codomain.generator_count(), domain.generator_count());
  return GroupMap(std::move(domain), std::move(codomain), std::move(m));
}

GroupMap GroupMap::identity(const AbelianGroup& group) {
  return GroupMap(group, group, IntMatrix::identity(group.generator_count()));
}

GroupMap GroupMap::compose(const GroupMap& inner) const {
  if (!(inner.codomain_ == domain_)) throw Error(Errc::InvalidArgument, "composition of unrelated maps");
  return GroupMap(inner.domain_, codomain_, matrix_ * inner.matrix_);
}

bool lattice_contains(const IntMatrix& generators, const IntMatrix& vectors) {
  if (generators.rows() != vectors.rows()) throw Error(Errc::InvalidArgument, "lattice dimension mismatch");
  if (generators.cols() == 0) return vectors.is_zero();
  const SmithForm snf = smith_normal_form(generators);
  const IntMatrix w = snf.u * vectors;
  for (std::size_t c = 0; c < w.cols(); ++c)
    for (std::size_t r = 0; r < w.rows(); ++r) {
      if (r < snf.rank) {
        if (!mpz_divisible_p(w(r, c).get_mpz_t(), snf.d(r, r).get_mpz_t())) return false;
      } else if (sgn(w(r, c)) != 0) {
        return false;
      }
    }
  return true;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const SmithForm snf = smith_normal_form(m);
  IntMatrix basis(m.cols(), m.cols() - snf.rank);
  for (std::size_t k = snf.rank; k < m.cols(); ++k)
    for (std::size_t r = 0; r < m.cols(); ++r) basis(r, k - snf.rank) = snf.v(r, k);
  return basis;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(Errc::InvalidArgument, "inverse of a non-square matrix");
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c);
    a[r][n + r] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) throw Error(Errc::InvariantViolation, "matrix is singular");
    std::swap(a[pivot], a[col]);
    const mpq_class lead = a[col][col];
    for (auto& x : a[col]) x /= lead;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const mpq_class factor = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const mpq_class& x = a[r][n + c];
      if (x.get_den() != 1) throw Error(Errc::InvariantViolation, "matrix is not unimodular");
      inv(r, c) = x.get_num();
    }
  return inv;
}

IntMatrix SubquotientBasis::coordinates(const IntMatrix& vectors) const {
  const IntMatrix w = lattice_u * vectors;
  IntMatrix lattice_coords(lattice_d.size(), vectors.cols());
  for (std::size_t c = 0; c < vectors.cols(); ++c)
    for (std::size_t r = 0; r < w.rows(); ++r) {
      if (r < lattice_d.size()) {
        if (!mpz_divisible_p(w(r, c).get_mpz_t(), lattice_d[r].get_mpz_t())) {
          throw Error(Errc::InvalidArgument, "vector is not in the lattice");
        }
        mpz_divexact(lattice_coords(r, c).get_mpz_t(), w(r, c).get_mpz_t(), lattice_d[r].get_mpz_t());
      } else if (sgn(w(r, c)) != 0) {
        throw Error(Errc::InvalidArgument, "vector is not in the lattice");
      }
    }
  const IntMatrix refined = inner_u * lattice_coords;
  IntMatrix out(kept.size(), vectors.cols());
  for (std::size_t g = 0; g < kept.size(); ++g)
    for (std::size_t c = 0; c < vectors.cols(); ++c) out(g, c) = refined(kept[g], c);
  return out;
}

SubquotientBasis subquotient_basis(const IntMatrix& generators, const IntMatrix& sub) {
  if (generators.rows() != sub.rows()) throw Error(Errc::InvalidArgument, "lattice dimension mismatch");
  const std::size_t ambient = generators.rows();
  SubquotientBasis out;
  if (generators.cols() == 0) {
    if (!sub.is_zero()) throw Error(Errc::InvariantViolation, "sublattice escapes the lattice");
    out.lattice_u = IntMatrix(0, ambient);
    out.section = IntMatrix(ambient, 0);
    return out;
  }
  const SmithForm snf = smith_normal_form(generators);
  const std::size_t r = snf.rank;
  out.lattice_u = snf.u;
  for (std::size_t i = 0; i < r; ++i) out.lattice_d.push_back(snf.d(i, i));
  out.inner_u = IntMatrix::identity(r);
  for (std::size_t i = 0; i < r; ++i) out.kept.push_back(i);

  // Coordinates of sub in the lattice basis, then refine that basis so sub
  // becomes diagonal in it.
  IntMatrix coords;
  try {
    coords = out.coordinates(sub);
  } catch (const Error&) {
    throw Error(Errc::InvariantViolation, "sublattice escapes the lattice");
  }
  std::vector<mpz_class> orders(r, 0);
  if (coords.cols() > 0) {
    const SmithForm inner = smith_normal_form(coords);
    out.inner_u = inner.u;
    for (std::size_t i = 0; i < inner.rank; ++i) orders[i] = inner.d(i, i);
  }
  out.kept.clear();
  // Canonical generator order: free first, then torsion along the chain.
  std::vector<mpz_class> torsion;
  std::size_t free_rank = 0;
  for (std::size_t i = 0; i < r; ++i)
    if (sgn(orders[i]) == 0) {
      out.kept.push_back(i);
      ++free_rank;
    }
  for (std::size_t i = 0; i < r; ++i)
    if (orders[i] > 1) {
      out.kept.push_back(i);
      torsion.push_back(orders[i]);
    }
  out.group = AbelianGroup::from_cyclic_orders([&] {
    std::vector<mpz_class> all(free_rank, 0);
    all.insert(all.end(), torsion.begin(), torsion.end());
    return all;
  }());
  if (out.group.generator_count() != out.kept.size()) {
    throw Error(Errc::InvariantViolation, "subquotient generators out of canonical order");
  }

  // Section: lattice basis b_i = U^-1 e_i d_i, refined by inner_u^-1.
  const IntMatrix u_inv = unimodular_inverse(snf.u);
  const IntMatrix inner_inv = unimodular_inverse(out.inner_u);
  IntMatrix basis(ambient, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < ambient; ++j) basis(j, i) = u_inv(j, i) * snf.d(i, i);
  const IntMatrix refined = basis * inner_inv;
  out.section = IntMatrix(ambient, out.kept.size());
  for (std::size_t g = 0; g < out.kept.size(); ++g)
    for (std::size_t j = 0; j < ambient; ++j) out.section(j, g) = refined(j, out.kept[g]);
  return out;
}

AbelianGroup subquotient(const IntMatrix& generators, const IntMatrix& sub) {
  return subquotient_basis(generators, sub).group;
}

GroupMap kernel_inclusion(const GroupMap& f) {
  const std::size_t a = f.domain().generator_count();
  const IntMatrix joint = f.matrix().hconcat(relations(f.codomain()));
  const SubquotientBasis basis = subquotient_basis(top_rows(integer_kernel(joint), a), relations(f.domain()));
  return GroupMap(basis.group, f.domain(), basis.section);
}

GroupMap cokernel_projection(const GroupMap& f) {
  const std::size_t b = f.codomain().generator_count();
  const IntMatrix ambient = IntMatrix::identity(b);
  const SubquotientBasis basis = subquotient_basis(ambient, f.matrix().hconcat(relations(f.codomain())));
  return GroupMap(f.codomain(), basis.group, basis.coordinates(ambient));
}

AbelianGroup kernel(const GroupMap& f) {
  const std::size_t a = f.domain().generator_count();
  const IntMatrix joint = f.matrix().hconcat(relations(f.codomain()));
  const IntMatrix lattice = top_rows(integer_kernel(joint), a);
  return subquotient(lattice, relations(f.domain()));
}

AbelianGroup cokernel(const GroupMap& f) {
  const std::size_t b = f.codomain().generator_count();
  return subquotient(IntMatrix::identity(b), f.matrix().hconcat(relations(f.codomain())));
}

AbelianGroup image(const GroupMap& f) {
  return subquotient(f.matrix().hconcat(relations(f.codomain())), relations(f.codomain()));
}

bool is_zero_map(const GroupMap& f) { return lattice_contains(relations(f.codomain()), f.matrix()); }
bool is_injective(const GroupMap& f) { return kernel(f).is_trivial(); }
bool is_surjective(const GroupMap& f) { return cokernel(f).is_trivial(); }

bool is_exact_at(const GroupMap& f, const GroupMap& g) {
  if (!(f.codomain() == g.domain())) throw Error(Errc::InvalidArgument, "maps do not share a middle group");
  if (!is_zero_map(g.compose(f))) return false;
  const std::size_t b = g.domain().generator_count();
  const IntMatrix ker_g = top_rows(integer_kernel(g.matrix().hconcat(relations(g.codomain()))), b);
  return lattice_contains(f.matrix().hconcat(relations(f.codomain())), ker_g);
}

}  // namespace wq
