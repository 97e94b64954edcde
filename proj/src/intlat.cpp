#include "isorep/intlat.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace isorep {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
  }
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

struct Bezout {
  Int g, s, t;  // s*a + t*b = g = gcd(a, b) >= 0
};

Bezout bezout(const Int& a, const Int& b) {
  Bezout r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Like bezout, but a pure elimination (s = 1, t = 0) whenever a divides b.
Bezout pivot_bezout(const Int& a, const Int& b) {
  if (a != 0 && b % a == 0) return {a, Int(1), Int(0)};
  return bezout(a, b);
}

// Replaces rows (p, q) by (s*p + t*q, -(b/g)*p + (a/g)*q), a determinant-one
// transform that leaves gcd(a, b) in row p and zero in row q at column c.
void combine_rows(IntMatrix& m, std::size_t p, std::size_t q, std::size_t c) {
  const Int a = m(p, c);
  const Int b = m(q, c);
  const Bezout z = bezout(a, b);
  const Int ag = a / z.g;
  const Int bg = b / z.g;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const Int x = m(p, j);
    const Int y = m(q, j);
    m(p, j) = z.s * x + z.t * y;
    m(q, j) = ag * y - bg * x;
  }
}

void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Int& k) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += k * m(source, j);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

// Row echelon form using only the first `limit` columns for pivots.
// Returns the pivot columns; rows past the last pivot are zero in those
// columns.
std::vector<std::size_t> echelonize(IntMatrix& m, std::size_t limit) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < m.rows(); ++c) {
    std::size_t found = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (m(i, c) != 0) {
        found = i;
        break;
      }
    }
    if (found == m.rows()) continue;
    m.swap_rows(r, found);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) != 0) combine_rows(m, r, i, c);
    }
    if (m(r, c) < 0) negate_row(m, r);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

// ---------------------------------------------------------------- vectors

IntVector make_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  require_same_dim(a.size(), b.size(), "vector add");
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  require_same_dim(a.size(), b.size(), "vector subtract");
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector operator*(const Int& k, const IntVector& v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = k * v[i];
  return r;
}

std::ostream& operator<<(std::ostream& os, const IntVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

// ---------------------------------------------------------------- matrices

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::size_t cols, const std::vector<IntVector>& rows) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(make_vector(r));
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void IntMatrix::append_row(const IntVector& v) {
  require_same_dim(v.size(), cols_, "append_row");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::stack(const IntMatrix& a, const IntMatrix& b) {
  require_same_dim(a.cols(), b.cols(), "stack");
  IntMatrix m = a;
  m.data_.insert(m.data_.end(), b.data_.begin(), b.data_.end());
  m.rows_ += b.rows_;
  return m;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  require_same_dim(a.cols(), b.rows(), "matrix product");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

IntVector operator*(const IntVector& v, const IntMatrix& m) {
  require_same_dim(v.size(), m.rows(), "vector-matrix product");
  IntVector r(m.cols(), Int(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m(i, j);
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) os << (i ? "," : "") << m.row(i);
  return os << ']';
}

// ---------------------------------------------------------------- HNF

LatticeBasis::LatticeBasis(std::size_t ambient_dim) : basis_(0, ambient_dim) {}

LatticeBasis LatticeBasis::full(std::size_t ambient_dim) {
  return hnf(IntMatrix::identity(ambient_dim));
}

LatticeBasis hnf(const IntMatrix& m) {
  IntMatrix work = m;
  const auto pivots = echelonize(work, work.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const std::size_t c = pivots[i];
    for (std::size_t k = 0; k < i; ++k) {
      if (work(k, c) == 0) continue;
      const Int q = floor_div(work(k, c), work(i, c));
      if (q != 0) add_row_multiple(work, k, i, -q);
    }
  }
  LatticeBasis result(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) result.basis_.append_row(work.row(i));
  result.pivots_ = pivots;
  return result;
}

// ---------------------------------------------------------------- SNF

namespace {

// Column analogue of combine_rows on columns (p, q) at row r, recording the
// transform in `right` and its inverse in `right_inv`.
void combine_cols(IntMatrix& m, IntMatrix& right, IntMatrix& right_inv, std::size_t p,
                  std::size_t q, std::size_t r) {
  const Int a = m(r, p);
  const Int b = m(r, q);
  const Bezout z = pivot_bezout(a, b);
  const Int ag = a / z.g;
  const Int bg = b / z.g;
  auto apply = [&](IntMatrix& x) {
    for (std::size_t i = 0; i < x.rows(); ++i) {
      const Int u = x(i, p);
      const Int v = x(i, q);
      x(i, p) = z.s * u + z.t * v;
      x(i, q) = ag * v - bg * u;
    }
  };
  apply(m);
  apply(right);
  // Inverse of [[s, -b/g], [t, a/g]] is [[a/g, b/g], [-t, s]], applied on the left.
  for (std::size_t j = 0; j < right_inv.cols(); ++j) {
    const Int u = right_inv(p, j);
    const Int v = right_inv(q, j);
    right_inv(p, j) = ag * u + bg * v;
    right_inv(q, j) = z.s * v - z.t * u;
  }
}

void combine_rows_tracked(IntMatrix& m, IntMatrix& left, std::size_t p, std::size_t q,
                          std::size_t c) {
  const Int a = m(p, c);
  const Int b = m(q, c);
  const Bezout z = pivot_bezout(a, b);
  const Int ag = a / z.g;
  const Int bg = b / z.g;
  auto apply = [&](IntMatrix& x) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      const Int u = x(p, j);
      const Int v = x(q, j);
      x(p, j) = z.s * u + z.t * v;
      x(q, j) = ag * v - bg * u;
    }
  };
  apply(m);
  apply(left);
}

}  // namespace

SmithForm snf(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(m.rows());
  IntMatrix right = IntMatrix::identity(m.cols());
  IntMatrix right_inv = IntMatrix::identity(m.cols());
  const std::size_t n = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < n; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = a.rows(), pj = a.cols();
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j)
        if (a(i, j) != 0 && (pi == a.rows() || abs(a(i, j)) < abs(a(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == a.rows()) break;
    a.swap_rows(t, pi);
    left.swap_rows(t, pi);
    a.swap_cols(t, pj);
    right.swap_cols(t, pj);
    right_inv.swap_rows(t, pj);

    for (;;) {
      for (std::size_t i = t + 1; i < a.rows(); ++i)
        if (a(i, t) != 0) combine_rows_tracked(a, left, t, i, t);
      for (std::size_t j = t + 1; j < a.cols(); ++j)
        if (a(t, j) != 0) combine_cols(a, right, right_inv, t, j, t);

      bool column_clear = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i)
        if (a(i, t) != 0) column_clear = false;
      if (!column_clear) continue;

      // The pivot must divide the whole trailing block.
      std::size_t bad = a.rows();
      for (std::size_t i = t + 1; i < a.rows() && bad == a.rows(); ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == a.rows()) break;
      add_row_multiple(a, t, bad, Int(1));
      add_row_multiple(left, t, bad, Int(1));
    }
    if (a(t, t) < 0) {
      negate_row(a, t);
      negate_row(left, t);
    }
  }

  SmithForm result;
  result.diag.reserve(n);
  for (std::size_t i = 0; i < n; ++i) result.diag.push_back(a(i, i));
  result.left = std::move(left);
  result.right = std::move(right);
  result.right_inverse = std::move(right_inv);
  return result;
}

// ---------------------------------------------------------------- kernels and lattices

LatticeBasis integer_kernel(const IntMatrix& m) {
  // Row-reduce [m^T | I]; the identity block tracks the unimodular transform,
  // and its rows beyond rank(m) span the kernel.
  const std::size_t n = m.cols();
  const std::size_t k = m.rows();
  IntMatrix work(n, k + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) work(i, j) = m(j, i);
    work(i, k + i) = 1;
  }
  const auto pivots = echelonize(work, k);
  IntMatrix kernel(0, n);
  for (std::size_t i = pivots.size(); i < n; ++i) {
    IntVector v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = work(i, k + j);
    kernel.append_row(v);
  }
  return hnf(kernel);
}

std::optional<IntVector> lattice_coordinates(const IntVector& v, const LatticeBasis& lattice) {
  require_same_dim(v.size(), lattice.ambient_dim(), "lattice_coordinates");
  IntVector rest = v;
  IntVector coeffs(lattice.rank());
  const auto& b = lattice.basis();
  const auto& pivots = lattice.pivots();
  std::size_t col = 0;
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    for (; col < pivots[i]; ++col)
      if (rest[col] != 0) return std::nullopt;
    if (rest[col] % b(i, col) != 0) return std::nullopt;
    coeffs[i] = rest[col] / b(i, col);
    if (coeffs[i] != 0)
      for (std::size_t j = col; j < v.size(); ++j) rest[j] -= coeffs[i] * b(i, j);
    ++col;
  }
  for (; col < v.size(); ++col)
    if (rest[col] != 0) return std::nullopt;
  return coeffs;
}

bool lattice_member(const IntVector& v, const LatticeBasis& lattice) {
  return lattice_coordinates(v, lattice).has_value();
}

IntVector reduce_modulo(const IntVector& v, const LatticeBasis& lattice) {
  require_same_dim(v.size(), lattice.ambient_dim(), "reduce_modulo");
  IntVector r = v;
  const auto& b = lattice.basis();
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    const std::size_t c = lattice.pivots()[i];
    const Int q = floor_div(r[c], b(i, c));
    if (q != 0)
      for (std::size_t j = c; j < r.size(); ++j) r[j] -= q * b(i, j);
  }
  return r;
}

LatticeBasis lattice_sum(const LatticeBasis& a, const LatticeBasis& b) {
  require_same_dim(a.ambient_dim(), b.ambient_dim(), "lattice_sum");
  return hnf(IntMatrix::stack(a.basis(), b.basis()));
}

LatticeBasis lattice_intersect(const LatticeBasis& a, const LatticeBasis& b) {
  require_same_dim(a.ambient_dim(), b.ambient_dim(), "lattice_intersect");
  const std::size_t n = a.ambient_dim();
  // (c, d) with c*A = d*B  <=>  (c, d) * [A; -B] = 0.
  IntMatrix neg_b = b.basis();
  for (std::size_t i = 0; i < neg_b.rows(); ++i) negate_row(neg_b, i);
  const IntMatrix stacked = IntMatrix::stack(a.basis(), neg_b);
  const LatticeBasis relations = integer_kernel(stacked.transpose());
  IntMatrix gens(0, n);
  for (std::size_t i = 0; i < relations.rank(); ++i) {
    IntVector c = relations.basis().row(i);
    c.resize(a.rank());
    gens.append_row(c * a.basis());
  }
  return hnf(gens);
}

bool lattice_contains(const LatticeBasis& outer, const LatticeBasis& inner) {
  require_same_dim(outer.ambient_dim(), inner.ambient_dim(), "lattice_contains");
  for (std::size_t i = 0; i < inner.rank(); ++i)
    if (!lattice_member(inner.basis().row(i), outer)) return false;
  return true;
}

// ---------------------------------------------------------------- quotients

QuotientStructure::QuotientStructure(const LatticeBasis& lattice) {
  const SmithForm s = snf(lattice.basis());
  rank_ = lattice.rank();
  free_rank_ = lattice.ambient_dim() - rank_;
  diag_.assign(s.diag.begin(), s.diag.begin() + static_cast<std::ptrdiff_t>(rank_));
  for (const auto& d : diag_)
    if (d > 1) factors_.push_back(d);
  change_ = s.right;
}

QuotientImage QuotientStructure::project(const IntVector& v) const {
  require_same_dim(v.size(), ambient_dim(), "quotient projection");
  const IntVector y = v * change_;
  QuotientImage image;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (diag_[i] > 1) {
      Int r;
      mpz_fdiv_r(r.get_mpz_t(), y[i].get_mpz_t(), diag_[i].get_mpz_t());
      image.torsion.push_back(r);
    }
  }
  for (std::size_t i = rank_; i < y.size(); ++i) image.free.push_back(y[i]);
  return image;
}

std::vector<QuotientStructure::Constraint> QuotientStructure::membership_constraints() const {
  std::vector<Constraint> out;
  const std::size_t n = ambient_dim();
  for (std::size_t i = 0; i < n; ++i) {
    const Int modulus = i < rank_ ? diag_[i] : Int(0);
    if (modulus == 1) continue;
    IntVector f(n);
    for (std::size_t j = 0; j < n; ++j) f[j] = change_(j, i);
    out.push_back({std::move(f), modulus});
  }
  return out;
}

QuotientStructure quotient_structure(const LatticeBasis& lattice) {
  return QuotientStructure(lattice);
}

AbelianInvariants normalize_cyclic_orders(const std::vector<Int>& orders) {
  AbelianInvariants out;
  std::vector<Int> finite;
  for (const auto& d : orders) {
    if (d < 0) throw std::invalid_argument("cyclic order must be nonnegative");
    if (d == 0)
      ++out.free_rank;
    else if (d > 1)
      finite.push_back(d);
  }
  IntMatrix diag(finite.size(), finite.size());
  for (std::size_t i = 0; i < finite.size(); ++i) diag(i, i) = finite[i];
  for (const auto& d : snf(diag).diag)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

}  // namespace isorep
