#pragma once

// Exact integer linear algebra: Hermite and Smith normal forms, integer
// kernels and sublattice arithmetic in Z^n.  All entries are GMP integers.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <vector>

namespace isorep {

using Int = mpz_class;
using IntVector = std::vector<Int>;

IntVector make_vector(std::initializer_list<long> values);
bool is_zero(const IntVector& v);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator*(const Int& k, const IntVector& v);
std::ostream& operator<<(std::ostream& os, const IntVector& v);

/// Dense row-major integer matrix.  Zero rows or zero columns are legal.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::size_t cols, const std::vector<IntVector>& rows);
  /// Convenience for literals; all rows must have the same length (cols
  /// is taken from the first row, so an empty list gives a 0x0 matrix).
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  void append_row(const IntVector& v);
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  IntMatrix transpose() const;
  /// Rows of `a` followed by rows of `b`; column counts must agree.
  static IntMatrix stack(const IntMatrix& a, const IntMatrix& b);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Row vector times matrix.
IntVector operator*(const IntVector& v, const IntMatrix& m);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// A sublattice of Z^n stored by its canonical row Hermite normal form:
/// pivot columns strictly increase, pivots are positive and the entries
/// above each pivot lie in [0, pivot).  Two bases describe the same lattice
/// iff they compare equal.
class LatticeBasis {
 public:
  /// The zero lattice in Z^n.
  explicit LatticeBasis(std::size_t ambient_dim = 0);
  /// The full lattice Z^n.
  static LatticeBasis full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;

 private:
  friend LatticeBasis hnf(const IntMatrix& m);
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

LatticeBasis hnf(const IntMatrix& m);

struct SmithForm {
  std::vector<Int> diag;  // length min(rows, cols); d1 | d2 | ...; zeros trail
  IntMatrix left;         // rows x rows, unimodular
  IntMatrix right;        // cols x cols, unimodular
  IntMatrix right_inverse;
};

/// left * m * right is diagonal with entries `diag`.
SmithForm snf(const IntMatrix& m);

/// Canonical basis of {x in Z^cols : m x = 0}.
LatticeBasis integer_kernel(const IntMatrix& m);

/// Integer coefficients c with c * basis == v, if they exist.
std::optional<IntVector> lattice_coordinates(const IntVector& v, const LatticeBasis& lattice);
bool lattice_member(const IntVector& v, const LatticeBasis& lattice);
/// The representative of v + lattice whose pivot coordinates lie in [0, pivot).
IntVector reduce_modulo(const IntVector& v, const LatticeBasis& lattice);

LatticeBasis lattice_sum(const LatticeBasis& a, const LatticeBasis& b);
LatticeBasis lattice_intersect(const LatticeBasis& a, const LatticeBasis& b);
/// True iff inner is a sublattice of outer.
bool lattice_contains(const LatticeBasis& outer, const LatticeBasis& inner);

/// Image of a vector in Z^n / L, split into free coordinates and residues
/// modulo the invariant factors.
struct QuotientImage {
  IntVector free;
  IntVector torsion;
  friend bool operator==(const QuotientImage&, const QuotientImage&) = default;
};

/// Presentation of Z^n / L as Z^free_rank + sum Z/d_i.
class QuotientStructure {
 public:
  explicit QuotientStructure(const LatticeBasis& lattice);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Int>& invariant_factors() const { return factors_; }
  std::size_t ambient_dim() const { return change_.rows(); }

  QuotientImage project(const IntVector& v) const;

  /// Linear constraints describing L: x is in L iff every functional
  /// evaluates to 0 on x, modulo the constraint's modulus.
  struct Constraint {
    IntVector functional;
    Int modulus;  // 0 means exact equality
  };
  std::vector<Constraint> membership_constraints() const;

 private:
  std::size_t rank_ = 0;
  std::size_t free_rank_ = 0;
  std::vector<Int> diag_;     // SNF diagonal (length rank), all > 0
  std::vector<Int> factors_;  // the entries of diag_ greater than 1
  IntMatrix change_;          // x -> x * change_
};

QuotientStructure quotient_structure(const LatticeBasis& lattice);

/// Normalizes a list of cyclic orders (0 = infinite) into SNF invariant
/// factors > 1 plus a free rank.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};
AbelianInvariants normalize_cyclic_orders(const std::vector<Int>& orders);

}  // namespace isorep
