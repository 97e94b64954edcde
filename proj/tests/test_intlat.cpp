#include <gtest/gtest.h>

#include <random>

#include "isorep/intlat.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace isorep;
using support::from_ll;
using support::to_ll;

namespace {

IntMatrix M(std::initializer_list<std::initializer_list<long>> rows) { return IntMatrix::from_rows(rows); }

bool is_unimodular(const IntMatrix& u) {
  const long long d = oracle::det(to_ll(u));
  return d == 1 || d == -1;
}

// A random unimodular matrix built from elementary row operations.
IntMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int step = 0; step < 6; ++step) {
    const std::size_t a = pick(rng), b = pick(rng);
    if (a == b) {
      u.swap_rows(a, (a + 1) % n);
      continue;
    }
    const int k = coef(rng);
    for (std::size_t c = 0; c < n; ++c) u(a, c) += k * u(b, c);
  }
  return u;
}

}  // namespace

TEST(Hnf, SpecExample2x2) {
  const LatticeBasis h = hnf(M({{2, 4}, {4, 6}}));
  EXPECT_EQ(h.basis(), M({{2, 0}, {0, 2}}));
  // Membership both ways against the oracle.
  const oracle::Mat original = {{2, 4}, {4, 6}};
  for (std::size_t r = 0; r < h.rank(); ++r) EXPECT_TRUE(oracle::lattice_member(to_ll(h.basis().row(r)), original));
  for (const auto& row : original) EXPECT_TRUE(lattice_member(from_ll(row), h));
}

TEST(Hnf, IdentityIsCanonical) { EXPECT_EQ(hnf(IntMatrix::identity(3)).basis(), IntMatrix::identity(3)); }

TEST(Hnf, ZeroMatrixGivesZeroLattice) {
  const LatticeBasis h = hnf(IntMatrix(2, 3));
  EXPECT_EQ(h.rank(), 0u);
  EXPECT_EQ(h.ambient_dim(), 3u);
  EXPECT_EQ(h, LatticeBasis(3));
}

TEST(Hnf, ShapeInvariants) {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = rng() % 5, cols = 1 + rng() % 4;
    const auto m = support::random_matrix(rng, rows, cols, -6, 6);
    const LatticeBasis h = hnf(from_ll(cols, m));
    EXPECT_EQ(h.rank(), oracle::rank_q(m));
    for (std::size_t r = 0; r < h.rank(); ++r) {
      const std::size_t p = h.pivots()[r];
      if (r > 0) {
        EXPECT_GT(p, h.pivots()[r - 1]);
      }
      EXPECT_GT(h.basis()(r, p), 0);
      for (std::size_t c = 0; c < p; ++c) EXPECT_EQ(h.basis()(r, c), 0);
      for (std::size_t above = 0; above < r; ++above) {
        EXPECT_GE(h.basis()(above, p), 0);
        EXPECT_LT(h.basis()(above, p), h.basis()(r, p));
      }
    }
    // Same lattice as the input rows.
    for (const auto& row : m) EXPECT_TRUE(lattice_member(from_ll(row), h));
    for (std::size_t r = 0; r < h.rank(); ++r) EXPECT_TRUE(oracle::lattice_member(to_ll(h.basis().row(r)), m));
  }
}

TEST(Hnf, CanonicalUnderUnimodularRowOps) {
  std::mt19937 rng(12);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    const IntMatrix m = from_ll(cols, support::random_matrix(rng, rows, cols, -5, 5));
    const IntMatrix u = random_unimodular(rng, rows);
    ASSERT_TRUE(is_unimodular(u));
    EXPECT_EQ(hnf(u * m), hnf(m));
  }
}

TEST(Hnf, Idempotent) {
  std::mt19937 rng(13);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = rng() % 5, cols = 1 + rng() % 4;
    const LatticeBasis h = hnf(from_ll(cols, support::random_matrix(rng, rows, cols, -7, 7)));
    EXPECT_EQ(hnf(h.basis()), h);
  }
}

TEST(Hnf, LargeIntermediateEntries) {
  const LatticeBasis h = hnf(M({{1000003, 999983, 7}, {999979, 1000033, 11}, {65537, 257, 17}}));
  EXPECT_EQ(h.rank(), 3u);
  Int prod = 1;
  for (std::size_t r = 0; r < 3; ++r) prod *= h.basis()(r, r);
  const long long d = oracle::det({{1000003, 999983, 7}, {999979, 1000033, 11}, {65537, 257, 17}});
  EXPECT_EQ(prod, Int(static_cast<long>(d < 0 ? -d : d)));
}

TEST(Snf, SpecExamples) {
  EXPECT_EQ(snf(M({{2, 4}, {4, 6}})).diag, (std::vector<Int>{2, 2}));
  EXPECT_EQ(snf(IntMatrix::identity(2)).diag, (std::vector<Int>{1, 1}));
  EXPECT_EQ(snf(M({{0}})).diag, (std::vector<Int>{0}));
}

TEST(Snf, DiagonalisesWithUnimodularTransformsAndMatchesDeterminantalDivisors) {
  std::mt19937 rng(21);
  for (int t = 0; t < 300; ++t) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    const auto raw = support::random_matrix(rng, rows, cols, -6, 6);
    const IntMatrix m = from_ll(cols, raw);
    const SmithForm s = snf(m);
    ASSERT_EQ(s.diag.size(), std::min(rows, cols));
    EXPECT_TRUE(is_unimodular(s.left));
    EXPECT_TRUE(is_unimodular(s.right));
    EXPECT_EQ(s.right * s.right_inverse, IntMatrix::identity(cols));
    const IntMatrix d = s.left * m * s.right;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) EXPECT_EQ(d(r, c), r == c ? s.diag[r] : Int(0));
    for (std::size_t i = 0; i + 1 < s.diag.size(); ++i) {
      if (s.diag[i] == 0) {
        EXPECT_EQ(s.diag[i + 1], 0);
      } else {
        EXPECT_EQ(s.diag[i + 1] % s.diag[i], 0);
      }
    }
    // d_1 ... d_k equals the k-th determinantal divisor.
    Int prod = 1;
    for (std::size_t k = 1; k <= s.diag.size(); ++k) {
      prod *= s.diag[k - 1];
      EXPECT_EQ(prod, Int(static_cast<long>(oracle::determinantal_divisor(raw, k))));
    }
  }
}

TEST(Kernel, SpecExamples) {
  EXPECT_EQ(integer_kernel(M({{1, 1, 1}})).basis(), M({{1, 0, -1}, {0, 1, -1}}));
  EXPECT_EQ(integer_kernel(IntMatrix::identity(2)).rank(), 0u);
  EXPECT_EQ(integer_kernel(IntMatrix(1, 2)).basis(), IntMatrix::identity(2));
}

TEST(Kernel, SoundAndCompleteOnBox) {
  std::mt19937 rng(31);
  for (int t = 0; t < 60; ++t) {
    const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 4;
    const auto raw = support::random_matrix(rng, rows, cols, -3, 3);
    const LatticeBasis k = integer_kernel(from_ll(cols, raw));
    EXPECT_EQ(k.rank(), cols - oracle::rank_q(raw));
    for (std::size_t r = 0; r < k.rank(); ++r) {
      const auto v = to_ll(k.basis().row(r));
      for (const auto& row : raw) {
        long long dot = 0;
        for (std::size_t c = 0; c < cols; ++c) dot += row[c] * v[c];
        EXPECT_EQ(dot, 0);
      }
    }
    support::for_each_box_point(cols, 3, [&](const oracle::Vec& x) {
      bool in_kernel = true;
      for (const auto& row : raw) {
        long long dot = 0;
        for (std::size_t c = 0; c < cols; ++c) dot += row[c] * x[c];
        in_kernel = in_kernel && dot == 0;
      }
      if (in_kernel) EXPECT_TRUE(lattice_member(from_ll(x), k));
    });
  }
}

TEST(Membership, SpecExamples) {
  EXPECT_TRUE(lattice_member(make_vector({2, 0}), hnf(M({{1, -1}, {1, 1}}))));
  EXPECT_TRUE(lattice_member(make_vector({0, 0}), LatticeBasis(2)));
  EXPECT_TRUE(lattice_member(make_vector({0, 0}), hnf(M({{3, 1}}))));
  EXPECT_FALSE(lattice_member(make_vector({1, 0}), hnf(M({{2, 0}}))));
  EXPECT_THROW(lattice_member(make_vector({1}), LatticeBasis(2)), std::invalid_argument);
}

TEST(Membership, AgreesWithOracleAndCoordinates) {
  std::mt19937 rng(41);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 3;
    const auto gens = support::random_matrix(rng, 1 + rng() % 3, n, -4, 4);
    const LatticeBasis l = hnf(from_ll(n, gens));
    support::for_each_box_point(n, 3, [&](const oracle::Vec& x) {
      const bool member = lattice_member(from_ll(x), l);
      EXPECT_EQ(member, oracle::lattice_member(x, gens));
      const auto c = lattice_coordinates(from_ll(x), l);
      EXPECT_EQ(c.has_value(), member);
      if (c) {
        EXPECT_EQ(*c * l.basis(), from_ll(x));
      }
      const IntVector red = reduce_modulo(from_ll(x), l);
      EXPECT_TRUE(lattice_member(from_ll(x) - red, l));
      EXPECT_EQ(reduce_modulo(red, l), red);
    });
  }
}

TEST(SumIntersect, SpecExamples) {
  const LatticeBasis a = hnf(M({{2, 0}})), b = hnf(M({{0, 3}}));
  EXPECT_EQ(lattice_sum(a, b).basis(), M({{2, 0}, {0, 3}}));
  EXPECT_EQ(lattice_intersect(hnf(M({{1, -1}})), hnf(M({{1, 0}}))).rank(), 0u);
  const LatticeBasis l = hnf(M({{1, 2}, {0, 5}}));
  EXPECT_EQ(lattice_sum(l, LatticeBasis(2)), l);
  EXPECT_EQ(lattice_intersect(l, LatticeBasis::full(2)), l);
  EXPECT_THROW(lattice_sum(LatticeBasis(2), LatticeBasis(3)), std::invalid_argument);
}

TEST(SumIntersect, AgreeWithBoxEnumeration) {
  std::mt19937 rng(51);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 3;
    const auto ga = support::random_matrix(rng, 1 + rng() % 2, n, -3, 3);
    const auto gb = support::random_matrix(rng, 1 + rng() % 2, n, -3, 3);
    const LatticeBasis a = hnf(from_ll(n, ga)), b = hnf(from_ll(n, gb));
    const LatticeBasis s = lattice_sum(a, b), i = lattice_intersect(a, b);
    EXPECT_TRUE(lattice_contains(s, a));
    EXPECT_TRUE(lattice_contains(s, b));
    EXPECT_TRUE(lattice_contains(a, i));
    EXPECT_TRUE(lattice_contains(b, i));
    oracle::Mat both = ga;
    both.insert(both.end(), gb.begin(), gb.end());
    support::for_each_box_point(n, 5, [&](const oracle::Vec& x) {
      EXPECT_EQ(lattice_member(from_ll(x), s), oracle::lattice_member(x, both));
      EXPECT_EQ(lattice_member(from_ll(x), i), oracle::lattice_member(x, ga) && oracle::lattice_member(x, gb));
    });
  }
}

TEST(SumIntersect, FourDimensionalBox) {
  std::mt19937 rng(52);
  for (int t = 0; t < 4; ++t) {
    const auto ga = support::random_matrix(rng, 2, 4, -2, 2);
    const auto gb = support::random_matrix(rng, 3, 4, -2, 2);
    const LatticeBasis a = hnf(from_ll(4, ga)), b = hnf(from_ll(4, gb));
    const LatticeBasis i = lattice_intersect(a, b);
    support::for_each_box_point(4, 5, [&](const oracle::Vec& x) {
      const IntVector v = from_ll(x);
      EXPECT_EQ(lattice_member(v, i), lattice_member(v, a) && lattice_member(v, b));
    });
  }
}

TEST(Quotient, SpecExamples) {
  const QuotientStructure q = quotient_structure(hnf(M({{2, 0}, {0, 3}})));
  EXPECT_EQ(q.free_rank(), 0u);
  EXPECT_EQ(q.invariant_factors(), (std::vector<Int>{6}));
  const QuotientStructure e = quotient_structure(LatticeBasis(2));
  EXPECT_EQ(e.free_rank(), 2u);
  EXPECT_TRUE(e.invariant_factors().empty());
  const QuotientStructure s = quotient_structure(hnf(M({{1, 0}})));
  EXPECT_EQ(s.free_rank(), 1u);
  EXPECT_TRUE(s.invariant_factors().empty());
}

TEST(Quotient, ProjectionKernelIsTheLattice) {
  std::mt19937 rng(61);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 3;
    const auto gens = support::random_matrix(rng, rng() % 3, n, -4, 4);
    const LatticeBasis l = hnf(from_ll(n, gens));
    const QuotientStructure q = quotient_structure(l);
    EXPECT_EQ(q.free_rank(), n - l.rank());
    const QuotientImage zero = q.project(IntVector(n, Int(0)));
    const auto constraints = q.membership_constraints();
    support::for_each_box_point(n, 3, [&](const oracle::Vec& x) {
      const IntVector v = from_ll(x);
      const bool member = lattice_member(v, l);
      EXPECT_EQ(q.project(v) == zero, member);
      bool satisfied = true;
      for (const auto& c : constraints) {
        Int dot = 0;
        for (std::size_t k = 0; k < n; ++k) dot += c.functional[k] * v[k];
        satisfied = satisfied && (c.modulus == 0 ? dot == 0 : dot % c.modulus == 0);
      }
      EXPECT_EQ(satisfied, member);
    });
  }
}

TEST(Quotient, NormalizeCyclicOrders) {
  const AbelianInvariants a = normalize_cyclic_orders({Int(2), Int(0), Int(3), Int(1), Int(4)});
  EXPECT_EQ(a.free_rank, 1u);
  EXPECT_EQ(a.torsion, (std::vector<Int>{2, 12}));
  EXPECT_EQ(normalize_cyclic_orders({}).free_rank, 0u);
}
