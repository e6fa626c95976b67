#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"

using namespace freeab;
using namespace freeab::testing;

namespace {

template <ExactRing R>
bool invertible(const Matrix<R>& m) {
  return solve_left(m, Matrix<R>::identity(m.ring(), m.rows())).has_value();
}

// D = L A R, D diagonal, d_i | d_{i+1}, zeros last, L and R invertible.
template <ExactRing R>
void expect_snf(const Matrix<R>& a) {
  const R& ring = a.ring();
  SnfResult<R> snf = smith_normal_form(a);
  ASSERT_EQ(snf.L * a * snf.R_, snf.D) << a;
  for (std::size_t i = 0; i < snf.D.rows(); ++i)
    for (std::size_t j = 0; j < snf.D.cols(); ++j)
      if (i != j) EXPECT_TRUE(ring.is_zero(snf.D(i, j))) << a;
  ASSERT_EQ(snf.diag.size(), std::min(a.rows(), a.cols()));
  for (std::size_t i = 0; i + 1 < snf.diag.size(); ++i) {
    EXPECT_TRUE(ring.divides(snf.diag[i], snf.diag[i + 1])) << a;
    if (ring.is_zero(snf.diag[i])) EXPECT_TRUE(ring.is_zero(snf.diag[i + 1])) << a;
  }
  EXPECT_TRUE(invertible(snf.L)) << a;
  EXPECT_TRUE(invertible(snf.R_)) << a;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// Every k x m matrix over a small finite ring, as a flat index.
Matrix<ModularRing> nth_matrix(const ModularRing& ring, std::size_t rows, std::size_t cols, std::size_t index) {
  const auto q = static_cast<std::size_t>(ring.modulus());
  Matrix<ModularRing> m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j, index /= q) m(i, j) = static_cast<std::int64_t>(index % q);
  return m;
}

}  // namespace

TEST(RingSpec, ParsesAndPrints) {
  EXPECT_EQ(RingSpec::parse("zz"), RingSpec::integers());
  EXPECT_EQ(RingSpec::parse("qq"), RingSpec::rationals());
  EXPECT_EQ(RingSpec::parse("zmod6").modulus(), 6);
  EXPECT_EQ(RingSpec::parse("gf5").kind(), RingKind::PrimeField);
  for (const char* name : {"zz", "qq", "zmod4", "zmod6", "gf2", "gf7"}) EXPECT_EQ(RingSpec::parse(name).name(), name);
}

TEST(RingSpec, RejectsBadParameters) {
  EXPECT_THROW(RingSpec::integers_mod(1), Error);
  EXPECT_THROW(RingSpec::prime_field(4), Error);
  EXPECT_THROW(RingSpec::parse("zmodx"), Error);
  EXPECT_THROW(RingSpec::parse("field"), Error);
}

TEST(ModularRing, CanonicalResidues) {
  ModularRing r = zmod(6);
  EXPECT_EQ(r.from_int(-1), 5);
  EXPECT_EQ(r.from_int(13), 1);
  // 10^20 = 4 (mod 6), so -(10^20 + 7) = 1.
  EXPECT_EQ(r.from_big(BigInt("-100000000000000000007")), 1);
  EXPECT_EQ(mat(r, {{-1, 7}}), mat(r, {{5, 1}}));
}

TEST(Smith, WorkedIntegerExample) {
  auto a = mat(kZ, {{2, 4}, {6, 8}});
  SnfResult<IntegerRing> snf = smith_normal_form(a);
  EXPECT_EQ(snf.diag, (std::vector<BigInt>{2, 4}));
  expect_snf(a);
  // d1 is the gcd of the entries and d1 d2 = |det|.
  EXPECT_EQ(snf.diag[0], 2);
  EXPECT_EQ(snf.diag[0] * snf.diag[1], 8);
}

TEST(Smith, EmptyAndIdentity) {
  EXPECT_TRUE(smith_normal_form(empty(kZ, 0, 0)).diag.empty());
  ModularRing f2 = gf(2);
  EXPECT_EQ(smith_normal_form(Matrix<ModularRing>::identity(f2, 3)).diag, (std::vector<std::int64_t>{1, 1, 1}));
  auto wide = smith_normal_form(empty(kZ, 0, 3));
  EXPECT_TRUE(wide.diag.empty());
  EXPECT_EQ(wide.R_.rows(), 3u);
}

TEST(Smith, RationalRankForm) {
  auto snf = smith_normal_form(mat(kQ, {{2, 4}, {1, 2}, {3, 1}}));
  EXPECT_EQ(snf.diag, (std::vector<BigRational>{1, 1}));
  snf = smith_normal_form(mat(kQ, {{2, 4}, {1, 2}}));
  EXPECT_EQ(snf.diag, (std::vector<BigRational>{1, 0}));
}

TEST(Smith, PropertyOverSeveralRings) {
  Rng rng(kDefaultSeed);
  std::uniform_int_distribution<std::size_t> dim(0, 4);
  for (int i = 0; i < 300; ++i) {
    const std::size_t r = dim(rng), c = dim(rng);
    expect_snf(random_matrix(kZ, r, c, rng, 9));
    expect_snf(random_matrix(kQ, r, c, rng, 5));
    for (std::int64_t n : {2, 4, 6, 12, 5, 9}) expect_snf(random_matrix(zmod(n), r, c, rng));
  }
}

TEST(Smith, IntegerDeterminantOracle) {
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    auto a = random_matrix(kZ, 2, 2, rng, 20);
    auto d = smith_normal_form(a).diag;
    BigInt det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), BigInt(gcd(a(0, 0), a(0, 1))).get_mpz_t(), BigInt(gcd(a(1, 0), a(1, 1))).get_mpz_t());
    EXPECT_EQ(abs(d[0]), g) << a;
    EXPECT_EQ(abs(d[0] * d[1]), abs(det)) << a;
  }
}

// |coker A| over Z/n from the diagonal against counting cosets.
TEST(Smith, ModularDiagonalCountsCosets) {
  Rng rng(11);
  for (std::int64_t n : {4, 6, 8, 9, 12}) {
    ModularRing ring = zmod(n);
    for (int i = 0; i < 60; ++i) {
      std::uniform_int_distribution<std::size_t> dim(0, 3);
      const std::size_t r = dim(rng), c = dim(rng);
      auto a = random_matrix(ring, r, c, rng);
      BigInt predicted = 1;
      auto diag = smith_normal_form(a).diag;
      for (std::size_t j = 0; j < c; ++j) {
        const std::int64_t d = j < diag.size() ? diag[j] : 0;
        predicted *= d == 0 ? n : std::gcd(d, n);
      }
      FiniteModule m(FpModule<ModularRing>(ring, Side::Right, c, a));
      EXPECT_EQ(predicted, BigInt(static_cast<unsigned long>(m.order()))) << a;
    }
  }
}

TEST(Solve, IntegerExamples) {
  auto x = solve_right(mat(kZ, {{2}}), mat(kZ, {{4}}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, mat(kZ, {{2}}));
  EXPECT_FALSE(solve_right(mat(kZ, {{2}}), mat(kZ, {{3}})));
}

TEST(Solve, F2HasTwoSolutions) {
  ModularRing f2 = gf(2);
  auto a = mat(f2, {{1, 1}, {1, 1}});
  auto x = solve_right(a, mat(f2, {{0, 0}}));
  ASSERT_TRUE(x);
  EXPECT_TRUE(*x == mat(f2, {{0, 0}}) || *x == mat(f2, {{1, 1}}));
  EXPECT_EQ(*x * a, mat(f2, {{0, 0}}));
}

TEST(Solve, ShapeMismatchIsRejected) {
  EXPECT_THROW(solve_right(mat(kZ, {{1, 2}}), mat(kZ, {{1}})), ShapeError);
  EXPECT_THROW(solve_left(mat(kZ, {{1, 2}}), mat(kZ, {{1}, {2}})), ShapeError);
}

// X A = B solvable iff some X exists by exhaustion, dimensions <= 2.
TEST(Solve, AgreesWithExhaustionOnSmallRings) {
  for (std::int64_t n : {2, 3, 4, 6}) {
    ModularRing ring = zmod(n);
    const auto q = static_cast<std::size_t>(n);
    for (std::size_t k = 1; k <= 2; ++k)
      for (std::size_t m = 1; m <= 2; ++m)
        for (std::size_t c = 1; c <= 2; ++c) {
          const std::size_t amax = ipow(q, m * c), bmax = ipow(q, k * c), xmax = ipow(q, k * m);
          const std::size_t stride = std::max<std::size_t>(1, amax * bmax / 3000);
          for (std::size_t code = 0; code < amax * bmax; code += stride) {
            auto a = nth_matrix(ring, m, c, code % amax);
            auto b = nth_matrix(ring, k, c, code / amax);
            bool found = false;
            for (std::size_t xi = 0; xi < xmax && !found; ++xi) found = nth_matrix(ring, k, m, xi) * a == b;
            auto x = solve_right(a, b);
            ASSERT_EQ(found, x.has_value()) << a << b;
            if (x) EXPECT_EQ(*x * a, b);
          }
        }
  }
}

TEST(Solve, KernelsAnnihilate) {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    auto a = random_matrix(kZ, 3, 4, rng, 4);
    auto k = right_kernel(a);
    EXPECT_TRUE((a * k).is_zero());
    auto l = left_kernel(a.transpose());
    EXPECT_TRUE((l * a.transpose()).is_zero());
    // A 3x4 integer matrix has a kernel of rank >= 1.
    EXPECT_GE(k.cols(), 1u);
  }
}

TEST(Solve, EmptyShapes) {
  auto p = empty(kZ, 2, 0) * empty(kZ, 0, 3);
  EXPECT_EQ(p, empty(kZ, 2, 3));
  auto x = solve_right(empty(kZ, 0, 2), empty(kZ, 3, 2));
  ASSERT_TRUE(x);
  EXPECT_EQ(x->rows(), 3u);
  EXPECT_EQ(x->cols(), 0u);
  EXPECT_FALSE(solve_right(empty(kZ, 0, 1), mat(kZ, {{1}})));
}

TEST(LinearSystem, SolvesBlockEquations) {
  // Find X (2x2) and Y (2x2) with A X + Y B = C over Z.
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    auto a = random_matrix(kZ, 2, 2, rng, 3), b = random_matrix(kZ, 2, 2, rng, 3);
    auto x0 = random_matrix(kZ, 2, 2, rng, 3), y0 = random_matrix(kZ, 2, 2, rng, 3);
    auto c = a * x0 + y0 * b;
    LinearSystem<IntegerRing> sys(kZ);
    auto x = sys.add_unknown(2, 2), y = sys.add_unknown(2, 2);
    auto e = sys.add_equation(c);
    sys.add_term(e, a, x, Matrix<IntegerRing>::identity(kZ, 2));
    sys.add_term(e, Matrix<IntegerRing>::identity(kZ, 2), y, b);
    auto sol = sys.solve();
    ASSERT_TRUE(sol);
    EXPECT_EQ(a * (*sol)[x] + (*sol)[y] * b, c);
    for (const auto& gen : sys.kernel()) EXPECT_TRUE((a * gen[x] + gen[y] * b).is_zero());
  }
}

TEST(Homotopy, Examples) {
  auto s = homotopy_solve(mat(kZ, {{1}}), empty(kZ, 0, 1), mat(kZ, {{1}}));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->s, mat(kZ, {{1}}));
  EXPECT_EQ(s->t.rows(), 1u);
  EXPECT_EQ(s->t.cols(), 0u);

  ModularRing z4 = zmod(4);
  EXPECT_FALSE(homotopy_solve(mat(z4, {{2}}), mat(z4, {{2}}), mat(z4, {{1}})));
  EXPECT_FALSE(brute_homotopy(mat(z4, {{2}}), mat(z4, {{2}}), mat(z4, {{1}})));

  ModularRing f2 = gf(2);
  auto w = homotopy_solve(mat(f2, {{1}}), mat(f2, {{1}}), mat(f2, {{1}}));
  ASSERT_TRUE(w);
  EXPECT_TRUE((w->s == mat(f2, {{1}}) && w->t == mat(f2, {{0}})) || (w->s == mat(f2, {{0}}) && w->t == mat(f2, {{1}})));
}

TEST(Homotopy, ShapeMismatch) {
  EXPECT_THROW(homotopy_solve(mat(kZ, {{1}}), mat(kZ, {{1}}), mat(kZ, {{1, 1}})), ShapeError);
}

TEST(Homotopy, AgreesWithBruteForceOnRandomShapes) {
  Rng rng(17);
  std::uniform_int_distribution<std::size_t> dim(0, 2);
  for (std::int64_t n : {2, 4, 6}) {
    ModularRing ring = zmod(n);
    for (int i = 0; i < 300; ++i) {
      const std::size_t y1 = dim(rng), x2 = dim(rng), y2 = dim(rng), x3 = dim(rng);
      auto g1 = random_matrix(ring, y2, y1, rng), f2 = random_matrix(ring, x3, x2, rng);
      auto c = random_matrix(ring, y2, x2, rng);
      if (i % 2) c = g1 * random_matrix(ring, y1, x2, rng) + random_matrix(ring, y2, x3, rng) * f2;
      auto fast = homotopy_solve(g1, f2, c);
      auto slow = brute_homotopy(g1, f2, c);
      ASSERT_EQ(fast.has_value(), slow.has_value());
      if (fast) EXPECT_EQ(g1 * fast->s + fast->t * f2, c);
      if (slow) EXPECT_EQ(g1 * slow->s + slow->t * f2, c);
    }
  }
}
