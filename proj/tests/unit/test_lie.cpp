#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"

using namespace magnus;

namespace {

const RingTag Q = RingTag::rationals();

Word w(int n, std::initializer_list<int> letters) { return Word(n, letters); }
Coefficient q(long num, long den = 1) { return Coefficient::from_rational(Rational(num, den), Q); }

Series br(const Series& a, const Series& b) { return a * b - b * a; }

std::vector<std::vector<mpq_class>> coefficient_matrix(const std::vector<std::pair<Word, Series>>& basis, int n, int k) {
  std::vector<std::vector<mpq_class>> rows;
  const auto columns = oracle::all_words(n, k);
  for (const auto& [L, x] : basis) {
    std::vector<mpq_class> row;
    for (const auto& col : columns) row.push_back(*x.coeff(Word(n, col)).as_rational());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST(Xi, Examples) {
  const SeriesContext ctx(3, 7, Q);
  const Series a = Series::generator(ctx, 1), b = Series::generator(ctx, 2), c = Series::generator(ctx, 3);
  EXPECT_EQ(xi(w(3, {1, 2}), ctx), a * b - b * a);
  EXPECT_EQ(xi(w(3, {1, 2, 3, 1, 3, 2, 3}), ctx), br(br(a, br(b, c)), br(br(a, c), br(b, c))));
  EXPECT_EQ(xi(w(3, {1}), ctx), a);
  EXPECT_THROW(xi(w(3, {2, 1}), ctx), PreconditionError);
  EXPECT_TRUE(xi(w(3, {1, 1, 2, 1, 2, 2, 2, 3}), ctx).is_zero());
}

TEST(Xi, GroupCommutatorExamples) {
  const SeriesContext ctx(2, 2, Q);
  const Series a = Series::generator(ctx, 1), b = Series::generator(ctx, 2);
  EXPECT_EQ(Xi(w(2, {1, 2}), ctx), Series::one(ctx) + a * b - b * a);
  EXPECT_EQ(Xi(w(2, {1}), ctx), Series::one(ctx) + a);
  const SeriesContext ctx3(2, 5, Q);
  EXPECT_TRUE(equal_mod(Xi(w(2, {1, 1, 2}), ctx3), Series::one(ctx3) + xi(w(2, {1, 1, 2}), ctx3), 3));
}

TEST(Xi, CommutatorStructure) {
  const SeriesContext ctx(3, 7, Q);
  auto g = [&](int j) { return Series::one(ctx) + Series::generator(ctx, j); };
  const Series expect =
      group_commutator(group_commutator(g(1), group_commutator(g(2), g(3))),
                       group_commutator(group_commutator(g(1), g(3)), group_commutator(g(2), g(3))));
  EXPECT_EQ(Xi(w(3, {1, 2, 3, 1, 3, 2, 3}), ctx), expect);
}

TEST(LieProperty, Triangularity) {
  for (int n = 1; n <= 3; ++n) {
    const SeriesContext ctx(n, 6, Q);
    for (const Word& L : lyndon_words(n, 6)) {
      const Series& x = xi(L, ctx);
      EXPECT_EQ(x.coeff(L), q(1)) << L.to_string();
      for (const auto& [M, c] : x.terms()) {
        EXPECT_EQ(M.size(), L.size());
        EXPECT_TRUE(c.is_integral());
        if (M != L) EXPECT_TRUE(lex_compare(L, M) < 0) << L.to_string() << " " << M.to_string();
      }
    }
  }
}

TEST(LieProperty, GroupCommutatorLeadingTerm) {
  for (int n = 2; n <= 3; ++n) {
    const SeriesContext ctx(n, 6, Q);
    for (const Word& L : lyndon_words(n, 6)) {
      const Series& X = Xi(L, ctx);
      EXPECT_TRUE(equal_mod(X, Series::one(ctx) + xi(L, ctx), static_cast<int>(L.size()))) << L.to_string();
      for (const auto& [M, c] : X.terms()) EXPECT_TRUE(c.is_integral());
    }
  }
}

TEST(LyndonBasis, Examples) {
  const SeriesContext ctx(2, 4, Q);
  const auto b1 = lyndon_basis(ctx, 1);
  ASSERT_EQ(b1.size(), 2u);
  EXPECT_EQ(b1[0].first, w(2, {1}));
  EXPECT_EQ(b1[1].first, w(2, {2}));
  EXPECT_EQ(lyndon_basis(ctx, 2).size(), 1u);
  const auto b4 = lyndon_basis(ctx, 4);
  EXPECT_EQ(b4.size(), 3u);
  EXPECT_EQ(oracle::rank(coefficient_matrix(b4, 2, 4)), 3u);
  EXPECT_THROW(lyndon_basis(ctx, 5), PreconditionError);
  EXPECT_THROW(lyndon_basis(ctx, 0), PreconditionError);
}

TEST(LieProperty, BasisSpansPrimitives) {
  // Dimension of degree-k Lie elements is the necklace count; the brackets of
  // all pairs of lower basis elements must lie in the span of the basis.
  for (int n = 2; n <= 3; ++n) {
    const int top = n == 2 ? 6 : 5;
    const SeriesContext ctx(n, top, Q);
    for (int k = 1; k <= top; ++k) {
      const auto basis = lyndon_basis(ctx, k);
      auto rows = coefficient_matrix(basis, n, k);
      const std::size_t r = oracle::rank(rows);
      EXPECT_EQ(r, basis.size());
      EXPECT_EQ(static_cast<long>(r), oracle::necklace_count(n, k));
      for (int i = 1; i < k; ++i) {
        for (const auto& [L1, x1] : lyndon_basis(ctx, i)) {
          for (const auto& [L2, x2] : lyndon_basis(ctx, k - i)) {
            auto extended = rows;
            extended.push_back(coefficient_matrix({{L1, br(x1, x2)}}, n, k)[0]);
            EXPECT_EQ(oracle::rank(extended), r);
          }
        }
      }
    }
  }
}

TEST(Decompose, Examples) {
  const SeriesContext ctx(2, 4, Q);
  const Series a = Series::generator(ctx, 1), b = Series::generator(ctx, 2);
  const auto t = decompose_lie(a * b - b * a);
  EXPECT_EQ(t, (LyndonBasisCoefficients{{w(2, {1, 2}), q(1)}}));
  const auto t2 = decompose_lie(q(3) * a + q(1, 2) * xi(w(2, {1, 1, 2}), ctx));
  EXPECT_EQ(t2, (LyndonBasisCoefficients{{w(2, {1}), q(3)}, {w(2, {1, 1, 2}), q(1, 2)}}));
  EXPECT_TRUE(decompose_lie(Series::zero(ctx)).empty());
  EXPECT_THROW(decompose_lie(a * b), PreconditionError);
  EXPECT_THROW(decompose_lie(Series::one(ctx)), PreconditionError);
}

TEST(LieProperty, DecomposeRoundTrip) {
  prop::Gen gen(41);
  for (const RingTag& ring : {Q, RingTag::integers(), RingTag::padics(5, 12)}) {
    const SeriesContext ctx(2, 5, ring);
    for (int i = 0; i < 30; ++i) {
      const auto t = gen.lyndon_coeffs(ctx, 6, ring.kind() == RingTag::Kind::Integer);
      EXPECT_EQ(decompose_lie(combine_lie(t, ctx)), t);
    }
  }
  const SeriesContext ctx3(3, 4, Q);
  for (int i = 0; i < 20; ++i) {
    const auto t = gen.lyndon_coeffs(ctx3, 6, false);
    EXPECT_EQ(decompose_lie(combine_lie(t, ctx3)), t);
  }
}

TEST(Bch, Examples) {
  const SeriesContext ctx(2, 2, Q);
  const Series a = Series::generator(ctx, 1), b = Series::generator(ctx, 2);
  EXPECT_EQ(bch(a, b), a + b + q(1, 2) * (a * b - b * a));
  EXPECT_TRUE(bch(a, -a).is_zero());
  EXPECT_EQ(bch(a, a), q(2) * a);
  EXPECT_THROW(bch(a * b, a), PreconditionError);
}

TEST(LieProperty, BchPrimitiveAndAssociative) {
  prop::Gen gen(42);
  const SeriesContext ctx(2, 5, Q);
  for (int i = 0; i < 15; ++i) {
    const Series u = combine_lie(gen.lyndon_coeffs(ctx, 3, false), ctx);
    const Series v = combine_lie(gen.lyndon_coeffs(ctx, 3, false), ctx);
    const Series x = combine_lie(gen.lyndon_coeffs(ctx, 3, false), ctx);
    const Series z = bch(u, v);
    EXPECT_TRUE(is_primitive(z));
    EXPECT_EQ(bch(z, x), bch(u, bch(v, x)));
  }
}

TEST(LieProperty, JacobiAndAntisymmetry) {
  prop::Gen gen(43);
  const SeriesContext ctx(3, 6, Q);
  for (int i = 0; i < 30; ++i) {
    const Series x = gen.homogeneous(ctx, gen.uniform(1, 2), 3);
    const Series y = gen.homogeneous(ctx, gen.uniform(1, 2), 3);
    const Series z = gen.homogeneous(ctx, gen.uniform(1, 2), 3);
    EXPECT_EQ(lie_bracket(x, y), -lie_bracket(y, x));
    EXPECT_TRUE((lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) + lie_bracket(z, lie_bracket(x, y))).is_zero());
  }
}

TEST(Xi, PowersMatchBinomialSeries) {
  prop::Gen gen(44);
  const SeriesContext ctx(2, 5, Q);
  for (const Word& L : lyndon_words(2, 5)) {
    const Coefficient t = Coefficient::from_rational(gen.rational(7, 3), Q);
    EXPECT_EQ(Xi_power(L, t, ctx), power(Xi(L, ctx), t)) << L.to_string();
  }
}
