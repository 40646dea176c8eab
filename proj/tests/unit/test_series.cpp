#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"

using namespace magnus;

namespace {

const RingTag Q = RingTag::rationals();
const RingTag Z = RingTag::integers();

Word w(int n, std::initializer_list<int> letters) { return Word(n, letters); }

Coefficient q(long num, long den = 1) { return Coefficient::from_rational(Rational(num, den), Q); }

Series gen1(const SeriesContext& ctx, int j) { return Series::one(ctx) + Series::generator(ctx, j); }

// Product by the textbook double loop over dense word maps.
std::map<oracle::Letters, Rational> naive_product(const Series& a, const Series& b) {
  std::map<oracle::Letters, Rational> out;
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) {
      if (static_cast<int>(u.size() + v.size()) > a.max_degree()) continue;
      oracle::Letters uv = u.letters();
      for (int x : v.letters()) uv.push_back(x);
      out[uv] += *cu.as_rational() * *cv.as_rational();
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::map<oracle::Letters, Rational> as_map(const Series& s) {
  std::map<oracle::Letters, Rational> out;
  for (const auto& [u, c] : s.terms()) out[u.letters()] = *c.as_rational();
  return out;
}

bool all_integer(const Series& s) {
  for (const auto& [u, c] : s.terms()) {
    if (!c.is_integral()) return false;
  }
  return true;
}

}  // namespace

TEST(Series, MultiplicationExamples) {
  const SeriesContext ctx(2, 2, Q);
  const Series expect = Series::from_terms(ctx, {{w(2, {}), q(1)}, {w(2, {1}), q(1)}, {w(2, {2}), q(1)}, {w(2, {1, 2}), q(1)}});
  EXPECT_EQ(gen1(ctx, 1) * gen1(ctx, 2), expect);
  const Series ab = Series::monomial(ctx, w(2, {1, 2}), q(1));
  EXPECT_TRUE((ab * Series::generator(ctx, 1)).is_zero());
  const SeriesContext ctx4(2, 4, Q);
  EXPECT_EQ(Series::monomial(ctx4, w(2, {1, 2}), q(1)) * Series::monomial(ctx4, w(2, {2, 1}), q(1)),
            Series::monomial(ctx4, w(2, {1, 2, 2, 1}), q(1)));
}

TEST(Series, ContextMismatch) {
  const Series a = Series::one(SeriesContext(2, 3, Q));
  EXPECT_THROW(a + Series::one(SeriesContext(2, 4, Q)), PreconditionError);
  EXPECT_THROW(a * Series::one(SeriesContext(3, 3, Q)), PreconditionError);
  EXPECT_THROW(a * Series::one(SeriesContext(2, 3, Z)), PreconditionError);
}

TEST(Series, StoresNoZerosAndRespectsTruncation) {
  const SeriesContext ctx(2, 2, Q);
  Series s(ctx);
  s.add_term(w(2, {1}), q(1));
  s.add_term(w(2, {1}), q(-1));
  s.add_term(w(2, {1, 1, 1}), q(1));
  EXPECT_TRUE(s.is_zero());
  EXPECT_THROW(s.add_term(w(2, {3}), q(1)), PreconditionError);
}

TEST(Series, MultiplicationMatchesNaiveProduct) {
  prop::Gen gen(21);
  const SeriesContext ctx(2, 5, Q);
  for (int i = 0; i < 60; ++i) {
    const Series a = gen.series(ctx, 8), b = gen.series(ctx, 8);
    EXPECT_EQ(as_map(a * b), naive_product(a, b));
  }
}

TEST(Series, InverseExamples) {
  const SeriesContext ctx(1, 3, Q);
  const Series x = Series::generator(ctx, 1);
  EXPECT_EQ(inverse(Series::one(ctx) + x), Series::one(ctx) - x + x * x - x * x * x);
  EXPECT_EQ(inverse(Series::one(ctx)), Series::one(ctx));
  const SeriesContext ctx2(2, 2, Q);
  const Series a = Series::generator(ctx2, 1), b = Series::generator(ctx2, 2);
  const Series g = Series::one(ctx2) + a + b;
  EXPECT_EQ(inverse(g), Series::one(ctx2) - a - b + a * a + a * b + b * a + b * b);
  EXPECT_THROW(inverse(Series::zero(ctx2)), PreconditionError);
  EXPECT_THROW(inverse(Series::constant(ctx2, q(2))), PreconditionError);
}

TEST(Series, ExpLnPowerExamples) {
  const SeriesContext ctx(1, 2, Q);
  const Series x = Series::generator(ctx, 1);
  EXPECT_EQ(exp(x), Series::one(ctx) + x + q(1, 2) * (x * x));
  EXPECT_EQ(power(Series::one(ctx) + x, -1), inverse(Series::one(ctx) + x));
  EXPECT_EQ(power(Series::one(ctx) + x, Rational(1, 2)), Series::one(ctx) + q(1, 2) * x - q(1, 8) * (x * x));
  EXPECT_THROW(exp(Series::one(ctx)), PreconditionError);
  EXPECT_THROW(ln(x), PreconditionError);
  const SeriesContext zctx(1, 2, Z);
  EXPECT_THROW(exp(Series::generator(zctx, 1)), PreconditionError);
  EXPECT_THROW(ln(gen1(zctx, 1)), PreconditionError);
  EXPECT_THROW(power(gen1(zctx, 1), Rational(1, 2)), PreconditionError);
}

TEST(Series, CommutatorExamples) {
  const SeriesContext ctx(2, 2, Q);
  const Series a = Series::generator(ctx, 1), b = Series::generator(ctx, 2);
  EXPECT_EQ(group_commutator(gen1(ctx, 1), gen1(ctx, 2)), Series::one(ctx) + a * b - b * a);
  EXPECT_EQ(group_commutator(gen1(ctx, 1), Series::one(ctx)), Series::one(ctx));
  prop::Gen gen(22);
  const SeriesContext ctx5(2, 5, Q);
  for (int i = 0; i < 20; ++i) {
    Series g = gen.series(ctx5, 6, false);
    g += Series::one(ctx5);
    EXPECT_EQ(group_commutator(g, g), Series::one(ctx5));
  }
  EXPECT_THROW(group_commutator(a, gen1(ctx, 2)), PreconditionError);
}

TEST(Series, TruncationExamples) {
  const SeriesContext ctx(2, 2, Q);
  const Series a = Series::generator(ctx, 1), b = Series::generator(ctx, 2);
  EXPECT_EQ(truncate(Series::one(ctx) + a + a * b, 1), Series::one(ctx) + a);
  EXPECT_EQ(homogeneous_component(exp(a), 2), q(1, 2) * (a * a));
  EXPECT_TRUE(equal_mod(exp(a), Series::one(ctx) + a, 1));
  EXPECT_FALSE(equal_mod(exp(a), Series::one(ctx) + a, 2));
  EXPECT_THROW(truncate(a, 3), PreconditionError);
  EXPECT_THROW(equal_mod(a, a, 3), PreconditionError);
}

TEST(SeriesProperty, RingLaws) {
  prop::Gen gen(23);
  const SeriesContext ctx(2, 5, Q);
  for (int i = 0; i < 40; ++i) {
    const Series a = gen.series(ctx, 6), b = gen.series(ctx, 6), c = gen.series(ctx, 6);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) * c, a * c + b * c);
  }
}

TEST(SeriesProperty, ExpLnInverse) {
  prop::Gen gen(24);
  for (const RingTag& ring : {Q, RingTag::padics(3, 20)}) {
    const SeriesContext ctx(2, 5, ring);
    for (int i = 0; i < 25; ++i) {
      const Series x = gen.series(ctx, 6, false);
      EXPECT_EQ(ln(exp(x)), x);
      const Series g = Series::one(ctx) + gen.series(ctx, 6, false);
      EXPECT_EQ(exp(ln(g)), g);
    }
  }
}

TEST(SeriesProperty, PowerLaws) {
  prop::Gen gen(25);
  const SeriesContext ctx(2, 5, Q);
  for (int i = 0; i < 25; ++i) {
    const Series g = Series::one(ctx) + gen.series(ctx, 6, false);
    const Coefficient s = Coefficient::from_rational(gen.rational(5, 4), Q);
    const Coefficient t = Coefficient::from_rational(gen.rational(5, 4), Q);
    EXPECT_EQ(power(g, s) * power(g, t), power(g, s + t));
    EXPECT_EQ(power(power(g, s), t), power(g, s * t));
  }
}

TEST(SeriesProperty, IntegerPowersOfIntegerSeriesAreIntegral) {
  prop::Gen gen(26);
  const SeriesContext ctx(2, 5, Z);
  for (int i = 0; i < 30; ++i) {
    Series g = Series::one(ctx) + gen.series(ctx, 6, false);
    const long t = gen.uniform(0, 9);
    const Series gt = power(g, t);
    EXPECT_TRUE(all_integer(gt));
    Series rep = Series::one(ctx);
    for (long k = 0; k < t; ++k) rep = rep * g;
    EXPECT_EQ(gt, rep);
    const Series inv = power(g, -1);
    EXPECT_EQ(inv * g, Series::one(ctx));
  }
}

TEST(SeriesProperty, CommutatorLeadingTerm) {
  prop::Gen gen(27);
  const SeriesContext ctx(2, 6, Q);
  for (int i = 0; i < 40; ++i) {
    const int k = gen.uniform(1, 4);
    const int l = gen.uniform(1, ctx.max_degree - k);
    const Series p = gen.homogeneous(ctx, k, 3), qq = gen.homogeneous(ctx, l, 3);
    Series g = Series::one(ctx) + p, h = Series::one(ctx) + qq;
    for (int d = k + 1; d <= ctx.max_degree; ++d) g += gen.homogeneous(ctx, d, 2);
    for (int d = l + 1; d <= ctx.max_degree; ++d) h += gen.homogeneous(ctx, d, 2);
    EXPECT_TRUE(equal_mod(group_commutator(g, h), Series::one(ctx) + lie_bracket(p, qq), k + l));
  }
}

TEST(SeriesProperty, UnipotentGroupClosed) {
  prop::Gen gen(28);
  const SeriesContext ctx(3, 4, Q);
  for (int i = 0; i < 30; ++i) {
    const Series g = Series::one(ctx) + gen.series(ctx, 5, false);
    const Series h = Series::one(ctx) + gen.series(ctx, 5, false);
    EXPECT_EQ((g * h).constant_term(), ctx.one());
    EXPECT_EQ(inverse(g).constant_term(), ctx.one());
    EXPECT_EQ(g * inverse(g), Series::one(ctx));
    EXPECT_EQ(inverse(g) * g, Series::one(ctx));
  }
}

TEST(Series, ChangeRing) {
  const SeriesContext zctx(2, 3, Z);
  const Series g = power(gen1(zctx, 1) * gen1(zctx, 2), 3);
  const Series gq = change_ring(g, Q);
  EXPECT_EQ(gq, power(gen1(gq.context(), 1) * gen1(gq.context(), 2), 3));
  EXPECT_EQ(change_ring(gq, Z), g);
  EXPECT_THROW(change_ring(q(1, 2) * gq, Z), PreconditionError);
  const Series low = with_max_degree(g, 1);
  EXPECT_EQ(low.max_degree(), 1);
  EXPECT_EQ(low, gen1(low.context(), 1) * gen1(low.context(), 2) * gen1(low.context(), 1) * gen1(low.context(), 2) *
                     gen1(low.context(), 1) * gen1(low.context(), 2));
}
