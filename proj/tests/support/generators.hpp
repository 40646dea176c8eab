#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "magnus/magnus.hpp"

namespace magnus::prop {

/// Seeded random inputs for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  std::mt19937_64& engine() { return rng_; }

  Integer integer(int lo, int hi) { return Integer(uniform(lo, hi)); }
  int nonzero(int bound) {
    int v = 0;
    while (v == 0) v = uniform(-bound, bound);
    return v;
  }
  Rational rational(int num_bound, int den_bound) {
    Rational q(uniform(-num_bound, num_bound), uniform(1, den_bound));
    q.canonicalize();
    return q;
  }

  Word word(int n, int len) {
    std::vector<int> letters(len);
    for (int& a : letters) a = uniform(1, n);
    return Word(n, letters);
  }

  GroupWord group_word(int n, int max_len) {
    GroupWord w(n);
    const int len = uniform(0, max_len);
    for (int i = 0; i < len; ++i) w.append(uniform(1, n), coin() ? 1 : -1);
    return w;
  }

  /// Sparse random series with small rational coefficients.
  Series series(const SeriesContext& ctx, int terms, bool with_constant = true) {
    Series g(ctx);
    if (with_constant) g.add_term(Word(ctx.n), coefficient(ctx, 3, 3));
    for (int i = 0; i < terms; ++i) {
      g.add_term(word(ctx.n, uniform(1, ctx.max_degree)), coefficient(ctx, 3, 3));
    }
    return g;
  }

  /// Homogeneous series of degree k.
  Series homogeneous(const SeriesContext& ctx, int k, int terms) {
    Series g(ctx);
    for (int i = 0; i < terms; ++i) g.add_term(word(ctx.n, k), coefficient(ctx, 3, 2));
    return g;
  }

  Coefficient coefficient(const SeriesContext& ctx, int num_bound, int den_bound) {
    if (ctx.ring.kind() == RingTag::Kind::Integer) return ctx.integer(uniform(-num_bound, num_bound));
    return Coefficient::from_rational(rational(num_bound, den_bound), ctx.ring);
  }

  /// Random t_L for |L| <= N; rationals unless `integral`.
  LyndonBasisCoefficients lyndon_coeffs(const SeriesContext& ctx, int bound, bool integral, double density = 0.6) {
    LyndonBasisCoefficients t;
    for (const Word& L : lyndon_words(ctx.n, ctx.max_degree)) {
      if (!coin(density)) continue;
      Coefficient c = integral ? ctx.integer(uniform(-bound, bound)) : coefficient(ctx, bound, 3);
      if (!c.is_zero()) t.emplace(L, c);
    }
    return t;
  }

  /// A random total order on the Lyndon words of length <= max_len.
  LyndonOrder shuffled_order(int n, int max_len) {
    std::vector<Word> words = lyndon_words(n, max_len);
    std::shuffle(words.begin(), words.end(), rng_);
    return LyndonOrder::from_ranking(words);
  }

 private:
  std::mt19937_64 rng_;
};

inline MalcevCoordinates to_coordinates(const LyndonBasisCoefficients& t, const LyndonOrder& order) {
  MalcevCoordinates out{order, {}};
  for (const auto& [L, c] : t) out.set(L, c);
  return out;
}

}  // namespace magnus::prop
