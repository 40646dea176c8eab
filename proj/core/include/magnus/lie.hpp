#pragma once

#include <map>
#include <utility>
#include <vector>

#include "magnus/coproduct.hpp"
#include "magnus/series.hpp"
#include "magnus/words.hpp"

namespace magnus {

/// Coefficients t_L of a Lie element in the Lyndon basis.
using LyndonBasisCoefficients = std::map<Word, Coefficient, GradedLess>;

/// A series with zero constant term, optionally certified primitive.
class LieElement {
 public:
  /// Runs the primitivity check.
  static LieElement verified(Series z);
  static LieElement unverified(Series z);

  const Series& series() const { return z_; }
  bool is_verified() const { return verified_; }

 private:
  LieElement(Series z, bool verified) : z_(std::move(z)), verified_(verified) {}

  Series z_;
  bool verified_;
};

/// xi_L: the parenthesization of L read with [p, q] = pq - qp.
/// Results are memoized per (context, L).
const Series& xi(const Word& lyndon, const SeriesContext& ctx);
/// Xi_L: the parenthesization read with group commutators at g_j = 1 + w_j.
const Series& Xi(const Word& lyndon, const SeriesContext& ctx);

/// Xi_L^t by the binomial series, using memoized powers of Xi_L - 1.
Series Xi_power(const Word& lyndon, const Coefficient& t, const SeriesContext& ctx);

/// (L, xi_L) for every Lyndon word of length k, lexicographic.
std::vector<std::pair<Word, Series>> lyndon_basis(const SeriesContext& ctx, int k);

/// sum t_L xi_L.
Series combine_lie(const LyndonBasisCoefficients& t, const SeriesContext& ctx);

/// The unique t with z = sum t_L xi_L. z must be primitive.
LyndonBasisCoefficients decompose_lie(const Series& z);
/// Same, skipping the primitivity check (the residual check still runs).
LyndonBasisCoefficients decompose_lie_unchecked(const Series& z);

/// ln(exp(u) exp(v)).
Series bch(const Series& u, const Series& v);

}  // namespace magnus
