#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "magnus/coeff.hpp"
#include "magnus/words.hpp"

namespace magnus {

/// Shared construction parameters: alphabet size n, truncation degree N and
/// coefficient ring. Every series represents an element of the free
/// associative algebra modulo terms of degree > N.
struct SeriesContext {
  int n = 1;
  int max_degree = 1;
  RingTag ring = RingTag::rationals();

  SeriesContext() = default;
  SeriesContext(int n, int max_degree, RingTag ring);

  Coefficient zero() const { return Coefficient::zero(ring); }
  Coefficient one() const { return Coefficient::one(ring); }
  Coefficient integer(long v) const { return Coefficient::from_integer(v, ring); }

  friend bool operator==(const SeriesContext&, const SeriesContext&) = default;
};

/// Sparse truncated series sum c_w w. Zero coefficients are never stored
/// and no stored word is longer than the truncation degree.
class Series {
 public:
  using Terms = std::map<Word, Coefficient, GradedLess>;

  explicit Series(SeriesContext ctx) : ctx_(std::move(ctx)) {}

  static Series zero(const SeriesContext& ctx) { return Series(ctx); }
  static Series one(const SeriesContext& ctx);
  static Series constant(const SeriesContext& ctx, const Coefficient& c);
  /// The letter w_j, 1 <= j <= n.
  static Series generator(const SeriesContext& ctx, int j);
  static Series monomial(const SeriesContext& ctx, const Word& w, const Coefficient& c);
  /// Duplicates are summed; words beyond the truncation degree are dropped.
  static Series from_terms(const SeriesContext& ctx, const std::vector<std::pair<Word, Coefficient>>& terms);

  const SeriesContext& context() const { return ctx_; }
  int n() const { return ctx_.n; }
  int max_degree() const { return ctx_.max_degree; }
  const RingTag& ring() const { return ctx_.ring; }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Coefficient coeff(const Word& w) const;
  Coefficient constant_term() const;
  /// Lowest degree carrying a nonzero coefficient.
  std::optional<int> min_degree() const;

  /// Adds c to the coefficient of w (ignored beyond the truncation degree).
  void add_term(const Word& w, const Coefficient& c);

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series operator-() const;

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const Coefficient& c, const Series& a);
  friend bool operator==(const Series& a, const Series& b);

  /// Human readable, e.g. "1 + a + 1/2*aa".
  std::string to_string() const;

 private:
  void check_word(const Word& w) const;

  SeriesContext ctx_;
  Terms terms_;
};

void check_same_context(const Series& a, const Series& b);

Series add(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
/// Product truncated at the given degree (<= the context's degree).
Series mul(const Series& a, const Series& b, int max_degree);
Series scalar_mul(const Coefficient& c, const Series& a);
/// a b - b a.
Series lie_bracket(const Series& a, const Series& b);

/// Inverse of a series with constant term 1.
Series inverse(const Series& g);
/// Requires zero constant term and a ring containing Q.
Series exp(const Series& x);
/// Requires constant term 1 and a ring containing Q.
Series ln(const Series& g);
/// (1 + x)^t by the binomial series. Over the integer ring t is an integer.
Series power(const Series& g, const Coefficient& t);
Series power(const Series& g, long t);
Series power(const Series& g, const Rational& t);

/// g^{-1} h^{-1} g h.
Series group_commutator(const Series& g, const Series& h);

/// Drops every term of degree > k.
Series truncate(const Series& g, int k);
Series homogeneous_component(const Series& g, int k);
/// g and h agree in every degree <= k.
bool equal_mod(const Series& g, const Series& h, int k);

/// Same series over another ring (Integer -> Rational -> PAdic; Rational to
/// Integer only when every coefficient is an integer).
Series change_ring(const Series& g, const RingTag& ring);
/// Same terms under another truncation degree (terms above it are dropped).
Series with_max_degree(const Series& g, int max_degree);

}  // namespace magnus
