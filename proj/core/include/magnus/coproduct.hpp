#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "magnus/series.hpp"

namespace magnus {

/// Sparse element sum h_{a,b} w^a (x) w^b of the tensor square, truncated at
/// total degree |a| + |b| <= N (the context's truncation degree).
class TensorSeries {
 public:
  using Key = std::pair<Word, Word>;
  struct KeyLess {
    bool operator()(const Key& x, const Key& y) const {
      const std::size_t dx = x.first.size() + x.second.size();
      const std::size_t dy = y.first.size() + y.second.size();
      if (dx != dy) return dx < dy;
      GradedLess less;
      if (less(x.first, y.first)) return true;
      if (less(y.first, x.first)) return false;
      return less(x.second, y.second);
    }
  };
  using Terms = std::map<Key, Coefficient, KeyLess>;

  explicit TensorSeries(SeriesContext ctx) : ctx_(std::move(ctx)) {}

  /// a (x) b, truncated.
  static TensorSeries tensor(const Series& a, const Series& b);

  const SeriesContext& context() const { return ctx_; }
  int max_total_degree() const { return ctx_.max_degree; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coefficient coeff(const Word& left, const Word& right) const;
  void add_term(const Word& left, const Word& right, const Coefficient& c);

  TensorSeries& operator+=(const TensorSeries& o);
  TensorSeries& operator-=(const TensorSeries& o);
  friend TensorSeries operator+(TensorSeries a, const TensorSeries& b) { return a += b; }
  friend TensorSeries operator-(TensorSeries a, const TensorSeries& b) { return a -= b; }
  /// (a (x) b)(a' (x) b') = a a' (x) b b'.
  friend TensorSeries operator*(const TensorSeries& x, const TensorSeries& y);
  friend bool operator==(const TensorSeries& a, const TensorSeries& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  SeriesContext ctx_;
  Terms terms_;
};

/// Standard coproduct: w_j -> w_j (x) 1 + 1 (x) w_j, i.e. the sum over all
/// unshuffles of each monomial.
TensorSeries delta_std(const Series& g);

/// Twisted coproduct: w_j -> w_j (x) 1 + 1 (x) w_j + w_j (x) w_j, i.e. the
/// sum over all tri-colorings (green letters dropped on the left, red on the
/// right, white kept on both sides).
TensorSeries delta_twisted(const Series& g);

/// Words with multiplicities: the multiset of tau admitting a tri-coloring
/// with tau_+ = alpha and tau_- = beta (quasi-shuffles of alpha and beta).
std::map<Word, unsigned long long, GradedLess> quasi_shuffle_targets(const Word& alpha, const Word& beta);
/// Ordinary shuffles of alpha and beta with multiplicities.
std::map<Word, unsigned long long, GradedLess> shuffle_targets(const Word& alpha, const Word& beta);

/// z has zero constant term and Delta(z) = z (x) 1 + 1 (x) z.
bool is_primitive(const Series& z);

enum class CoproductKind { Standard, Twisted };

/// A pair (alpha, beta) whose quadratic relation c_alpha c_beta =
/// sum c_tau fails.
struct GrouplikeViolation {
  Word left;
  Word right;
  Coefficient product;  // c_alpha c_beta
  Coefficient sum;      // sum over (quasi-)shuffles
};

/// First failing relation, pairs scanned by total degree, then graded order
/// of alpha, then of beta. Requires constant term 1.
std::optional<GrouplikeViolation> find_grouplike_violation(const Series& g, CoproductKind kind);
bool is_grouplike(const Series& g, CoproductKind kind);

/// Algebra automorphism w_j -> ln(1 + w_j).
Series gamma(const Series& g);
/// Inverse automorphism w_j -> exp(w_j) - 1.
Series gamma_inv(const Series& g);
/// gamma applied to both tensor factors.
TensorSeries gamma_tensor(const TensorSeries& t);

}  // namespace magnus
