#include "magnus/coproduct.hpp"

#include <sstream>
#include <vector>

namespace magnus {

TensorSeries TensorSeries::tensor(const Series& a, const Series& b) {
  check_same_context(a, b);
  TensorSeries t(a.context());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      if (static_cast<int>(wa.size() + wb.size()) > t.max_total_degree()) break;
      t.add_term(wa, wb, ca * cb);
    }
  }
  return t;
}

Coefficient TensorSeries::coeff(const Word& left, const Word& right) const {
  auto it = terms_.find({left, right});
  return it == terms_.end() ? ctx_.zero() : it->second;
}

void TensorSeries::add_term(const Word& left, const Word& right, const Coefficient& c) {
  if (left.alphabet() != ctx_.n || right.alphabet() != ctx_.n) {
    throw PreconditionError("tensor word outside the alphabet");
  }
  if (static_cast<int>(left.size() + right.size()) > ctx_.max_degree || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{left, right}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorSeries& TensorSeries::operator+=(const TensorSeries& o) {
  if (!(ctx_ == o.ctx_)) throw PreconditionError("tensor series contexts differ");
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

TensorSeries& TensorSeries::operator-=(const TensorSeries& o) {
  if (!(ctx_ == o.ctx_)) throw PreconditionError("tensor series contexts differ");
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

TensorSeries operator*(const TensorSeries& x, const TensorSeries& y) {
  if (!(x.ctx_ == y.ctx_)) throw PreconditionError("tensor series contexts differ");
  TensorSeries r(x.ctx_);
  const int cap = x.max_total_degree();
  for (const auto& [kx, cx] : x.terms_) {
    const int dx = static_cast<int>(kx.first.size() + kx.second.size());
    for (const auto& [ky, cy] : y.terms_) {
      if (dx + static_cast<int>(ky.first.size() + ky.second.size()) > cap) break;
      r.add_term(kx.first.concat(ky.first), kx.second.concat(ky.second), cx * cy);
    }
  }
  return r;
}

std::string TensorSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string() << "*" << k.first.to_string() << "⊗" << k.second.to_string();
  }
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

// Expands one monomial letter by letter. Each letter goes left, right or
// (twisted only) to both sides.
void expand_monomial(const Word& w, const Coefficient& c, bool twisted, TensorSeries& out) {
  const int n = w.alphabet();
  const int cap = out.max_total_degree();
  Word left(n), right(n);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (static_cast<int>(left.size() + right.size() + (w.size() - i)) > cap) return;
    if (i == w.size()) {
      out.add_term(left, right, c);
      return;
    }
    const int a = w[i];
    Word l0 = left, r0 = right;
    left.push_back(a);
    self(self, i + 1);
    left = l0;
    right.push_back(a);
    self(self, i + 1);
    right = r0;
    if (twisted) {
      left.push_back(a);
      right.push_back(a);
      self(self, i + 1);
      left = l0;
      right = r0;
    }
  };
  rec(rec, 0);
}

}  // namespace

TensorSeries delta_std(const Series& g) {
  TensorSeries out(g.context());
  for (const auto& [w, c] : g.terms()) expand_monomial(w, c, false, out);
  return out;
}

TensorSeries delta_twisted(const Series& g) {
  TensorSeries out(g.context());
  for (const auto& [w, c] : g.terms()) expand_monomial(w, c, true, out);
  return out;
}

namespace {

using Multiset = std::map<Word, unsigned long long, GradedLess>;

// Stuffle recursion on suffixes alpha[i:], beta[j:]:
//   QS(a.A, b.B) = a.QS(A, b.B) + b.QS(a.A, B) + [a == b] a.QS(A, B)
Multiset shuffle_like(const Word& alpha, const Word& beta, bool merge) {
  if (alpha.alphabet() != beta.alphabet() && !alpha.empty() && !beta.empty()) {
    throw PreconditionError("shuffle of words over different alphabets");
  }
  const int n = alpha.empty() ? beta.alphabet() : alpha.alphabet();
  const std::size_t la = alpha.size(), lb = beta.size();
  std::vector<std::vector<Multiset>> memo(la + 1, std::vector<Multiset>(lb + 1));
  for (std::size_t i = la + 1; i-- > 0;) {
    for (std::size_t j = lb + 1; j-- > 0;) {
      Multiset& cur = memo[i][j];
      if (i == la) {
        cur.emplace(beta.suffix_from(j), 1);
        continue;
      }
      if (j == lb) {
        cur.emplace(alpha.suffix_from(i), 1);
        continue;
      }
      auto prepend = [&](int letter, const Multiset& tail) {
        for (const auto& [w, mult] : tail) cur[Word(n, {letter}).concat(w)] += mult;
      };
      prepend(alpha[i], memo[i + 1][j]);
      prepend(beta[j], memo[i][j + 1]);
      if (merge && alpha[i] == beta[j]) prepend(alpha[i], memo[i + 1][j + 1]);
    }
  }
  return memo[0][0];
}

// All words of length k, lexicographic.
std::vector<Word> all_words(int n, int k) {
  std::vector<Word> out{Word(n)};
  for (int d = 0; d < k; ++d) {
    std::vector<Word> next;
    next.reserve(out.size() * n);
    for (const auto& w : out) {
      for (int a = 1; a <= n; ++a) next.push_back(w.concat(Word(n, {a})));
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::map<Word, unsigned long long, GradedLess> quasi_shuffle_targets(const Word& alpha, const Word& beta) {
  return shuffle_like(alpha, beta, true);
}

std::map<Word, unsigned long long, GradedLess> shuffle_targets(const Word& alpha, const Word& beta) {
  return shuffle_like(alpha, beta, false);
}

bool is_primitive(const Series& z) {
  if (!z.constant_term().is_zero()) throw PreconditionError("primitive elements have zero constant term");
  TensorSeries expected(z.context());
  const Word unit(z.n());
  for (const auto& [w, c] : z.terms()) {
    expected.add_term(w, unit, c);
    expected.add_term(unit, w, c);
  }
  return delta_std(z) == expected;
}

std::optional<GrouplikeViolation> find_grouplike_violation(const Series& g, CoproductKind kind) {
  if (!g.constant_term().is_one()) throw PreconditionError("grouplike check needs constant term 1");
  const int n = g.n();
  const int cap = g.max_degree();
  std::vector<std::vector<Word>> words_by_len(cap + 1);
  for (int k = 1; k <= cap; ++k) words_by_len[k] = all_words(n, k);

  for (int total = 2; total <= cap; ++total) {
    for (int la = 1; la < total; ++la) {
      const int lb = total - la;
      for (const Word& alpha : words_by_len[la]) {
        const Coefficient ca = g.coeff(alpha);
        for (const Word& beta : words_by_len[lb]) {
          const Coefficient product = ca * g.coeff(beta);
          Coefficient sum = g.context().zero();
          const auto targets = kind == CoproductKind::Twisted ? quasi_shuffle_targets(alpha, beta)
                                                              : shuffle_targets(alpha, beta);
          for (const auto& [tau, mult] : targets) {
            const Coefficient c = g.coeff(tau);
            if (c.is_zero()) continue;
            sum += g.context().integer(static_cast<long>(mult)) * c;
          }
          if (!(product == sum)) return GrouplikeViolation{alpha, beta, product, sum};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_grouplike(const Series& g, CoproductKind kind) { return !find_grouplike_violation(g, kind).has_value(); }

namespace {

// Image of every monomial under the algebra map w_j -> images[j].
class Substitution {
 public:
  Substitution(const SeriesContext& ctx, std::vector<Series> images) : ctx_(ctx), images_(std::move(images)) {}

  const Series& image(const Word& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    Series img = w.empty() ? Series::one(ctx_) : images_[w[0] - 1] * image(w.suffix_from(1));
    return memo_.emplace(w, std::move(img)).first->second;
  }

  Series apply(const Series& g) {
    Series out(ctx_);
    for (const auto& [w, c] : g.terms()) out += scalar_mul(c, image(w));
    return out;
  }

 private:
  SeriesContext ctx_;
  std::vector<Series> images_;
  std::map<Word, Series, GradedLess> memo_;
};

Substitution gamma_substitution(const SeriesContext& ctx, bool inverse_map) {
  if (!ctx.ring.contains_rationals()) throw PreconditionError("gamma is not defined over the integer ring");
  std::vector<Series> images;
  for (int j = 1; j <= ctx.n; ++j) {
    const Series x = Series::generator(ctx, j);
    images.push_back(inverse_map ? exp(x) - Series::one(ctx) : ln(Series::one(ctx) + x));
  }
  return Substitution(ctx, std::move(images));
}

}  // namespace

Series gamma(const Series& g) { return gamma_substitution(g.context(), false).apply(g); }

Series gamma_inv(const Series& g) { return gamma_substitution(g.context(), true).apply(g); }

TensorSeries gamma_tensor(const TensorSeries& t) {
  Substitution sub = gamma_substitution(t.context(), false);
  TensorSeries out(t.context());
  for (const auto& [k, c] : t.terms()) {
    const Series& left = sub.image(k.first);
    const Series& right = sub.image(k.second);
    for (const auto& [wl, cl] : left.terms()) {
      for (const auto& [wr, cr] : right.terms()) {
        if (static_cast<int>(wl.size() + wr.size()) > out.max_total_degree()) break;
        out.add_term(wl, wr, c * cl * cr);
      }
    }
  }
  return out;
}

}  // namespace magnus
