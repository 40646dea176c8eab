#include "magnus/lie.hpp"

#include <mutex>
#include <tuple>

namespace magnus {

LieElement LieElement::verified(Series z) {
  if (!is_primitive(z)) throw PreconditionError("series is not primitive");
  return LieElement(std::move(z), true);
}

LieElement LieElement::unverified(Series z) {
  if (!z.constant_term().is_zero()) throw PreconditionError("Lie elements have zero constant term");
  return LieElement(std::move(z), false);
}

namespace {

struct CacheKey {
  int n;
  int max_degree;
  RingTag::Kind kind;
  unsigned long p;
  int cap;
  std::string word;

  friend bool operator<(const CacheKey& a, const CacheKey& b) {
    return std::tie(a.n, a.max_degree, a.kind, a.p, a.cap, a.word) <
           std::tie(b.n, b.max_degree, b.kind, b.p, b.cap, b.word);
  }
};

CacheKey key_of(const Word& w, const SeriesContext& ctx) {
  return {ctx.n, ctx.max_degree, ctx.ring.kind(), ctx.ring.prime(), ctx.ring.cap(), w.key()};
}

// std::map never moves its nodes, so returned references stay valid.
class BasisCache {
 public:
  template <typename Build>
  const Series& get(const CacheKey& key, Build&& build) {
    {
      std::lock_guard lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    Series value = build();
    std::lock_guard lock(mu_);
    return map_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<CacheKey, Series> map_;
};

BasisCache& xi_cache() {
  static BasisCache c;
  return c;
}

BasisCache& Xi_cache() {
  static BasisCache c;
  return c;
}

void require_lyndon(const Word& w, const SeriesContext& ctx) {
  if (w.alphabet() != ctx.n) throw PreconditionError("word " + w.to_string() + " is over a different alphabet");
  if (!is_lyndon(w)) throw PreconditionError(w.to_string() + " is not a Lyndon word");
}

}  // namespace

const Series& xi(const Word& lyndon, const SeriesContext& ctx) {
  require_lyndon(lyndon, ctx);
  return xi_cache().get(key_of(lyndon, ctx), [&] {
    if (lyndon.size() == 1) return Series::generator(ctx, lyndon[0]);
    auto [v, s] = standard_factorization(lyndon);
    return lie_bracket(xi(v, ctx), xi(s, ctx));
  });
}

const Series& Xi(const Word& lyndon, const SeriesContext& ctx) {
  require_lyndon(lyndon, ctx);
  return Xi_cache().get(key_of(lyndon, ctx), [&] {
    if (lyndon.size() == 1) return Series::one(ctx) + Series::generator(ctx, lyndon[0]);
    auto [v, s] = standard_factorization(lyndon);
    return group_commutator(Xi(v, ctx), Xi(s, ctx));
  });
}

namespace {

class PowerCache {
 public:
  const std::vector<Series>& get(const CacheKey& key, const Word& L, const SeriesContext& ctx) {
    {
      std::lock_guard lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    const Series x = Xi(L, ctx) - Series::one(ctx);
    std::vector<Series> powers{Series::one(ctx)};
    while (!powers.back().is_zero()) powers.push_back(powers.back() * x);
    powers.pop_back();
    std::lock_guard lock(mu_);
    return map_.try_emplace(key, std::move(powers)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<CacheKey, std::vector<Series>> map_;
};

PowerCache& power_cache() {
  static PowerCache c;
  return c;
}

}  // namespace

Series Xi_power(const Word& lyndon, const Coefficient& t, const SeriesContext& ctx) {
  require_lyndon(lyndon, ctx);
  if (t.ring() != ctx.ring) {
    throw RingMismatch("exponent over " + t.ring().to_string() + " for a series over " + ctx.ring.to_string());
  }
  const auto& powers = power_cache().get(key_of(lyndon, ctx), lyndon, ctx);
  Series out(ctx);
  for (unsigned m = 0; m < powers.size(); ++m) {
    const Coefficient c = binomial(t, m);
    if (c.is_zero()) continue;
    for (const auto& [w, v] : powers[m].terms()) out.add_term(w, c * v);
  }
  return out;
}

std::vector<std::pair<Word, Series>> lyndon_basis(const SeriesContext& ctx, int k) {
  if (k < 1 || k > ctx.max_degree) throw PreconditionError("basis degree out of range");
  std::vector<std::pair<Word, Series>> out;
  for (const Word& L : lyndon_words_of_length(ctx.n, k)) out.emplace_back(L, xi(L, ctx));
  return out;
}

Series combine_lie(const LyndonBasisCoefficients& t, const SeriesContext& ctx) {
  Series z(ctx);
  for (const auto& [L, c] : t) {
    if (static_cast<int>(L.size()) > ctx.max_degree || c.is_zero()) continue;
    z += scalar_mul(c, xi(L, ctx));
  }
  return z;
}

LyndonBasisCoefficients decompose_lie_unchecked(const Series& z) {
  if (!z.constant_term().is_zero()) throw PreconditionError("Lie elements have zero constant term");
  const SeriesContext& ctx = z.context();
  LyndonBasisCoefficients out;
  Series rest = z;
  for (int k = 1; k <= ctx.max_degree; ++k) {
    for (const Word& L : lyndon_words_of_length(ctx.n, k)) {
      const Coefficient t = rest.coeff(L);
      if (t.is_zero()) continue;
      out.emplace(L, t);
      rest -= scalar_mul(t, xi(L, ctx));
    }
    if (!homogeneous_component(rest, k).is_zero()) {
      throw InternalInconsistency("non-Lie residual in degree " + std::to_string(k) + ": " +
                                  homogeneous_component(rest, k).to_string());
    }
  }
  return out;
}

LyndonBasisCoefficients decompose_lie(const Series& z) {
  if (!is_primitive(z)) throw PreconditionError("decomposition needs a primitive series");
  return decompose_lie_unchecked(z);
}

Series bch(const Series& u, const Series& v) {
  check_same_context(u, v);
  if (!is_primitive(u) || !is_primitive(v)) throw PreconditionError("bch needs primitive arguments");
  return ln(exp(u) * exp(v));
}

}  // namespace magnus
