#include "magnus/completions.hpp"

#include <deque>
#include <set>

namespace magnus {

OpenSubgroupSpec::OpenSubgroupSpec(int nu_, unsigned long p_, int m_) : nu(nu_), p(p_), m(m_) {
  if (nu < 1) throw PreconditionError("nu must be positive");
  if (m < 1) throw PreconditionError("m must be positive");
  RingTag::padics(p, 1);  // validates the prime
}

std::size_t sigma(int n, int nu) { return lyndon_words(n, nu).size(); }

int recommended_cap(const OpenSubgroupSpec& spec, int max_degree) {
  Integer f = 1;
  for (int i = 2; i <= max_degree; ++i) f *= i;
  int digits = 0;
  Integer q = 1;
  while (q < f) {
    q *= spec.p;
    ++digits;
  }
  return spec.m + digits;
}

namespace {

// Residue mod p^k of a p-integral coefficient of any ring.
Integer residue_of(const Coefficient& c, unsigned long p, int k) {
  const Integer mod = prime_power(p, static_cast<unsigned long>(k));
  if (const PAdic* x = c.as_padic()) {
    if (x->is_zero()) return 0;
    return x->residue(k);
  }
  const Rational q = *c.to_rational();
  if (q.get_den() % p == 0) throw PreconditionError("coefficient " + q.get_str() + " is not p-integral");
  Integer inv;
  mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), mod.get_mpz_t());
  Integer r = q.get_num() * inv % mod;
  if (r < 0) r += mod;
  return r;
}

void check_ring(const Series& g, const OpenSubgroupSpec& spec) {
  if (spec.nu > g.max_degree()) throw PreconditionError("nu exceeds the series truncation degree");
  const RingTag& ring = g.ring();
  if (ring.kind() != RingTag::Kind::PAdic) return;
  if (ring.prime() != spec.p) {
    throw PreconditionError("series is " + std::to_string(ring.prime()) + "-adic, subgroup is " +
                            std::to_string(spec.p) + "-adic");
  }
  if (ring.cap() < spec.m) {
    throw PrecisionError("precision " + std::to_string(ring.cap()) + " is below m = " + std::to_string(spec.m));
  }
}

bool divisible(const Coefficient& c, const OpenSubgroupSpec& spec) {
  if (c.is_zero()) return true;
  if (!c.is_integral()) throw PreconditionError("coefficient " + c.to_string() + " is not integral");
  if (const PAdic* x = c.as_padic()) return x->valuation() >= spec.m;
  const Rational q = *c.to_rational();
  if (q.get_den() % spec.p == 0) throw PreconditionError("coefficient " + q.get_str() + " is not p-integral");
  return valuation_of(q.get_num(), spec.p) >= static_cast<unsigned long>(spec.m);
}

}  // namespace

bool in_open_subgroup(const Series& g, const OpenSubgroupSpec& spec) {
  check_ring(g, spec);
  if (!g.constant_term().is_one()) throw PreconditionError("subgroup membership needs constant term 1");
  for (const auto& [w, c] : g.terms()) {
    if (w.empty()) continue;
    if (static_cast<int>(w.size()) > spec.nu) break;
    if (!divisible(c, spec)) return false;
  }
  return true;
}

std::map<Word, Integer, GradedLess> coset_coordinates(const Series& g, const OpenSubgroupSpec& spec) {
  check_ring(g, spec);
  const Series head = with_max_degree(g, spec.nu);
  const MalcevCoordinates t = malcev_decompose(head, LyndonOrder::graded());
  std::map<Word, Integer, GradedLess> out;
  for (const Word& L : lyndon_words(g.n(), spec.nu)) {
    out.emplace(L, residue_of(t.at(L, head.context()), spec.p, spec.m));
  }
  return out;
}

Integer order_mod_subgroup(const Series& g, const OpenSubgroupSpec& spec) {
  check_ring(g, spec);
  std::size_t words = 0;
  std::size_t layer = 1;
  for (int k = 1; k <= spec.nu; ++k) {
    layer *= static_cast<std::size_t>(g.n());
    words += layer;
  }
  const std::size_t guard = static_cast<std::size_t>(spec.m) * words;
  const Series head = with_max_degree(g, spec.nu);
  Series h = head;
  Integer k = 1;
  for (std::size_t e = 0; e <= guard; ++e) {
    if (in_open_subgroup(h, spec)) return k;
    h = power(h, static_cast<long>(spec.p));
    k *= spec.p;
  }
  throw InternalInconsistency("no power p^e with e <= " + std::to_string(guard) + " lands in U");
}

std::vector<PowerAgreement> integer_power_limit(const Word& L, const Coefficient& t, const std::vector<Integer>& ks,
                                                const SeriesContext& ctx) {
  if (ctx.ring.kind() != RingTag::Kind::PAdic) throw PreconditionError("convergence reports need a p-adic ring");
  if (t.ring() != ctx.ring) throw RingMismatch("exponent ring differs from the series ring");
  const unsigned long p = ctx.ring.prime();
  const Series target = Xi_power(L, t, ctx);
  std::vector<PowerAgreement> out;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const Coefficient k = Coefficient::from_integer(ks[i], ctx.ring);
    const Coefficient gap = k - t;
    if (!gap.is_zero() && gap.as_padic()->valuation() < static_cast<long>(i + 1)) {
      throw PreconditionError("k_" + std::to_string(i + 1) + " = " + ks[i].get_str() + " is not congruent to t mod " +
                              std::to_string(p) + "^" + std::to_string(i + 1));
    }
    const Series approx = Xi_power(L, k, ctx);
    if (gap.is_zero() && approx == target) {
      out.push_back({ks[i], std::nullopt});
      continue;
    }
    std::optional<long> precision;
    auto lower = [&](long v) { precision = precision ? std::min(*precision, v) : v; };
    std::set<Word, GradedLess> support;
    for (const auto& [w, c] : approx.terms()) support.insert(w);
    for (const auto& [w, c] : target.terms()) support.insert(w);
    for (const Word& w : support) {
      const PAdic a = *approx.coeff(w).as_padic();
      const PAdic b = *target.coeff(w).as_padic();
      const PAdic d = a - b;
      if (!d.is_zero()) {
        lower(d.valuation());
        continue;
      }
      if (auto pa = a.absolute_precision()) lower(*pa);
      if (auto pb = b.absolute_precision()) lower(*pb);
    }
    out.push_back({ks[i], precision});
  }
  return out;
}

std::vector<std::map<Word, Integer, GradedLess>> enumerate_coordinate_classes(int n, const OpenSubgroupSpec& spec) {
  const SeriesContext ctx(n, spec.nu, RingTag::integers());
  std::vector<Series> steps;
  for (int j = 1; j <= n; ++j) {
    steps.push_back(magnus_embed(GroupWord(n, {{j, 1}}), ctx));
    steps.push_back(magnus_embed(GroupWord(n, {{j, -1}}), ctx));
  }
  std::vector<std::map<Word, Integer, GradedLess>> classes;
  std::set<std::vector<Integer>> seen;
  std::deque<Series> queue;
  auto visit = [&](const Series& g) {
    auto coords = coset_coordinates(g, spec);
    std::vector<Integer> key;
    for (const auto& [L, r] : coords) key.push_back(r);
    if (!seen.insert(key).second) return;
    classes.push_back(std::move(coords));
    queue.push_back(g);
  };
  visit(Series::one(ctx));
  while (!queue.empty()) {
    const Series g = queue.front();
    queue.pop_front();
    for (const Series& s : steps) visit(g * s);
  }
  return classes;
}

std::size_t quotient_order(int n, const OpenSubgroupSpec& spec) {
  const SeriesContext ctx(n, spec.nu, RingTag::integers());
  const Integer mod = spec.modulus();
  auto reduce = [&](const Series& g) {
    Series r(ctx);
    for (const auto& [w, c] : g.terms()) {
      Integer v = *c.as_integer() % mod;
      if (v < 0) v += mod;
      r.add_term(w, Coefficient(v));
    }
    return r;
  };
  std::vector<Series> steps;
  for (int j = 1; j <= n; ++j) {
    steps.push_back(reduce(magnus_embed(GroupWord(n, {{j, 1}}), ctx)));
    steps.push_back(reduce(magnus_embed(GroupWord(n, {{j, -1}}), ctx)));
  }
  std::set<std::string> seen;
  auto key_of = [](const Series& g) {
    std::string k;
    for (const auto& [w, c] : g.terms()) k += w.key() + ':' + c.to_string() + ';';
    return k;
  };
  std::deque<Series> queue{Series::one(ctx)};
  seen.insert(key_of(queue.front()));
  while (!queue.empty()) {
    const Series g = queue.front();
    queue.pop_front();
    for (const Series& s : steps) {
      Series h = reduce(g * s);
      if (seen.insert(key_of(h)).second) queue.push_back(std::move(h));
    }
  }
  return seen.size();
}

}  // namespace magnus
