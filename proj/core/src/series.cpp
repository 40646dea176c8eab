#include "magnus/series.hpp"

#include <sstream>

namespace magnus {

SeriesContext::SeriesContext(int n_, int max_degree_, RingTag ring_)
    : n(n_), max_degree(max_degree_), ring(ring_) {
  if (n < 1 || n > Word::kMaxAlphabet) throw PreconditionError("alphabet size out of range");
  if (max_degree < 0) throw PreconditionError("truncation degree must be nonnegative");
}

void check_same_context(const Series& a, const Series& b) {
  if (!(a.context() == b.context())) {
    throw PreconditionError("series contexts differ: (n=" + std::to_string(a.n()) +
                            ", N=" + std::to_string(a.max_degree()) + ", " + a.ring().to_string() +
                            ") vs (n=" + std::to_string(b.n()) + ", N=" + std::to_string(b.max_degree()) +
                            ", " + b.ring().to_string() + ")");
  }
}

Series Series::one(const SeriesContext& ctx) { return constant(ctx, ctx.one()); }

Series Series::constant(const SeriesContext& ctx, const Coefficient& c) {
  Series s(ctx);
  s.add_term(Word(ctx.n), c);
  return s;
}

Series Series::generator(const SeriesContext& ctx, int j) {
  Series s(ctx);
  s.add_term(Word(ctx.n, {j}), ctx.one());
  return s;
}

Series Series::monomial(const SeriesContext& ctx, const Word& w, const Coefficient& c) {
  Series s(ctx);
  s.add_term(w, c);
  return s;
}

Series Series::from_terms(const SeriesContext& ctx, const std::vector<std::pair<Word, Coefficient>>& terms) {
  Series s(ctx);
  for (const auto& [w, c] : terms) s.add_term(w, c);
  return s;
}

void Series::check_word(const Word& w) const {
  if (w.alphabet() != ctx_.n) {
    throw PreconditionError("word " + w.to_string() + " over alphabet " + std::to_string(w.alphabet()) +
                            " used in a series over " + std::to_string(ctx_.n) + " letters");
  }
}

Coefficient Series::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? ctx_.zero() : it->second;
}

Coefficient Series::constant_term() const { return coeff(Word(ctx_.n)); }

std::optional<int> Series::min_degree() const {
  if (terms_.empty()) return std::nullopt;
  return static_cast<int>(terms_.begin()->first.size());
}

void Series::add_term(const Word& w, const Coefficient& c) {
  check_word(w);
  if (c.ring() != ctx_.ring) throw RingMismatch("coefficient ring " + c.ring().to_string() + " in a series over " + ctx_.ring.to_string());
  if (static_cast<int>(w.size()) > ctx_.max_degree || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Series& Series::operator+=(const Series& o) {
  check_same_context(*this, o);
  for (const auto& [w, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Series& Series::operator-=(const Series& o) { return *this += -o; }

Series Series::operator-() const {
  Series r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

Series operator*(const Series& a, const Series& b) { return mul(a, b, a.max_degree()); }

Series operator*(const Coefficient& c, const Series& a) { return scalar_mul(c, a); }

bool operator==(const Series& a, const Series& b) { return a.ctx_ == b.ctx_ && a.terms_ == b.terms_; }

std::string Series::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string cs = c.to_string();
    bool negative = !cs.empty() && cs[0] == '-';
    if (negative) cs.erase(0, 1);
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    first = false;
    const bool unit = cs == "1";
    if (w.empty()) {
      os << cs;
    } else if (unit) {
      os << w.to_string();
    } else {
      const bool compound = cs.find(' ') != std::string::npos;
      os << (compound ? "(" + cs + ")" : cs) << "*" << w.to_string();
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Series add(const Series& a, const Series& b) { return a + b; }

Series mul(const Series& a, const Series& b) { return a * b; }

Series mul(const Series& a, const Series& b, int max_degree) {
  check_same_context(a, b);
  if (max_degree > a.max_degree()) max_degree = a.max_degree();
  Series r(a.context());
  Series::Terms acc;
  // terms are ordered by degree, so both loops can stop at the first word
  // that would overflow the truncation
  for (const auto& [wa, ca] : a.terms()) {
    const int da = static_cast<int>(wa.size());
    if (da > max_degree) break;
    for (const auto& [wb, cb] : b.terms()) {
      if (da + static_cast<int>(wb.size()) > max_degree) break;
      Word w = wa.concat(wb);
      auto it = acc.lower_bound(w);
      if (it == acc.end() || acc.key_comp()(w, it->first)) {
        acc.emplace_hint(it, std::move(w), ca * cb);
      } else {
        it->second.add_product(ca, cb);
      }
    }
  }
  for (auto& [w, c] : acc) {
    if (!c.is_zero()) r.add_term(w, c);
  }
  return r;
}

Series scalar_mul(const Coefficient& c, const Series& a) {
  Series r(a.context());
  if (c.is_zero()) return r;
  for (const auto& [w, x] : a.terms()) r.add_term(w, c * x);
  return r;
}

Series lie_bracket(const Series& a, const Series& b) { return a * b - b * a; }

namespace {

void require_unit_constant(const Series& g, const char* op) {
  if (!g.constant_term().is_one()) {
    throw PreconditionError(std::string(op) + " needs constant term 1, got " + g.constant_term().to_string());
  }
}

void require_rationals(const Series& g, const char* op) {
  if (!g.ring().contains_rationals()) {
    throw PreconditionError(std::string(op) + " is not defined over the integer ring");
  }
}

// sum_{m>=0} coeffs(m) x^m for x without constant term
template <typename CoeffFn>
Series substitute_power_series(const Series& x, CoeffFn&& coeff_of) {
  const SeriesContext& ctx = x.context();
  Series result(ctx);
  const Coefficient c0 = coeff_of(0u);
  if (!c0.is_zero()) result.add_term(Word(ctx.n), c0);
  Series xp = Series::one(ctx);
  for (unsigned m = 1; m <= static_cast<unsigned>(ctx.max_degree); ++m) {
    xp = xp * x;
    if (xp.is_zero()) break;
    const Coefficient c = coeff_of(m);
    if (c.is_zero()) continue;
    for (const auto& [w, v] : xp.terms()) result.add_term(w, c * v);
  }
  return result;
}

}  // namespace

Series inverse(const Series& g) {
  require_unit_constant(g, "inverse");
  const Series x = g - Series::one(g.context());
  const SeriesContext& ctx = g.context();
  return substitute_power_series(x, [&](unsigned m) { return ctx.integer(m % 2 ? -1 : 1); });
}

Series exp(const Series& x) {
  require_rationals(x, "exp");
  if (!x.constant_term().is_zero()) throw PreconditionError("exp needs a series without constant term");
  const SeriesContext& ctx = x.context();
  return substitute_power_series(x, [&](unsigned m) {
    Integer f = 1;
    for (unsigned i = 2; i <= m; ++i) f *= i;
    return Coefficient::from_rational(Rational(1, f), ctx.ring);
  });
}

Series ln(const Series& g) {
  require_rationals(g, "ln");
  require_unit_constant(g, "ln");
  const SeriesContext& ctx = g.context();
  const Series x = g - Series::one(ctx);
  return substitute_power_series(x, [&](unsigned m) {
    if (m == 0) return ctx.zero();
    return Coefficient::from_rational(Rational(m % 2 ? 1 : -1, m), ctx.ring);
  });
}

Series power(const Series& g, const Coefficient& t) {
  require_unit_constant(g, "power");
  if (t.ring() != g.ring()) {
    throw RingMismatch("exponent over " + t.ring().to_string() + " for a series over " + g.ring().to_string());
  }
  const Series x = g - Series::one(g.context());
  return substitute_power_series(x, [&](unsigned m) { return binomial(t, m); });
}

Series power(const Series& g, long t) { return power(g, g.context().integer(t)); }

Series power(const Series& g, const Rational& t) {
  if (!g.ring().contains_rationals() && t.get_den() != 1) {
    throw PreconditionError("non-integer power " + t.get_str() + " over the integer ring");
  }
  return power(g, Coefficient::from_rational(t, g.ring()));
}

Series group_commutator(const Series& g, const Series& h) {
  check_same_context(g, h);
  return inverse(g) * inverse(h) * g * h;
}

Series truncate(const Series& g, int k) {
  if (k > g.max_degree()) throw PreconditionError("truncation degree exceeds the series degree");
  Series r(g.context());
  for (const auto& [w, c] : g.terms()) {
    if (static_cast<int>(w.size()) > k) break;
    r.add_term(w, c);
  }
  return r;
}

Series homogeneous_component(const Series& g, int k) {
  if (k > g.max_degree()) throw PreconditionError("degree exceeds the series truncation");
  Series r(g.context());
  for (const auto& [w, c] : g.terms()) {
    if (static_cast<int>(w.size()) == k) r.add_term(w, c);
  }
  return r;
}

bool equal_mod(const Series& g, const Series& h, int k) {
  check_same_context(g, h);
  if (k > g.max_degree()) throw PreconditionError("comparison degree exceeds the series truncation");
  return truncate(g - h, k).is_zero();
}

Series change_ring(const Series& g, const RingTag& ring) {
  if (g.ring() == ring) return g;
  SeriesContext ctx(g.n(), g.max_degree(), ring);
  Series r(ctx);
  for (const auto& [w, c] : g.terms()) {
    auto q = c.to_rational();
    if (!q) throw PreconditionError("cannot move p-adic coefficients to " + ring.to_string());
    r.add_term(w, Coefficient::from_rational(*q, ring));
  }
  return r;
}

Series with_max_degree(const Series& g, int max_degree) {
  SeriesContext ctx(g.n(), max_degree, g.ring());
  Series r(ctx);
  for (const auto& [w, c] : g.terms()) r.add_term(w, c);
  return r;
}

}  // namespace magnus
