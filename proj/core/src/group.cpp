#include "magnus/group.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace magnus {

GroupWord::GroupWord(int n, std::vector<Syllable> syllables) : n_(n) {
  for (const auto& [g, e] : syllables) append(g, e);
}

GroupWord& GroupWord::append(int generator, long exponent) {
  if (generator < 1 || generator > n_) {
    throw PreconditionError("generator " + std::to_string(generator) + " outside 1.." + std::to_string(n_));
  }
  if (exponent == 0) throw PreconditionError("zero exponent in a group word");
  syllables_.emplace_back(generator, exponent);
  return *this;
}

GroupWord GroupWord::parse(const std::string& text, int n) {
  GroupWord w(n);
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (std::isalpha(static_cast<unsigned char>(tok[0]))) {
      for (char ch : tok) {
        if (!std::isalpha(static_cast<unsigned char>(ch))) throw ParseError("bad group word token '" + tok + "'");
        const bool inv = std::isupper(static_cast<unsigned char>(ch));
        const int g = std::tolower(static_cast<unsigned char>(ch)) - 'a' + 1;
        if (g > n) throw ParseError("letter '" + std::string(1, ch) + "' outside the alphabet");
        w.append(g, inv ? -1 : 1);
      }
      continue;
    }
    long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || v == 0) {
      throw ParseError("bad group word token '" + tok + "'");
    }
    const long g = v < 0 ? -v : v;
    if (g > n) throw ParseError("generator " + tok + " outside the alphabet");
    w.append(static_cast<int>(g), v < 0 ? -1 : 1);
  }
  return w;
}

GroupWord GroupWord::inverse() const {
  GroupWord r(n_);
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) r.append(it->first, -it->second);
  return r;
}

GroupWord GroupWord::reduced() const {
  std::vector<Syllable> out;
  for (const auto& [g, e] : syllables_) {
    if (!out.empty() && out.back().first == g) {
      out.back().second += e;
      if (out.back().second == 0) out.pop_back();
    } else {
      out.emplace_back(g, e);
    }
  }
  return GroupWord(n_, out);
}

std::string GroupWord::to_string() const {
  if (syllables_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, e] : syllables_) {
    if (!first) os << ' ';
    first = false;
    os << 'g' << g;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

Series magnus_embed(const GroupWord& w, const SeriesContext& ctx) {
  if (w.alphabet() != ctx.n) throw PreconditionError("group word over a different alphabet");
  Series g = Series::one(ctx);
  for (const auto& [j, e] : w.syllables()) {
    const Series gen = Series::one(ctx) + Series::generator(ctx, j);
    g = g * (e == 1 ? gen : power(gen, e));
  }
  return g;
}

bool is_in_group(const Series& g) {
  if (!g.constant_term().is_one()) return false;
  return is_grouplike(g, CoproductKind::Twisted);
}

Coefficient MalcevCoordinates::at(const Word& L, const SeriesContext& ctx) const {
  auto it = entries.find(L);
  return it == entries.end() ? ctx.zero() : it->second;
}

void MalcevCoordinates::set(const Word& L, const Coefficient& t) {
  if (t.is_zero()) {
    entries.erase(L);
  } else {
    entries.insert_or_assign(L, t);
  }
}

namespace {

// Ordered product of the factors with |L| <= max_len, in the context ctx.
Series ordered_product(const MalcevCoordinates& t, const std::vector<Word>& ordered, std::size_t max_len,
                       const SeriesContext& ctx) {
  Series g = Series::one(ctx);
  for (const Word& L : ordered) {
    if (L.size() > max_len) continue;
    auto it = t.entries.find(L);
    if (it == t.entries.end()) continue;
    g = g * Xi_power(L, it->second, ctx);
  }
  return g;
}

}  // namespace

MalcevCoordinates malcev_decompose(const Series& g, const LyndonOrder& order, bool check) {
  if (check && !is_in_group(g)) throw PreconditionError("series is not in the group (delta-grouplike check failed)");
  const SeriesContext& ctx = g.context();
  const std::vector<Word> ordered = lyndon_words(ctx.n, std::max(ctx.max_degree, 1), order);
  MalcevCoordinates out{order, {}};
  for (int m = 1; m <= ctx.max_degree; ++m) {
    const SeriesContext cm(ctx.n, m, ctx.ring);
    const Series P = ordered_product(out, ordered, m - 1, cm);
    const Series r = homogeneous_component(with_max_degree(g, m) * inverse(P), m);
    if (!is_primitive(r)) {
      throw InternalInconsistency("degree " + std::to_string(m) + " residual is not primitive: " + r.to_string());
    }
    for (const auto& [L, c] : decompose_lie_unchecked(r)) out.set(L, c);
  }
  return out;
}

Series malcev_compose(const MalcevCoordinates& t, const SeriesContext& ctx) {
  for (const auto& [L, c] : t.entries) {
    if (L.alphabet() != ctx.n) throw PreconditionError("coordinate word over a different alphabet");
    if (c.ring() != ctx.ring) throw RingMismatch("coordinate ring " + c.ring().to_string() + " vs " + ctx.ring.to_string());
  }
  const std::vector<Word> ordered = lyndon_words(ctx.n, std::max(ctx.max_degree, 1), t.order);
  return ordered_product(t, ordered, ctx.max_degree, ctx);
}

bool is_integral(const Series& g) {
  for (const auto& [w, c] : g.terms()) {
    if (!c.is_integral()) return false;
  }
  return true;
}

std::map<Word, Coefficient, GradedLess> lyndon_coefficients(const Series& g) {
  std::map<Word, Coefficient, GradedLess> out;
  for (const Word& L : lyndon_words(g.n(), std::max(g.max_degree(), 1))) {
    if (static_cast<int>(L.size()) <= g.max_degree()) out.emplace(L, g.coeff(L));
  }
  return out;
}

// Degree by degree. With P the product of the factors of lower degree, the
// degree-m part of the full product is P_m + sum_{|M| = m} t_M xi_M, and xi_M
// is unitriangular in lexicographic order, so the t_K solve by forward
// substitution.
Reconstruction reconstruct_from_lyndon_coeffs(const std::map<Word, Coefficient, GradedLess>& a,
                                              const LyndonOrder& order, const SeriesContext& ctx) {
  for (const auto& [L, c] : a) {
    if (L.alphabet() != ctx.n || !is_lyndon(L)) throw PreconditionError(L.to_string() + " is not a Lyndon word");
    if (c.ring() != ctx.ring) throw RingMismatch("coefficient ring " + c.ring().to_string() + " vs " + ctx.ring.to_string());
  }
  auto a_of = [&](const Word& L) {
    auto it = a.find(L);
    return it == a.end() ? ctx.zero() : it->second;
  };
  const std::vector<Word> ordered = lyndon_words(ctx.n, std::max(ctx.max_degree, 1), order);
  MalcevCoordinates coords{order, {}};
  for (int m = 1; m <= ctx.max_degree; ++m) {
    const SeriesContext cm(ctx.n, m, ctx.ring);
    const Series P = ordered_product(coords, ordered, m - 1, cm);
    Series level = homogeneous_component(P, m);
    for (const Word& K : lyndon_words_of_length(ctx.n, m)) {
      const Coefficient t = a_of(K) - level.coeff(K);
      if (t.is_zero()) continue;
      coords.set(K, t);
      level += scalar_mul(t, xi(K, cm));
    }
  }
  return {malcev_compose(coords, ctx), coords};
}

}  // namespace magnus
