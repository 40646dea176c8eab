#include "magnus/json.hpp"

#include <regex>

namespace magnus::json {

namespace {

template <typename T>
T require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("field '") + key + "' has the wrong type");
  }
}

Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw ParseError("bad number '" + text + "'");
  Rational q;
  q.get_num() = Integer(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
  q.get_den() = m[2].matched ? Integer(m[2].str()) : Integer(1);
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace

RingTag parse_ring(const std::string& raw) {
  const auto first = raw.find_first_not_of(" \t");
  const std::string text = first == std::string::npos ? "" : raw.substr(first, raw.find_last_not_of(" \t") - first + 1);
  if (text == "int") return RingTag::integers();
  if (text == "rat") return RingTag::rationals();
  static const std::regex pattern(R"(padic\s*\(\s*(\d+)\s*,\s*(\d+)\s*\))");
  std::smatch m;
  if (std::regex_match(text, m, pattern)) {
    return RingTag::padics(std::stoul(m[1].str()), std::stoi(m[2].str()));
  }
  throw ParseError("unknown ring '" + text + "'");
}

json to_json(const Coefficient& c) {
  if (const PAdic* x = c.as_padic()) {
    return json{{"p", x->prime()},
                {"prec", x->relative_precision()},
                {"val", x->is_zero() ? 0 : x->valuation()},
                {"unit", x->unit().get_str()}};
  }
  return c.to_string();
}

Coefficient parse_coefficient(const std::string& text, const RingTag& ring) {
  const Rational q = parse_rational(text);
  if (ring.kind() == RingTag::Kind::Integer && q.get_den() != 1) {
    throw ParseError("non-integer " + text + " over the integer ring");
  }
  return Coefficient::from_rational(q, ring);
}

Coefficient coefficient_from_json(const json& j, const RingTag& ring) {
  if (j.is_string()) return parse_coefficient(j.get<std::string>(), ring);
  if (j.is_number_integer()) return Coefficient::from_integer(Integer(j.dump()), ring);
  if (j.is_object()) {
    if (ring.kind() != RingTag::Kind::PAdic) throw ParseError("p-adic coefficient in a " + ring.to_string() + " document");
    const auto p = require<unsigned long>(j, "p");
    const auto prec = require<int>(j, "prec");
    const auto val = require<long>(j, "val");
    const Integer unit(require<std::string>(j, "unit"));
    if (p != ring.prime()) throw ParseError("coefficient prime differs from the ring prime");
    if (unit == 0) return Coefficient::zero(ring);
    try {
      return Coefficient(PAdic::from_parts(p, ring.cap(), val, unit, prec));
    } catch (const PreconditionError& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("bad coefficient " + j.dump());
}

json to_json(const Word& w) {
  json a = json::array();
  for (std::size_t i = 0; i < w.size(); ++i) a.push_back(w[i]);
  return a;
}

Word word_from_json(const json& j, int n) {
  if (j.is_string()) return Word::parse(j.get<std::string>(), n);
  if (!j.is_array()) throw ParseError("word must be an array or a string");
  std::vector<int> letters;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("word letters must be integers");
    const int a = x.get<int>();
    if (a < 1 || a > n) throw ParseError("letter " + std::to_string(a) + " outside 1.." + std::to_string(n));
    letters.push_back(a);
  }
  return Word(n, letters);
}

json to_json(const Series& g) {
  json terms = json::array();
  for (const auto& [w, c] : g.terms()) terms.push_back({{"word", to_json(w)}, {"coeff", to_json(c)}});
  return {{"n", g.n()}, {"max_degree", g.max_degree()}, {"ring", g.ring().to_string()}, {"terms", terms}};
}

Series series_from_json(const json& j) {
  const int n = require<int>(j, "n");
  const int N = require<int>(j, "max_degree");
  SeriesContext ctx;
  try {
    ctx = SeriesContext(n, N, parse_ring(require<std::string>(j, "ring")));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  Series g(ctx);
  if (!j.contains("terms") || !j["terms"].is_array()) throw ParseError("missing 'terms' array");
  for (const auto& t : j["terms"]) {
    if (!t.contains("word") || !t.contains("coeff")) throw ParseError("term needs 'word' and 'coeff'");
    const Word w = word_from_json(t["word"], n);
    if (static_cast<int>(w.size()) > N) throw ParseError("term " + w.to_string() + " exceeds max_degree");
    g.add_term(w, coefficient_from_json(t["coeff"], ctx.ring));
  }
  return g;
}

json to_json(const TensorSeries& t) {
  json terms = json::array();
  for (const auto& [k, c] : t.terms()) {
    terms.push_back({{"left", to_json(k.first)}, {"right", to_json(k.second)}, {"coeff", to_json(c)}});
  }
  const auto& ctx = t.context();
  return {{"n", ctx.n}, {"max_degree", ctx.max_degree}, {"ring", ctx.ring.to_string()}, {"terms", terms}};
}

json to_json(const LyndonOrder& order) {
  if (order.kind() != LyndonOrder::Kind::Custom) return order.name();
  json ranking = json::array();
  for (const Word& w : order.ranking()) ranking.push_back(to_json(w));
  return {{"ranking", ranking}};
}

LyndonOrder order_from_json(const json& j, int n) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "graded") return LyndonOrder::graded();
    if (s == "lex") return LyndonOrder::lex();
    throw ParseError("unknown order '" + s + "'");
  }
  if (j.is_object() && j.contains("ranking") && j["ranking"].is_array()) {
    std::vector<Word> ranking;
    for (const auto& w : j["ranking"]) ranking.push_back(word_from_json(w, n));
    try {
      return LyndonOrder::from_ranking(std::move(ranking));
    } catch (const PreconditionError& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("order must be \"graded\", \"lex\" or {\"ranking\": [...]}");
}

json to_json(const MalcevCoordinates& t, const SeriesContext& ctx) {
  json entries = json::array();
  for (const auto& [L, c] : t.entries) entries.push_back({{"word", to_json(L)}, {"t", to_json(c)}});
  return {{"n", ctx.n},
          {"max_degree", ctx.max_degree},
          {"ring", ctx.ring.to_string()},
          {"order", to_json(t.order)},
          {"entries", entries}};
}

std::pair<MalcevCoordinates, SeriesContext> malcev_from_json(const json& j) {
  const int n = require<int>(j, "n");
  SeriesContext ctx;
  try {
    ctx = SeriesContext(n, require<int>(j, "max_degree"), parse_ring(require<std::string>(j, "ring")));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  MalcevCoordinates t{j.contains("order") ? order_from_json(j["order"], n) : LyndonOrder::graded(), {}};
  if (!j.contains("entries") || !j["entries"].is_array()) throw ParseError("missing 'entries' array");
  for (const auto& e : j["entries"]) {
    if (!e.contains("word") || !e.contains("t")) throw ParseError("entry needs 'word' and 't'");
    const Word L = word_from_json(e["word"], n);
    if (!is_lyndon(L)) throw ParseError(L.to_string() + " is not a Lyndon word");
    t.set(L, coefficient_from_json(e["t"], ctx.ring));
  }
  return {std::move(t), ctx};
}

json to_json(const std::map<Word, Coefficient, GradedLess>& coefficients) {
  json a = json::array();
  for (const auto& [w, c] : coefficients) a.push_back({{"word", to_json(w)}, {"coeff", to_json(c)}});
  return a;
}

std::map<Word, Coefficient, GradedLess> coefficients_from_json(const json& j, const SeriesContext& ctx) {
  const json& list = j.is_object() && j.contains("coefficients") ? j["coefficients"] : j;
  if (!list.is_array()) throw ParseError("coefficient list must be an array");
  std::map<Word, Coefficient, GradedLess> out;
  for (const auto& e : list) {
    if (!e.contains("word") || !e.contains("coeff")) throw ParseError("entry needs 'word' and 'coeff'");
    out.insert_or_assign(word_from_json(e["word"], ctx.n), coefficient_from_json(e["coeff"], ctx.ring));
  }
  return out;
}

json to_json(const GrouplikeViolation& v) {
  return {{"left", to_json(v.left)}, {"right", to_json(v.right)}, {"product", to_json(v.product)}, {"sum", to_json(v.sum)}};
}

}  // namespace magnus::json
