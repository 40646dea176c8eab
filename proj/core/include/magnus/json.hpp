#pragma once

#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "magnus/completions.hpp"
#include "magnus/coproduct.hpp"
#include "magnus/group.hpp"
#include "magnus/lie.hpp"
#include "magnus/series.hpp"

namespace magnus::json {

using nlohmann::json;

/// "int", "rat" or "padic(p,M)".
RingTag parse_ring(const std::string& text);

/// "num" / "num/den" strings; p-adics as {"p", "prec", "val", "unit"}.
json to_json(const Coefficient& c);
Coefficient coefficient_from_json(const json& j, const RingTag& ring);
/// Parses "3", "-1/2" into the given ring.
Coefficient parse_coefficient(const std::string& text, const RingTag& ring);

/// Array of 1-based letters.
json to_json(const Word& w);
/// Accepts an array of letters or a letter string "aab".
Word word_from_json(const json& j, int n);

json to_json(const Series& g);
Series series_from_json(const json& j);

json to_json(const TensorSeries& t);

json to_json(const LyndonOrder& order);
/// "graded", "lex", or {"ranking": [[...], ...]}.
LyndonOrder order_from_json(const json& j, int n);

/// Self-contained: carries n, max_degree and ring next to the entries.
json to_json(const MalcevCoordinates& t, const SeriesContext& ctx);
/// Reads n, max_degree and ring from the document.
std::pair<MalcevCoordinates, SeriesContext> malcev_from_json(const json& j);

json to_json(const std::map<Word, Coefficient, GradedLess>& coefficients);
/// [{"word", "coeff"}, ...].
std::map<Word, Coefficient, GradedLess> coefficients_from_json(const json& j, const SeriesContext& ctx);

json to_json(const GrouplikeViolation& v);

}  // namespace magnus::json
