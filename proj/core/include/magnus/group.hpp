#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "magnus/lie.hpp"
#include "magnus/series.hpp"
#include "magnus/words.hpp"

namespace magnus {

/// Word in the free group: a sequence of g_j^e with e != 0.
class GroupWord {
 public:
  using Syllable = std::pair<int, long>;  // (generator, exponent)

  explicit GroupWord(int n) : n_(n) {}
  GroupWord(int n, std::vector<Syllable> syllables);

  /// "1 2 -1" or "a b A" (upper case = inverse); "" is the identity.
  static GroupWord parse(const std::string& text, int n);

  int alphabet() const { return n_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }

  GroupWord& append(int generator, long exponent);
  GroupWord inverse() const;
  /// Merges adjacent syllables of the same generator and drops zero powers.
  GroupWord reduced() const;

  std::string to_string() const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  int n_;
  std::vector<Syllable> syllables_;
};

/// Image under g_j -> 1 + w_j.
Series magnus_embed(const GroupWord& w, const SeriesContext& ctx);

/// delta(g) = g (x) g; false for any constant term other than 1.
bool is_in_group(const Series& g);

/// Exponents t_L of the ordered product prod Xi_L^{t_L}.
struct MalcevCoordinates {
  LyndonOrder order = LyndonOrder::graded();
  std::map<Word, Coefficient, GradedLess> entries;  // zero exponents omitted

  Coefficient at(const Word& L, const SeriesContext& ctx) const;
  void set(const Word& L, const Coefficient& t);
};

/// Coordinates of g under the given factor order. Checks that g lies in
/// the group unless `check` is false.
MalcevCoordinates malcev_decompose(const Series& g, const LyndonOrder& order = LyndonOrder::graded(),
                                   bool check = true);

/// Ordered product of Xi_L^{t_L} over |L| <= N.
Series malcev_compose(const MalcevCoordinates& t, const SeriesContext& ctx);

/// Every coefficient lies in Z (or Z_p).
bool is_integral(const Series& g);

/// c_L for every Lyndon word of length <= N (zeros included).
std::map<Word, Coefficient, GradedLess> lyndon_coefficients(const Series& g);

struct Reconstruction {
  Series series;
  MalcevCoordinates coordinates;
};

/// The grouplike g with c_L = a_L for every Lyndon L (missing keys are 0).
Reconstruction reconstruct_from_lyndon_coeffs(const std::map<Word, Coefficient, GradedLess>& a,
                                              const LyndonOrder& order, const SeriesContext& ctx);

}  // namespace magnus
