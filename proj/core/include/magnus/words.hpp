#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "magnus/errors.hpp"

namespace magnus {

/// Word over the alphabet {1, ..., n}. Doubles as the monomial
/// w_{a1} w_{a2} ... w_{ak}; the empty word is the monomial 1.
class Word {
 public:
  static constexpr int kMaxAlphabet = 127;

  Word() = default;
  explicit Word(int alphabet) : n_(check_alphabet(alphabet)) {}
  Word(int alphabet, std::initializer_list<int> letters);
  Word(int alphabet, const std::vector<int>& letters);

  /// Parses letter strings "aab" (a = 1) or whitespace separated
  /// integers "1 2 1".
  static Word parse(const std::string& text, int alphabet);

  int alphabet() const { return n_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  /// 1-based letter at position i (0-based index).
  int operator[](std::size_t i) const { return static_cast<unsigned char>(letters_[i]); }

  std::vector<int> letters() const;
  Word prefix(std::size_t len) const;
  Word suffix_from(std::size_t pos) const;
  Word concat(const Word& other) const;
  void push_back(int letter);

  /// Letters as 'a', 'b', ... (alphabet <= 26) or "1.2.3" otherwise.
  std::string to_string() const;

  const std::string& key() const { return letters_; }

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_ && a.n_ == b.n_; }

 private:
  static int check_alphabet(int n);

  std::string letters_;  // each char holds a letter value 1..n
  unsigned char n_ = 0;
};

/// Comparator used for every word-keyed container: degree first, then
/// lexicographic. Ignores the alphabet tag (containers hold a single alphabet).
struct GradedLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.key() < b.key();
  }
};

/// Lexicographic order with a proper prefix smaller than the longer word.
std::strong_ordering lex_compare(const Word& u, const Word& v);
/// Degree first, then lexicographic.
std::strong_ordering graded_compare(const Word& u, const Word& v);

bool is_lyndon(const Word& w);

/// Total order on Lyndon words used to arrange Malcev factors.
class LyndonOrder {
 public:
  enum class Kind { GradedLex, PureLex, Custom };
  using Less = std::function<bool(const Word&, const Word&)>;

  static LyndonOrder graded();
  static LyndonOrder lex();
  /// Words listed in `ranking` come first, in that order; any other word
  /// follows in graded order.
  static LyndonOrder from_ranking(std::vector<Word> ranking);
  static LyndonOrder custom(Less less, std::string name = "custom");

  Kind kind() const { return kind_; }
  std::string name() const;
  const std::vector<Word>& ranking() const { return ranking_; }

  bool less(const Word& a, const Word& b) const;
  void sort(std::vector<Word>& words) const;

 private:
  LyndonOrder(Kind kind, Less less, std::string name)
      : kind_(kind), less_(std::move(less)), name_(std::move(name)) {}

  Kind kind_;
  Less less_;
  std::string name_;
  std::vector<Word> ranking_;
};

/// All Lyndon words of length 1..max_len over n letters, sorted by `order`.
std::vector<Word> lyndon_words(int n, int max_len, const LyndonOrder& order = LyndonOrder::graded());
/// Lyndon words of exactly the given length in lexicographic order.
std::vector<Word> lyndon_words_of_length(int n, int len);

/// (v, s) with w = v s and s the longest proper Lyndon suffix.
std::pair<Word, Word> standard_factorization(const Word& w);

/// Binary bracketing obtained by iterating the standard factorization.
class ParenTree {
 public:
  static ParenTree leaf(int letter, int alphabet);
  static ParenTree node(ParenTree left, ParenTree right);

  bool is_leaf() const { return !left_; }
  int letter() const { return letter_; }
  const ParenTree& left() const { return *left_; }
  const ParenTree& right() const { return *right_; }

  /// Leaves read left to right.
  Word leaves() const;
  /// E.g. "((a∘(b∘c))∘((a∘c)∘(b∘c)))"; numeric letters when the alphabet
  /// exceeds 26.
  std::string to_string(const std::string& op = "∘") const;

 private:
  ParenTree() = default;

  int letter_ = 0;
  int n_ = 0;
  std::shared_ptr<const ParenTree> left_;
  std::shared_ptr<const ParenTree> right_;
};

ParenTree parenthesize(const Word& w);

}  // namespace magnus
