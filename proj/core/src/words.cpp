#include "magnus/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace magnus {

int Word::check_alphabet(int n) {
  if (n < 1 || n > kMaxAlphabet) {
    throw PreconditionError("alphabet size " + std::to_string(n) + " out of range");
  }
  return n;
}

Word::Word(int alphabet, std::initializer_list<int> letters) : n_(check_alphabet(alphabet)) {
  for (int a : letters) push_back(a);
}

Word::Word(int alphabet, const std::vector<int>& letters) : n_(check_alphabet(alphabet)) {
  for (int a : letters) push_back(a);
}

void Word::push_back(int letter) {
  if (letter < 1 || letter > n_) {
    throw PreconditionError("letter " + std::to_string(letter) + " outside alphabet of size " +
                            std::to_string(n_));
  }
  letters_.push_back(static_cast<char>(letter));
}

Word Word::parse(const std::string& text, int alphabet) {
  Word w(alphabet);
  const bool numeric = std::any_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (numeric) {
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw ParseError("bad letter '" + tok + "'");
      }
      if (used != tok.size() || v < 1 || v > alphabet) throw ParseError("bad letter '" + tok + "'");
      w.push_back(v);
    }
    return w;
  }
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c < 'a' || c > 'z') throw ParseError(std::string("bad letter '") + c + "'");
    const int v = c - 'a' + 1;
    if (v > alphabet) throw ParseError(std::string("letter '") + c + "' outside the alphabet");
    w.push_back(v);
  }
  return w;
}

std::vector<int> Word::letters() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i]);
  return out;
}

Word Word::prefix(std::size_t len) const {
  Word w = *this;
  w.letters_.resize(std::min(len, size()));
  return w;
}

Word Word::suffix_from(std::size_t pos) const {
  Word w(n_);
  if (pos < size()) w.letters_ = letters_.substr(pos);
  return w;
}

Word Word::concat(const Word& other) const {
  Word w = *this;
  if (w.n_ == 0) w.n_ = other.n_;
  w.letters_ += other.letters_;
  return w;
}

std::string Word::to_string() const {
  if (empty()) return "1";
  std::string out;
  if (n_ <= 26) {
    for (char c : letters_) out.push_back(static_cast<char>('a' + c - 1));
    return out;
  }
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out.push_back('.');
    out += std::to_string((*this)[i]);
  }
  return out;
}

namespace {

void check_same_alphabet(const Word& u, const Word& v) {
  if (u.alphabet() != v.alphabet()) {
    throw PreconditionError("words over alphabets of size " + std::to_string(u.alphabet()) + " and " +
                            std::to_string(v.alphabet()));
  }
}

std::strong_ordering lex_raw(const Word& u, const Word& v) {
  // std::string comparison is lexicographic with the shorter prefix first
  const int c = u.key().compare(v.key());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering lex_compare(const Word& u, const Word& v) {
  check_same_alphabet(u, v);
  return lex_raw(u, v);
}

std::strong_ordering graded_compare(const Word& u, const Word& v) {
  check_same_alphabet(u, v);
  if (u.size() != v.size()) return u.size() <=> v.size();
  return lex_raw(u, v);
}

bool is_lyndon(const Word& w) {
  if (w.empty()) throw PreconditionError("the empty word is not a Lyndon candidate");
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w.key().compare(i, std::string::npos, w.key()) <= 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// LyndonOrder

LyndonOrder LyndonOrder::graded() {
  return LyndonOrder(Kind::GradedLex, [](const Word& a, const Word& b) { return GradedLess{}(a, b); }, "graded");
}

LyndonOrder LyndonOrder::lex() {
  return LyndonOrder(Kind::PureLex, [](const Word& a, const Word& b) { return a.key() < b.key(); }, "lex");
}

LyndonOrder LyndonOrder::from_ranking(std::vector<Word> ranking) {
  auto rank = std::make_shared<std::unordered_map<std::string, std::size_t>>();
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    if (!rank->emplace(ranking[i].key(), i).second) {
      throw PreconditionError("word " + ranking[i].to_string() + " ranked twice");
    }
  }
  LyndonOrder order(
      Kind::Custom,
      [rank](const Word& a, const Word& b) {
        auto ia = rank->find(a.key());
        auto ib = rank->find(b.key());
        if (ia != rank->end() && ib != rank->end()) return ia->second < ib->second;
        if (ia != rank->end()) return true;
        if (ib != rank->end()) return false;
        return GradedLess{}(a, b);
      },
      "custom");
  order.ranking_ = std::move(ranking);
  return order;
}

LyndonOrder LyndonOrder::custom(Less less, std::string name) {
  if (!less) throw PreconditionError("custom Lyndon order needs a comparator");
  return LyndonOrder(Kind::Custom, std::move(less), std::move(name));
}

std::string LyndonOrder::name() const { return name_; }

bool LyndonOrder::less(const Word& a, const Word& b) const { return less_(a, b); }

void LyndonOrder::sort(std::vector<Word>& words) const {
  std::stable_sort(words.begin(), words.end(), [this](const Word& a, const Word& b) { return less_(a, b); });
}

// ---------------------------------------------------------------------------
// enumeration

std::vector<Word> lyndon_words(int n, int max_len, const LyndonOrder& order) {
  if (n < 1) throw PreconditionError("alphabet size must be positive");
  if (max_len < 1) throw PreconditionError("maximal length must be positive");
  // Duval's successor generator: emits Lyndon words of length <= max_len in
  // lexicographic order, letters held 0-based.
  std::vector<Word> out;
  std::vector<int> w{0};
  while (!w.empty()) {
    Word word(n);
    for (int a : w) word.push_back(a + 1);
    out.push_back(std::move(word));
    const std::size_t period = w.size();
    while (w.size() < static_cast<std::size_t>(max_len)) w.push_back(w[w.size() - period]);
    while (!w.empty() && w.back() == n - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  order.sort(out);
  return out;
}

std::vector<Word> lyndon_words_of_length(int n, int len) {
  std::vector<Word> all = lyndon_words(n, len, LyndonOrder::lex());
  std::vector<Word> out;
  for (auto& w : all) {
    if (static_cast<int>(w.size()) == len) out.push_back(std::move(w));
  }
  return out;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2) throw PreconditionError("standard factorization needs a word of length >= 2");
  if (!is_lyndon(w)) throw PreconditionError("word " + w.to_string() + " is not Lyndon");
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word s = w.suffix_from(i);
    if (is_lyndon(s)) return {w.prefix(i), std::move(s)};
  }
  // unreachable: the last letter is always a Lyndon suffix
  throw InternalInconsistency("no Lyndon suffix found");
}

// ---------------------------------------------------------------------------
// ParenTree

ParenTree ParenTree::leaf(int letter, int alphabet) {
  ParenTree t;
  t.letter_ = letter;
  t.n_ = alphabet;
  return t;
}

ParenTree ParenTree::node(ParenTree left, ParenTree right) {
  ParenTree t;
  t.n_ = left.n_;
  t.left_ = std::make_shared<const ParenTree>(std::move(left));
  t.right_ = std::make_shared<const ParenTree>(std::move(right));
  return t;
}

Word ParenTree::leaves() const {
  if (is_leaf()) return Word(n_, {letter_});
  return left_->leaves().concat(right_->leaves());
}

std::string ParenTree::to_string(const std::string& op) const {
  if (is_leaf()) {
    if (n_ <= 26) return std::string(1, static_cast<char>('a' + letter_ - 1));
    return std::to_string(letter_);
  }
  return "(" + left_->to_string(op) + op + right_->to_string(op) + ")";
}

ParenTree parenthesize(const Word& w) {
  if (w.empty() || !is_lyndon(w)) throw PreconditionError("word " + w.to_string() + " is not Lyndon");
  if (w.size() == 1) return ParenTree::leaf(w[0], w.alphabet());
  auto [v, s] = standard_factorization(w);
  return ParenTree::node(parenthesize(v), parenthesize(s));
}

}  // namespace magnus
