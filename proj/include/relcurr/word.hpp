#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace relcurr {

// Letters of a symmetric free basis: +i is the i-th generator (printed
// 'a'..'z'), -i its inverse (printed 'A'..'Z'). Rank at most 26.
using Letter = std::int8_t;

constexpr Letter inverse(Letter l) { return static_cast<Letter>(-l); }

// Total order on letters: a < A < b < B < ...
constexpr int letter_code(Letter l) {
  return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1;
}

char letter_to_char(Letter l);
Letter letter_from_char(char c);  // throws std::invalid_argument on junk

struct Alphabet {
  int rank = 0;

  Alphabet() = default;
  explicit Alphabet(int n) : rank(n) {
    if (n < 1 || n > 26) throw std::invalid_argument("rank must be in [1, 26]");
  }

  int num_letters() const { return 2 * rank; }
  bool valid(Letter l) const { return l != 0 && l >= -rank && l <= rank; }

  // All 2n letters in code order.
  std::vector<Letter> letters() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

// A reduced word over the symmetric basis; the empty word is the identity.
class Word {
 public:
  Word() = default;

  // Free reduction of an arbitrary letter sequence.
  static Word reduce(std::span<const Letter> raw);
  static Word reduce(std::initializer_list<Letter> raw) {
    return reduce(std::span<const Letter>(raw.begin(), raw.size()));
  }

  // Parses "abA" style strings; reduces. Throws on characters outside a-zA-Z.
  static Word parse(std::string_view s);

  std::size_t size() const { return ls_.size(); }
  bool empty() const { return ls_.empty(); }
  Letter operator[](std::size_t i) const { return ls_[i]; }
  Letter front() const { return ls_.front(); }
  Letter back() const { return ls_.back(); }
  const std::vector<Letter>& letters() const { return ls_; }

  Word inverse() const;
  Word prefix(std::size_t len) const;
  Word suffix(std::size_t len) const;
  Word subword(std::size_t pos, std::size_t len) const;

  std::string str() const;  // "" prints as "1" in JSON helpers, not here

  // Length-first, then letter-code lexicographic.
  std::strong_ordering operator<=>(const Word& o) const;
  bool operator==(const Word& o) const { return ls_ == o.ls_; }

 private:
  std::vector<Letter> ls_;
  friend Word concat(const Word&, const Word&);
  friend class CyclicWord;
};

// Reduced product u·v.
Word concat(const Word& u, const Word& v);
Word concat(const Word& u, Letter l);

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

// w = conjugator · core · conjugator^{-1} with core cyclically reduced
// (empty core means the identity, with empty conjugator).
struct CyclicDecomposition {
  Word core;
  Word conjugator;
};
CyclicDecomposition cyclic_reduce(const Word& w);

bool is_cyclically_reduced(const Word& w);

// A nonempty cyclically reduced word up to rotation; stored as the least
// rotation of its representative.
class CyclicWord {
 public:
  explicit CyclicWord(const Word& w);  // requires w cyclically reduced, nonempty

  // Cyclically reduces first; throws if w reduces to the identity.
  static CyclicWord from_word(const Word& w);

  std::size_t size() const { return rep_.size(); }
  const Word& rep() const { return rep_; }
  Letter at(std::size_t i) const { return rep_[i % rep_.size()]; }

  CyclicWord inverse() const { return CyclicWord(least_rotation(rep_.inverse())); }

  std::strong_ordering operator<=>(const CyclicWord& o) const { return rep_ <=> o.rep_; }
  bool operator==(const CyclicWord& o) const { return rep_ == o.rep_; }

  std::string str() const { return rep_.str(); }

 private:
  static Word least_rotation(const Word& w);
  Word rep_;
};

struct CyclicWordHash {
  std::size_t operator()(const CyclicWord& g) const { return WordHash{}(g.rep()); }
};

// g = root^exponent with root root-free.
struct PrimitiveRoot {
  CyclicWord root;
  int exponent;
};
PrimitiveRoot primitive_root(const CyclicWord& g);

// Number of starting positions i in [0, |g|) at which u is read in the
// bi-infinite periodic word g^infinity. Requires u nonempty.
int occurrences(const Word& u, const CyclicWord& g);

// All reduced words of exactly length len over rank n, in word order.
std::vector<Word> all_reduced_words(const Alphabet& a, int len);

// Visits reduced words of length 1..maxlen in word order.
template <typename F>
void for_each_reduced_word(const Alphabet& a, int maxlen, F&& f) {
  std::vector<Letter> stack;
  auto rec = [&](auto&& self) -> void {
    if (!stack.empty()) f(Word::reduce(std::span<const Letter>(stack)));
    if (static_cast<int>(stack.size()) == maxlen) return;
    for (Letter l : a.letters()) {
      if (!stack.empty() && l == inverse(stack.back())) continue;
      stack.push_back(l);
      self(self);
      stack.pop_back();
    }
  };
  rec(rec);
}

}  // namespace relcurr
