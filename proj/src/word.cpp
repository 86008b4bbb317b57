#include "relcurr/word.hpp"

#include <algorithm>

namespace relcurr {

char letter_to_char(Letter l) {
  if (l > 0) return static_cast<char>('a' + l - 1);
  return static_cast<char>('A' - l - 1);
}

Letter letter_from_char(char c) {
  if (c >= 'a' && c <= 'z') return static_cast<Letter>(c - 'a' + 1);
  if (c >= 'A' && c <= 'Z') return static_cast<Letter>(-(c - 'A' + 1));
  throw std::invalid_argument(std::string("not a letter: '") + c + "'");
}

std::vector<Letter> Alphabet::letters() const {
  std::vector<Letter> out;
  out.reserve(num_letters());
  for (int i = 1; i <= rank; ++i) {
    out.push_back(static_cast<Letter>(i));
    out.push_back(static_cast<Letter>(-i));
  }
  return out;
}

Word Word::reduce(std::span<const Letter> raw) {
  Word w;
  w.ls_.reserve(raw.size());
  for (Letter l : raw) {
    if (l == 0) throw std::invalid_argument("zero letter");
    if (!w.ls_.empty() && w.ls_.back() == inverse(l))
      w.ls_.pop_back();
    else
      w.ls_.push_back(l);
  }
  return w;
}

Word Word::parse(std::string_view s) {
  std::vector<Letter> raw;
  raw.reserve(s.size());
  for (char c : s) raw.push_back(letter_from_char(c));
  return reduce(raw);
}

Word Word::inverse() const {
  Word w;
  w.ls_.reserve(ls_.size());
  for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) w.ls_.push_back(relcurr::inverse(*it));
  return w;
}

Word Word::prefix(std::size_t len) const { return subword(0, len); }

Word Word::suffix(std::size_t len) const { return subword(ls_.size() - len, len); }

Word Word::subword(std::size_t pos, std::size_t len) const {
  Word w;
  w.ls_.assign(ls_.begin() + pos, ls_.begin() + pos + len);
  return w;
}

std::string Word::str() const {
  std::string s;
  s.reserve(ls_.size());
  for (Letter l : ls_) s.push_back(letter_to_char(l));
  return s;
}

std::strong_ordering Word::operator<=>(const Word& o) const {
  if (ls_.size() != o.ls_.size()) return ls_.size() <=> o.ls_.size();
  for (std::size_t i = 0; i < ls_.size(); ++i) {
    int c = letter_code(ls_[i]), d = letter_code(o.ls_[i]);
    if (c != d) return c <=> d;
  }
  return std::strong_ordering::equal;
}

Word concat(const Word& u, const Word& v) {
  Word w = u;
  for (Letter l : v.ls_) {
    if (!w.ls_.empty() && w.ls_.back() == inverse(l))
      w.ls_.pop_back();
    else
      w.ls_.push_back(l);
  }
  return w;
}

Word concat(const Word& u, Letter l) {
  Letter ls[1] = {l};
  return concat(u, Word::reduce(std::span<const Letter>(ls, 1)));
}

std::size_t WordHash::operator()(const Word& w) const {
  std::size_t h = 1469598103934665603ull;
  for (Letter l : w.letters()) {
    h ^= static_cast<std::size_t>(static_cast<unsigned char>(l));
    h *= 1099511628211ull;
  }
  return h;
}

CyclicDecomposition cyclic_reduce(const Word& w) {
  std::size_t i = 0, j = w.size();
  while (j - i >= 2 && w[i] == inverse(w[j - 1])) {
    ++i;
    --j;
  }
  return {w.subword(i, j - i), w.prefix(i)};
}

bool is_cyclically_reduced(const Word& w) {
  return w.empty() || w.front() != inverse(w.back());
}

CyclicWord::CyclicWord(const Word& w) : rep_(least_rotation(w)) {
  if (w.empty()) throw std::invalid_argument("cyclic word must be nonempty");
  if (!is_cyclically_reduced(w)) throw std::invalid_argument("not cyclically reduced: " + w.str());
}

CyclicWord CyclicWord::from_word(const Word& w) {
  auto [core, conj] = cyclic_reduce(w);
  if (core.empty()) throw std::invalid_argument("identity has no cyclic word");
  return CyclicWord(core);
}

Word CyclicWord::least_rotation(const Word& w) {
  if (w.empty()) return w;
  Word best = w;
  Word cur = w;
  for (std::size_t r = 1; r < w.size(); ++r) {
    std::rotate(cur.ls_.begin(), cur.ls_.begin() + 1, cur.ls_.end());
    if (cur < best) best = cur;
  }
  return best;
}

PrimitiveRoot primitive_root(const CyclicWord& g) {
  const Word& w = g.rep();
  std::size_t n = w.size();
  for (std::size_t p = 1; p <= n / 2; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; periodic && i + p < n; ++i)
      if (w[i] != w[i + p]) periodic = false;
    if (periodic) return {CyclicWord(w.prefix(p)), static_cast<int>(n / p)};
  }
  return {g, 1};
}

int occurrences(const Word& u, const CyclicWord& g) {
  if (u.empty()) throw std::invalid_argument("occurrences needs a nonempty word");
  int count = 0;
  std::size_t m = g.size();
  for (std::size_t i = 0; i < m; ++i) {
    bool hit = true;
    for (std::size_t j = 0; hit && j < u.size(); ++j)
      if (u[j] != g.at(i + j)) hit = false;
    if (hit) ++count;
  }
  return count;
}

std::vector<Word> all_reduced_words(const Alphabet& a, int len) {
  std::vector<Word> out;
  if (len == 0) {
    out.emplace_back();
    return out;
  }
  for_each_reduced_word(a, len, [&](const Word& w) {
    if (static_cast<int>(w.size()) == len) out.push_back(w);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace relcurr
