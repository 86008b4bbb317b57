#include "relcurr/automorphism.hpp"

namespace relcurr {

Automorphism::Automorphism(const Alphabet& a, std::vector<Word> images,
                           std::vector<Word> inverse_images)
    : alpha_(a), img_(std::move(images)), inv_(std::move(inverse_images)) {
  if (static_cast<int>(img_.size()) != a.rank || static_cast<int>(inv_.size()) != a.rank)
    throw std::invalid_argument("need one image per generator");
  for (int i = 1; i <= a.rank; ++i) {
    Letter l[1] = {static_cast<Letter>(i)};
    Word gen = Word::reduce(std::span<const Letter>(l, 1));
    if (substitute(img_, substitute(inv_, gen)) != gen ||
        substitute(inv_, substitute(img_, gen)) != gen)
      throw std::invalid_argument("inverse images do not certify invertibility at " + gen.str());
  }
}

Automorphism::Automorphism(const Alphabet& a, std::vector<Word> images,
                           std::vector<Word> inverse_images, std::nullptr_t)
    : alpha_(a), img_(std::move(images)), inv_(std::move(inverse_images)) {}

Automorphism Automorphism::identity(const Alphabet& a) {
  std::vector<Word> ids;
  for (int i = 1; i <= a.rank; ++i) {
    Letter l[1] = {static_cast<Letter>(i)};
    ids.push_back(Word::reduce(std::span<const Letter>(l, 1)));
  }
  return Automorphism(a, ids, ids);
}

Word Automorphism::substitute(const std::vector<Word>& images, const Word& w) {
  Word out;
  for (Letter l : w.letters()) {
    const Word& im = images[std::abs(l) - 1];
    out = concat(out, l > 0 ? im : im.inverse());
  }
  return out;
}

Word Automorphism::apply(const Word& w) const { return substitute(img_, w); }

Word Automorphism::apply_inverse(const Word& w) const { return substitute(inv_, w); }

CyclicWord Automorphism::apply(const CyclicWord& g) const {
  return CyclicWord::from_word(apply(g.rep()));
}

Automorphism Automorphism::compose(const Automorphism& inner) const {
  std::vector<Word> im, iv;
  for (int i = 1; i <= alpha_.rank; ++i) {
    im.push_back(apply(inner.image(i)));
    iv.push_back(inner.apply_inverse(inv_[i - 1]));
  }
  return Automorphism(alpha_, std::move(im), std::move(iv));
}

}  // namespace relcurr
