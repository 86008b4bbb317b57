#pragma once

#include "relcurr/word.hpp"

namespace relcurr {

// An automorphism of F_n given by images of the positive letters.
// Invertibility is certified at construction: the caller supplies the
// inverse images and both compositions are checked to fix every letter.
class Automorphism {
 public:
  Automorphism(const Alphabet& a, std::vector<Word> images, std::vector<Word> inverse_images);

  static Automorphism identity(const Alphabet& a);

  // Parses {"a": "ab", ...}-style lists given as words indexed by generator.
  const Alphabet& alphabet() const { return alpha_; }
  const Word& image(int gen) const { return img_[gen - 1]; }

  Word apply(const Word& w) const;
  Word apply_inverse(const Word& w) const;
  CyclicWord apply(const CyclicWord& g) const;

  Automorphism inverse() const { return Automorphism(alpha_, inv_, img_, nullptr); }

  Automorphism compose(const Automorphism& inner) const;  // this ∘ inner

 private:
  Automorphism(const Alphabet& a, std::vector<Word> images, std::vector<Word> inverse_images,
               std::nullptr_t);  // unchecked

  static Word substitute(const std::vector<Word>& images, const Word& w);

  Alphabet alpha_;
  std::vector<Word> img_;
  std::vector<Word> inv_;
};

}  // namespace relcurr
