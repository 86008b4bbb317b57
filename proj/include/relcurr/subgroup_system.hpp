#pragma once

#include <memory>
#include <unordered_set>

#include "relcurr/core_graph.hpp"

namespace relcurr {

// The pair (F_n, A) with its derived data: the intersection bound L and the
// separating word set C of length L+2 (words not readable inside any
// translate tree through the origin). Immutable after construction; an empty
// system (A empty) is allowed and reproduces absolute currents.
class SubgroupSystem {
 public:
  SubgroupSystem(const Alphabet& a, std::vector<CoreGraph> graphs);

  const Alphabet& alphabet() const { return alpha_; }
  const std::vector<CoreGraph>& graphs() const { return graphs_; }
  bool empty() const { return graphs_.empty(); }
  int L() const { return L_; }
  int c_length() const { return L_ + 2; }
  const std::vector<Word>& c_words() const { return c_words_; }

  bool in_C(const Word& w) const { return c_set_.count(w) > 0; }

  // Whether w contains an element of C as a subword, i.e. C(gamma_w) lies in
  // the relative double boundary.
  bool in_cyl_C(const Word& w) const;

  bool is_peripheral(const Word& w) const;
  bool is_peripheral(const CyclicWord& g) const;

  // Whether w is readable inside some core (no C-subword, for |w| >= L+2).
  bool readable_in_some_core(const Word& w) const;

  // S_k: length-k words with no C-subword.
  std::vector<Word> stratum(int k) const;
  // S_k^0: the canonical half of S_k under inversion.
  std::vector<Word> stratum_half(int k) const;

  std::string hash() const { return hash_; }

 private:
  Alphabet alpha_;
  std::vector<CoreGraph> graphs_;
  int L_ = 0;
  std::vector<Word> c_words_;
  std::unordered_set<Word, WordHash> c_set_;
  std::string hash_;
};

}  // namespace relcurr
