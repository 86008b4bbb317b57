#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "relcurr/word.hpp"

namespace relcurr {

// Folded, based subgroup graph: the quotient T_A/A of the minimal subtree,
// possibly with a spur path attached so the basepoint represents the
// caller's chosen conjugacy representative. Immutable after construction.
class CoreGraph {
 public:
  static CoreGraph from_generators(const Alphabet& a, const std::vector<Word>& gens);

  const Alphabet& alphabet() const { return alpha_; }
  int num_vertices() const { return static_cast<int>(out_.size()); }
  int basepoint() const { return base_; }
  int core_basepoint() const { return core_base_; }
  const Word& spur() const { return spur_; }
  bool is_core(int v) const { return core_[v]; }
  const std::vector<int>& core_vertices() const { return core_vertices_; }
  int rank() const { return rank_; }

  // Target of the l-labeled edge leaving v, or -1.
  int step(int v, Letter l) const { return out_[v][letter_code(l)]; }
  int degree(int v) const;

  std::optional<int> trace(int v, const Word& w) const;
  // Trace that never leaves the core; this is the finite test for a path
  // lying inside a translate of the minimal subtree.
  std::optional<int> trace_core(int v, const Word& w) const;
  bool readable_from(int v, const Word& w) const { return trace_core(v, w).has_value(); }
  bool contains(const Word& w) const { return trace(base_, w) == base_; }
  bool is_conjugate_into(const CyclicWord& g) const;

  // Whether the subgroup is all of F_n.
  bool is_full_group() const;

  // A free basis of the subgroup (loops at the basepoint).
  std::vector<Word> basis() const;

  // Conjugacy-class comparison: label-preserving isomorphism of cores.
  bool same_class(const CoreGraph& o) const { return core_canonical_ == o.core_canonical_; }
  const std::vector<int>& core_canonical() const { return core_canonical_; }

  bool operator==(const CoreGraph& o) const {
    return alpha_ == o.alpha_ && out_ == o.out_ && base_ == o.base_;
  }

 private:
  CoreGraph() = default;
  void finish();  // prune, locate core, canonicalize

  Alphabet alpha_;
  std::vector<std::vector<int>> out_;  // out_[v][letter_code] = target or -1
  int base_ = 0;
  int core_base_ = 0;
  Word spur_;
  std::vector<bool> core_;
  std::vector<int> core_vertices_;
  int rank_ = 0;
  std::vector<int> core_canonical_;
};

// A connected component of the fiber product of two core graphs.
// Vertices are pairs of core vertices; edges are stored once per
// geometric edge, in the positive-letter direction.
struct FiberComponent {
  std::vector<std::pair<int, int>> vertices;
  std::vector<std::tuple<int, Letter, int>> edges;  // (from index, letter>0, to index)
  bool is_diagonal = false;

  bool acyclic() const { return edges.size() + 1 == vertices.size(); }
  int diameter() const;     // longest path in edges; requires acyclic
  Word witness_cycle() const;  // requires !acyclic; a nontrivial intersection element
};

std::vector<FiberComponent> fiber_product(const CoreGraph& g1, const CoreGraph& g2);

struct MalnormalityWitness {
  Word element;  // cyclically reduced nontrivial element of an offending intersection
  int i = 0, j = 0;
};

class MalnormalityError : public std::runtime_error {
 public:
  explicit MalnormalityError(MalnormalityWitness w)
      : std::runtime_error("malnormality violated; witness " + w.element.str()),
        witness(std::move(w)) {}
  MalnormalityWitness witness;
};

// ok (nullopt) iff every off-diagonal self component and every cross
// component of the pairwise fiber products is a finite tree.
std::optional<MalnormalityWitness> check_malnormal_system(const std::vector<CoreGraph>& graphs);

// Max diameter over those components; 0 when none has an edge.
// Throws MalnormalityError if the system is not malnormal.
int compute_L(const std::vector<CoreGraph>& graphs);

struct RootClosedWitness {
  Word root;
  int exponent;
};

// Bounded search for g, k with g^k in the subgroup but g outside it.
std::optional<RootClosedWitness> is_root_closed_bounded(const CoreGraph& g, int max_len,
                                                        int max_exp);

}  // namespace relcurr
