#pragma once

#include "relcurr/subgroup_system.hpp"

namespace relcurr {

// A finite geodesic edge path in the Cayley tree: the path spelling `label`
// from the vertex `origin`. Label is nonempty and reduced.
struct PositionedPath {
  Word origin;
  Word label;

  Word end() const { return concat(origin, label); }
  std::size_t length() const { return label.size(); }

  PositionedPath reversed() const { return {end(), label.inverse()}; }

  bool operator==(const PositionedPath& o) const {
    return origin == o.origin && label == o.label;
  }
};

// Unoriented cylinder representative: the lesser of the two orientations.
PositionedPath canonical_path(const PositionedPath& p);

int tree_distance(const Word& x, const Word& y);
bool on_geodesic(const Word& x, const Word& z, const Word& y);  // z on [x, y]
std::vector<Word> geodesic_vertices(const Word& x, const Word& y);

// Whether small is a subpath of big (edge containment of geodesics).
bool path_contains(const PositionedPath& big, const PositionedPath& small);

// C(p) and C(q) meet iff both paths embed in one reduced line, i.e. the
// four endpoints span a path in the tree.
bool cylinders_intersect(const PositionedPath& p, const PositionedPath& q);

// Lemma-3.1-style refinement: replaces the family by one with pairwise
// disjoint cylinders and the same union. Every input label must contain a
// C-subword; outputs extend inputs so labels keep that property.
std::vector<PositionedPath> decompose_compact_open(const SubgroupSystem& sys,
                                                   std::vector<PositionedPath> paths);

}  // namespace relcurr
