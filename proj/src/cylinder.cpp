#include "relcurr/cylinder.hpp"

#include <algorithm>
#include <set>

namespace relcurr {

namespace {

struct PathOrder {
  bool operator()(const PositionedPath& a, const PositionedPath& b) const {
    if (auto c = a.origin <=> b.origin; c != 0) return c < 0;
    return a.label < b.label;
  }
};

}  // namespace

PositionedPath canonical_path(const PositionedPath& p) {
  PositionedPath r = p.reversed();
  return PathOrder{}(r, p) ? r : p;
}

int tree_distance(const Word& x, const Word& y) {
  std::size_t cp = 0;
  while (cp < x.size() && cp < y.size() && x[cp] == y[cp]) ++cp;
  return static_cast<int>((x.size() - cp) + (y.size() - cp));
}

bool on_geodesic(const Word& x, const Word& z, const Word& y) {
  return tree_distance(x, z) + tree_distance(z, y) == tree_distance(x, y);
}

std::vector<Word> geodesic_vertices(const Word& x, const Word& y) {
  std::size_t cp = 0;
  while (cp < x.size() && cp < y.size() && x[cp] == y[cp]) ++cp;
  std::vector<Word> out;
  for (std::size_t len = x.size(); len > cp; --len) out.push_back(x.prefix(len));
  out.push_back(x.prefix(cp));
  for (std::size_t len = cp + 1; len <= y.size(); ++len) out.push_back(y.prefix(len));
  return out;
}

bool path_contains(const PositionedPath& big, const PositionedPath& small) {
  return on_geodesic(big.origin, small.origin, big.end()) &&
         on_geodesic(big.origin, small.end(), big.end());
}

bool cylinders_intersect(const PositionedPath& p, const PositionedPath& q) {
  const Word pts[4] = {p.origin, p.end(), q.origin, q.end()};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      bool line = true;
      for (int k = 0; k < 4 && line; ++k)
        if (!on_geodesic(pts[i], pts[k], pts[j])) line = false;
      if (line) return true;
    }
  return false;
}

namespace {

// The claim inside the disjoint-decomposition proof: replace two paths with
// intersecting cylinders by extensions reaching one step past the spanned
// spine. Requires: cylinders intersect, neither path contains the other.
std::vector<PositionedPath> refine_pair(const Alphabet& alpha, const PositionedPath& p,
                                        const PositionedPath& q) {
  const Word pe[2] = {p.origin, p.end()};
  const Word qe[2] = {q.origin, q.end()};
  int best = -1, bi = 0, bj = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      int d = tree_distance(pe[i], qe[j]);
      if (d > best) {
        best = d;
        bi = i;
        bj = j;
      }
    }
  PositionedPath pr = (bi == 0) ? p : p.reversed();  // runs A -> B
  PositionedPath qr = (bj == 1) ? q : q.reversed();  // runs C -> D
  Word A = pr.origin, B = pr.end(), C = qr.origin, D = qr.end();

  std::vector<Word> line = geodesic_vertices(A, D);
  auto pos_of = [&](const Word& v) {
    for (std::size_t i = 0; i < line.size(); ++i)
      if (line[i] == v) return static_cast<int>(i);
    throw std::logic_error("refine_pair: endpoint off the spanned line");
  };
  int posB = pos_of(B), posC = pos_of(C);
  int posD = static_cast<int>(line.size()) - 1;

  std::vector<PositionedPath> out;
  auto off_steps = [&](const Word& from, int m) {
    Word base_label = concat(from.inverse(), line[m]);
    for (Letter l : alpha.letters()) {
      Word t = concat(line[m], l);
      if (m > 0 && t == line[m - 1]) continue;
      if (m + 1 <= posD && t == line[m + 1]) continue;
      out.push_back({from, concat(base_label, l)});
    }
  };
  for (int m = posB; m <= posD - 1; ++m) off_steps(A, m);
  out.push_back({A, concat(A.inverse(), D)});
  for (int m = posC; m >= 1; --m) off_steps(D, m);
  out.push_back({D, concat(D.inverse(), A)});
  return out;
}

}  // namespace

std::vector<PositionedPath> decompose_compact_open(const SubgroupSystem& sys,
                                                   std::vector<PositionedPath> paths) {
  std::set<PositionedPath, PathOrder> fam;
  for (const auto& p : paths) {
    if (p.label.empty()) throw std::invalid_argument("positioned path label must be nonempty");
    if (!sys.in_cyl_C(p.label))
      throw std::invalid_argument("path label outside Cyl(C): " + p.label.str());
    fam.insert(canonical_path(p));
  }

  for (long guard = 0;; ++guard) {
    if (guard > 200000) throw std::logic_error("decomposition failed to terminate");

    // Absorb nested cylinders: drop the longer path of a nested pair.
    bool changed = false;
    for (auto it = fam.begin(); it != fam.end() && !changed; ++it)
      for (auto jt = fam.begin(); jt != fam.end() && !changed; ++jt) {
        if (it == jt) continue;
        if (path_contains(*it, *jt)) {  // C(*it) inside C(*jt)
          fam.erase(it);
          changed = true;
        }
      }
    if (changed) continue;

    // Refine the first properly intersecting pair.
    const PositionedPath* pp = nullptr;
    const PositionedPath* qq = nullptr;
    for (auto it = fam.begin(); it != fam.end() && !pp; ++it)
      for (auto jt = std::next(it); jt != fam.end() && !pp; ++jt)
        if (cylinders_intersect(*it, *jt)) {
          pp = &*it;
          qq = &*jt;
        }
    if (!pp) break;
    PositionedPath a = *pp, b = *qq;
    auto pieces = refine_pair(sys.alphabet(), a, b);
    fam.erase(a);
    fam.erase(b);
    for (const auto& piece : pieces) fam.insert(canonical_path(piece));
  }
  return {fam.begin(), fam.end()};
}

}  // namespace relcurr
