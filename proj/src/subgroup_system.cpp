#include "relcurr/subgroup_system.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace relcurr {

SubgroupSystem::SubgroupSystem(const Alphabet& a, std::vector<CoreGraph> graphs)
    : alpha_(a), graphs_(std::move(graphs)) {
  for (const auto& g : graphs_)
    if (!(g.alphabet() == alpha_))
      throw std::invalid_argument("subgroup graph over a different alphabet");
  if (auto w = check_malnormal_system(graphs_)) throw MalnormalityError(*w);
  L_ = compute_L(graphs_);

  for (const Word& w : all_reduced_words(alpha_, L_ + 2))
    if (!readable_in_some_core(w)) c_words_.push_back(w);
  c_set_.insert(c_words_.begin(), c_words_.end());
  if (c_words_.empty())
    throw std::logic_error("separating set C is empty; this cannot happen for proper subgroups");

  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](long long x) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  mix(alpha_.rank);
  mix(static_cast<long long>(graphs_.size()));
  for (const auto& g : graphs_)
    for (int x : g.core_canonical()) mix(x);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016zx", h);
  hash_ = buf;
}

bool SubgroupSystem::in_cyl_C(const Word& w) const {
  int clen = c_length();
  if (static_cast<int>(w.size()) < clen) return false;
  for (std::size_t i = 0; i + clen <= w.size(); ++i)
    if (c_set_.count(w.subword(i, clen))) return true;
  return false;
}

bool SubgroupSystem::readable_in_some_core(const Word& w) const {
  for (const auto& g : graphs_)
    for (int v : g.core_vertices())
      if (g.trace_core(v, w)) return true;
  return false;
}

bool SubgroupSystem::is_peripheral(const Word& w) const {
  auto dec = cyclic_reduce(w);
  if (dec.core.empty()) return true;  // trivial elements count as peripheral
  return is_peripheral(CyclicWord(dec.core));
}

bool SubgroupSystem::is_peripheral(const CyclicWord& g) const {
  for (const auto& gr : graphs_)
    if (gr.is_conjugate_into(g)) return true;
  return false;
}

std::vector<Word> SubgroupSystem::stratum(int k) const {
  if (k < 0) throw std::invalid_argument("stratum index must be nonnegative");
  if (k == 0) return {Word()};
  if (k < c_length()) return all_reduced_words(alpha_, k);

  // For k >= L+2 the stratum is exactly the set of words readable inside
  // some core; enumerate reduced paths instead of filtering all words.
  std::set<Word> out;
  std::vector<Letter> stack;
  for (const auto& g : graphs_) {
    auto dfs = [&](auto&& self, int v) -> void {
      if (static_cast<int>(stack.size()) == k) {
        out.insert(Word::reduce(std::span<const Letter>(stack)));
        return;
      }
      for (Letter l : alpha_.letters()) {
        if (!stack.empty() && l == inverse(stack.back())) continue;
        int t = g.step(v, l);
        if (t < 0 || !g.is_core(t)) continue;
        stack.push_back(l);
        self(self, t);
        stack.pop_back();
      }
    };
    for (int v : g.core_vertices()) dfs(dfs, v);
  }
  return {out.begin(), out.end()};
}

std::vector<Word> SubgroupSystem::stratum_half(int k) const {
  if (k < 1) throw std::invalid_argument("stratum half needs k >= 1");
  std::vector<Word> out;
  for (const Word& w : stratum(k))
    if (w < w.inverse()) out.push_back(w);
  return out;
}

}  // namespace relcurr
