#include "relcurr/core_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace relcurr {

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

Letter letter_of_code(int c) {
  return static_cast<Letter>(c % 2 == 0 ? c / 2 + 1 : -(c / 2 + 1));
}

}  // namespace

CoreGraph CoreGraph::from_generators(const Alphabet& a, const std::vector<Word>& gens) {
  std::vector<Word> use;
  for (const Word& g : gens) {
    for (Letter l : g.letters())
      if (!a.valid(l)) throw std::invalid_argument("generator letter outside alphabet");
    if (!g.empty()) use.push_back(g);
  }
  if (use.empty()) throw std::invalid_argument("trivial subgroup not allowed");

  // Wedge of generator loops at vertex 0, edges kept in positive direction.
  std::vector<std::tuple<int, Letter, int>> edges;
  int next = 1;
  for (const Word& g : use) {
    int cur = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      int to = (i + 1 == g.size()) ? 0 : next++;
      Letter l = g[i];
      if (l > 0)
        edges.emplace_back(cur, l, to);
      else
        edges.emplace_back(to, inverse(l), cur);
      cur = to;
    }
  }

  // Stallings folding: identify targets of equally labeled edges.
  UnionFind uf(next);
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<int, int>, int> seen;  // (vertex, signed letter) -> target
    for (auto& [u, l, v] : edges) {
      int ru = uf.find(u), rv = uf.find(v);
      auto [fit, fnew] = seen.try_emplace({ru, static_cast<int>(l)}, rv);
      if (!fnew && fit->second != rv) {
        uf.unite(fit->second, rv);
        changed = true;
        break;
      }
      auto [bit, bnew] = seen.try_emplace({rv, -static_cast<int>(l)}, ru);
      if (!bnew && bit->second != ru) {
        uf.unite(bit->second, ru);
        changed = true;
        break;
      }
    }
  }

  std::vector<int> id(next, -1);
  int nv = 0;
  for (int v = 0; v < next; ++v)
    if (uf.find(v) == v) id[v] = nv++;
  CoreGraph g;
  g.alpha_ = a;
  g.out_.assign(nv, std::vector<int>(a.num_letters(), -1));
  g.base_ = id[uf.find(0)];
  for (auto& [u, l, v] : edges) {
    int ru = id[uf.find(u)], rv = id[uf.find(v)];
    g.out_[ru][letter_code(l)] = rv;
    g.out_[rv][letter_code(inverse(l))] = ru;
  }
  g.finish();
  return g;
}

int CoreGraph::degree(int v) const {
  int d = 0;
  for (int t : out_[v])
    if (t >= 0) ++d;
  return d;
}

void CoreGraph::finish() {
  int n = num_vertices();

  // Prune dead branches; the basepoint is kept even when it hangs by a spur.
  std::vector<bool> alive(n, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (!alive[v] || v == base_) continue;
      int deg = 0;
      for (int c = 0; c < alpha_.num_letters(); ++c) {
        int t = out_[v][c];
        if (t >= 0 && alive[t]) ++deg;
      }
      if (deg <= 1) {
        alive[v] = false;
        changed = true;
      }
    }
  }

  // Canonical renumbering: BFS from the basepoint in letter order. Folded
  // graphs traverse deterministically, so equal subgroups get equal tables.
  std::vector<int> order;
  std::vector<int> idx(n, -1);
  std::deque<int> q{base_};
  idx[base_] = 0;
  order.push_back(base_);
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int c = 0; c < alpha_.num_letters(); ++c) {
      int t = out_[v][c];
      if (t >= 0 && alive[t] && idx[t] < 0) {
        idx[t] = static_cast<int>(order.size());
        order.push_back(t);
        q.push_back(t);
      }
    }
  }
  std::vector<std::vector<int>> nout(order.size(), std::vector<int>(alpha_.num_letters(), -1));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int c = 0; c < alpha_.num_letters(); ++c) {
      int t = out_[order[i]][c];
      nout[i][c] = (t >= 0 && alive[t]) ? idx[t] : -1;
    }
  out_ = std::move(nout);
  base_ = 0;
  n = num_vertices();

  // Core = strip degree-1 vertices, basepoint included; what falls off is
  // the spur chain between the basepoint and the core.
  std::vector<bool> in_core(n, true);
  changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (!in_core[v]) continue;
      int deg = 0;
      for (int c = 0; c < alpha_.num_letters(); ++c) {
        int t = out_[v][c];
        if (t >= 0 && in_core[t]) ++deg;
      }
      if (deg <= 1) {
        in_core[v] = false;
        changed = true;
      }
    }
  }
  core_ = in_core;
  core_vertices_.clear();
  for (int v = 0; v < n; ++v)
    if (core_[v]) core_vertices_.push_back(v);
  if (core_vertices_.empty()) throw std::invalid_argument("trivial subgroup not allowed");

  // Spur walk: each chain vertex has exactly one way forward.
  std::vector<Letter> spur;
  int v = base_;
  int prev = -1;
  while (!core_[v]) {
    for (int c = 0; c < alpha_.num_letters(); ++c) {
      int t = out_[v][c];
      if (t >= 0 && t != prev) {
        spur.push_back(letter_of_code(c));
        prev = v;
        v = t;
        break;
      }
    }
  }
  core_base_ = v;
  spur_ = Word::reduce(std::span<const Letter>(spur));

  int core_directed = 0;
  for (int u : core_vertices_)
    for (int c = 0; c < alpha_.num_letters(); ++c) {
      int t = out_[u][c];
      if (t >= 0 && core_[t]) ++core_directed;
    }
  rank_ = core_directed / 2 - static_cast<int>(core_vertices_.size()) + 1;

  // Canonical core form: min over anchors of the BFS serialization.
  core_canonical_.clear();
  bool first = true;
  for (int anchor : core_vertices_) {
    std::vector<int> cidx(n, -1);
    std::vector<int> corder;
    std::deque<int> cq{anchor};
    cidx[anchor] = 0;
    corder.push_back(anchor);
    while (!cq.empty()) {
      int u = cq.front();
      cq.pop_front();
      for (int c = 0; c < alpha_.num_letters(); ++c) {
        int t = out_[u][c];
        if (t >= 0 && core_[t] && cidx[t] < 0) {
          cidx[t] = static_cast<int>(corder.size());
          corder.push_back(t);
          cq.push_back(t);
        }
      }
    }
    std::vector<int> form;
    for (int u : corder)
      for (int c = 0; c < alpha_.num_letters(); ++c) {
        int t = out_[u][c];
        form.push_back((t >= 0 && core_[t]) ? cidx[t] : -1);
      }
    if (first || form < core_canonical_) {
      core_canonical_ = std::move(form);
      first = false;
    }
  }
}

std::optional<int> CoreGraph::trace(int v, const Word& w) const {
  int cur = v;
  for (Letter l : w.letters()) {
    cur = step(cur, l);
    if (cur < 0) return std::nullopt;
  }
  return cur;
}

std::optional<int> CoreGraph::trace_core(int v, const Word& w) const {
  if (!core_[v]) return std::nullopt;
  int cur = v;
  for (Letter l : w.letters()) {
    cur = step(cur, l);
    if (cur < 0 || !core_[cur]) return std::nullopt;
  }
  return cur;
}

bool CoreGraph::is_conjugate_into(const CyclicWord& g) const {
  for (int v : core_vertices_)
    if (trace(v, g.rep()) == v) return true;
  return false;
}

bool CoreGraph::is_full_group() const {
  if (core_vertices_.size() != 1) return false;
  return degree(core_vertices_[0]) == alpha_.num_letters();
}

std::vector<Word> CoreGraph::basis() const {
  int n = num_vertices();
  std::vector<Word> path_to(n);
  std::vector<bool> seen(n, false);
  std::deque<int> q{core_base_};
  seen[core_base_] = true;
  std::vector<std::tuple<int, Letter, int>> extra;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int c = 0; c < alpha_.num_letters(); ++c) {
      int t = out_[v][c];
      if (t < 0 || !core_[t]) continue;
      Letter l = letter_of_code(c);
      if (!seen[t]) {
        seen[t] = true;
        path_to[t] = concat(path_to[v], l);
        q.push_back(t);
      } else if (l > 0) {
        extra.emplace_back(v, l, t);
      }
    }
  }
  std::vector<Word> out;
  for (auto& [v, l, t] : extra) {
    Word loop = concat(concat(path_to[v], l), path_to[t].inverse());
    if (loop.empty()) continue;  // tree edge seen from its positive side
    out.push_back(concat(concat(spur_, loop), spur_.inverse()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int FiberComponent::diameter() const {
  if (vertices.size() <= 1) return 0;
  std::vector<std::vector<int>> adj(vertices.size());
  for (auto& [u, l, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  auto bfs = [&](int s) {
    std::vector<int> d(vertices.size(), -1);
    std::deque<int> q{s};
    d[s] = 0;
    int far = s;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      if (d[v] > d[far]) far = v;
      for (int t : adj[v])
        if (d[t] < 0) {
          d[t] = d[v] + 1;
          q.push_back(t);
        }
    }
    return std::pair{far, d[far]};
  };
  auto [u, d0] = bfs(0);
  (void)d0;
  return bfs(u).second;
}

Word FiberComponent::witness_cycle() const {
  std::vector<std::vector<std::pair<int, std::size_t>>> adj(vertices.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto& [u, l, v] = edges[e];
    adj[u].push_back({v, e});
    adj[v].push_back({u, e});
  }
  std::vector<int> state(vertices.size(), 0);
  std::vector<Word> label(vertices.size());
  std::vector<bool> tree(edges.size(), false);
  std::deque<int> q{0};
  state[0] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (auto [t, e] : adj[v]) {
      if (state[t] == 0) {
        state[t] = 1;
        tree[e] = true;
        auto& [eu, el, ev] = edges[e];
        label[t] = (ev == t) ? concat(label[v], el) : concat(label[v], inverse(el));
        q.push_back(t);
      }
    }
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (tree[e]) continue;
    auto& [u, l, v] = edges[e];
    Word w = concat(concat(label[u], l), label[v].inverse());
    auto dec = cyclic_reduce(w);
    if (!dec.core.empty()) return dec.core;
  }
  throw std::logic_error("witness_cycle called on an acyclic component");
}

std::vector<FiberComponent> fiber_product(const CoreGraph& g1, const CoreGraph& g2) {
  if (!(g1.alphabet() == g2.alphabet()))
    throw std::invalid_argument("fiber product needs a common alphabet");
  const auto& c1 = g1.core_vertices();
  const auto& c2 = g2.core_vertices();
  int n2 = g2.num_vertices();
  auto key = [n2](int u, int v) { return u * n2 + v; };
  std::map<int, int> pos;
  std::vector<int> keys;
  for (int u : c1)
    for (int v : c2) {
      pos[key(u, v)] = static_cast<int>(keys.size());
      keys.push_back(key(u, v));
    }
  UnionFind uf(static_cast<int>(keys.size()));
  std::vector<std::tuple<int, Letter, int>> all_edges;
  for (int u : c1)
    for (int v : c2)
      for (int i = 1; i <= g1.alphabet().rank; ++i) {
        Letter l = static_cast<Letter>(i);
        int t1 = g1.step(u, l), t2 = g2.step(v, l);
        if (t1 < 0 || t2 < 0 || !g1.is_core(t1) || !g2.is_core(t2)) continue;
        int p = pos[key(u, v)], pt = pos[key(t1, t2)];
        all_edges.emplace_back(p, l, pt);
        uf.unite(p, pt);
      }
  std::map<int, int> comp_id;
  std::vector<FiberComponent> comps;
  std::vector<std::map<int, int>> local;
  for (auto& [p, l, pt] : all_edges) {
    int r = uf.find(p);
    auto [it, fresh] = comp_id.try_emplace(r, static_cast<int>(comps.size()));
    if (fresh) {
      comps.emplace_back();
      local.emplace_back();
    }
    int cid = it->second;
    auto add_vertex = [&](int posi) {
      auto [vit, vnew] = local[cid].try_emplace(posi, static_cast<int>(comps[cid].vertices.size()));
      if (vnew) comps[cid].vertices.push_back({keys[posi] / n2, keys[posi] % n2});
      return vit->second;
    };
    int lu = add_vertex(p), lv = add_vertex(pt);
    comps[cid].edges.emplace_back(lu, l, lv);
  }
  for (auto& c : comps)
    for (auto& [u, v] : c.vertices)
      if (u == v) {
        c.is_diagonal = true;
        break;
      }
  return comps;
}

std::optional<MalnormalityWitness> check_malnormal_system(const std::vector<CoreGraph>& graphs) {
  for (const auto& g : graphs)
    if (g.is_full_group())
      throw std::invalid_argument("the full group is not a valid subgroup input");
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i; j < graphs.size(); ++j) {
      auto comps = fiber_product(graphs[i], graphs[j]);
      for (const auto& c : comps) {
        if (i == j && c.is_diagonal) continue;
        if (!c.acyclic())
          return MalnormalityWitness{c.witness_cycle(), static_cast<int>(i), static_cast<int>(j)};
      }
    }
  return std::nullopt;
}

int compute_L(const std::vector<CoreGraph>& graphs) {
  if (auto w = check_malnormal_system(graphs)) throw MalnormalityError(*w);
  int best = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i; j < graphs.size(); ++j)
      for (const auto& c : fiber_product(graphs[i], graphs[j])) {
        if (i == j && c.is_diagonal) continue;
        best = std::max(best, c.diameter());
      }
  return best;
}

std::optional<RootClosedWitness> is_root_closed_bounded(const CoreGraph& g, int max_len,
                                                        int max_exp) {
  if (max_len < 1 || max_exp < 1) throw std::invalid_argument("bounds must be positive");
  if (g.is_full_group())
    throw std::invalid_argument("the full group is not a valid subgroup input");
  for (int len = 1; len <= max_len; ++len)
    for (const Word& w : all_reduced_words(g.alphabet(), len)) {
      if (!is_cyclically_reduced(w)) continue;
      if (g.contains(w)) continue;
      Word pw = w;
      for (int k = 2; k <= max_exp; ++k) {
        pw = concat(pw, w);
        if (g.contains(pw)) return RootClosedWitness{w, k};
      }
    }
  return std::nullopt;
}

}  // namespace relcurr
