#pragma once

// Isomorphism utilities at census scale: a complete canonical code (minimum
// adjacency encoding over all relabelings, with branch-and-bound prefix
// pruning), isomorphism-class generation by incremental edge addition,
// order-preserving induced copy enumeration, and subgraph-containment
// predicates used by the census module.

#include <cassert>
#include <numeric>

#include "planarlab/graph.hpp"

namespace planarlab {

inline constexpr int kCanonicalMaxN = 10;

// Complete isomorphism invariant: the lexicographically minimal upper-triangle
// bit matrix over all vertex permutations, packed as a byte string prefixed
// with the order.  Columns are fixed one vertex at a time; a partial
// permutation whose emitted columns already exceed the best known prefix is
// pruned.
inline std::string canonical_code(const LabeledGraph& g) {
  if (g.n > kCanonicalMaxN)
    throw std::invalid_argument("canonical_code: order exceeds bound");
  int n = g.n;
  std::vector<std::vector<char>> adj(n + 1, std::vector<char>(n + 1, 0));
  for (auto& e : g.edges) adj[e.first][e.second] = adj[e.second][e.first] = 1;

  // bits, column-by-column: (0,1), (0,2), (1,2), (0,3), ...
  int nbits = n * (n - 1) / 2;
  std::vector<char> best(nbits, 2);  // 2 = "unset", larger than any bit
  std::vector<char> cur(nbits, 0);
  std::vector<int> perm;  // perm[i] = original vertex placed at position i
  std::vector<char> used(n + 1, 0);

  // DFS over positions; emit column k when placing position k.  `tight`
  // tracks whether cur still equals the best prefix: only then may a larger
  // bit prune the branch (best only ever decreases, so that prune stays
  // valid).  Non-tight branches skip bit comparisons and are resolved by a
  // full lexicographic compare at the leaf — best may have dropped below
  // them since they diverged.
  auto rec = [&](auto&& self, int k, int bitpos, bool tight) -> void {
    if (k == n) {
      if (cur < best) best = cur;
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      int bp = bitpos;
      bool worse = false, sub_tight = tight;
      for (int i = 0; i < k && !worse; ++i, ++bp) {
        char bit = adj[perm[i]][v];
        cur[bp] = bit;
        if (sub_tight) {
          if (bit > best[bp]) worse = true;
          else if (bit < best[bp]) sub_tight = false;
        }
      }
      if (worse) continue;
      used[v] = 1;
      perm.push_back(v);
      self(self, k + 1, bitpos + k, sub_tight);
      perm.pop_back();
      used[v] = 0;
    }
  };
  rec(rec, 0, 0, true);

  std::string code;
  code.push_back(static_cast<char>(n));
  int acc = 0, cnt = 0;
  for (int i = 0; i < nbits; ++i) {
    acc = (acc << 1) | best[i];
    if (++cnt == 8) { code.push_back(static_cast<char>(acc)); acc = cnt = 0; }
  }
  if (cnt) code.push_back(static_cast<char>(acc << (8 - cnt)));
  return code;
}

inline bool isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.n != b.n || a.m() != b.m()) return false;
  return canonical_code(a) == canonical_code(b);
}

// All isomorphism classes of graphs on n vertices with exactly m edges that
// satisfy `keep` (which must be inherited by subgraphs — e.g. planarity),
// one canonical representative each.  Built level-by-level from the empty
// graph by single edge additions.
template <typename Keep>
std::vector<std::vector<LabeledGraph>> iso_classes_by_edges(
    int n, int max_m, Keep keep) {
  std::vector<std::vector<LabeledGraph>> levels;
  levels.push_back({LabeledGraph(n)});
  for (int m = 1; m <= max_m; ++m) {
    std::set<std::string> seen;
    std::vector<LabeledGraph> next;
    for (const auto& g : levels[m - 1]) {
      for (auto& e : g.non_edges()) {
        LabeledGraph h = g;
        h.add_edge(e.first, e.second);
        if (!keep(h)) continue;
        if (seen.insert(canonical_code(h)).second) next.push_back(h);
      }
    }
    levels.push_back(std::move(next));
    if (levels[m].empty()) break;
  }
  return levels;
}

// Vertex sets W (as sorted vectors) such that the increasing bijection
// 1..|h| -> W is an isomorphism from h onto g[W].
inline std::vector<std::vector<int>> order_preserving_induced_copies(
    const LabeledGraph& h, const LabeledGraph& g) {
  std::vector<std::vector<int>> out;
  int k = h.n;
  if (k > g.n) return out;
  std::vector<int> w;
  auto rec = [&](auto&& self, int next_min) -> void {
    int at = static_cast<int>(w.size());
    if (at == k) { out.push_back(w); return; }
    for (int v = next_min; v <= g.n - (k - at - 1); ++v) {
      bool ok = true;
      for (int i = 0; i < at && ok; ++i)
        if (h.has_edge(i + 1, at + 1) != g.has_edge(w[i], v)) ok = false;
      if (!ok) continue;
      w.push_back(v);
      self(self, v + 1);
      w.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// Does g contain a (not necessarily induced) subgraph isomorphic to h?
// Backtracking monomorphism search; h is desk-scale.
inline bool has_subgraph_iso(const LabeledGraph& h, const LabeledGraph& g) {
  if (h.n > g.n || h.m() > g.m()) return false;
  auto hdeg = h.degrees();
  auto gdeg = g.degrees();
  // Map h-vertices in decreasing degree order.
  std::vector<int> order(h.n);
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return hdeg[a] > hdeg[b]; });
  std::vector<int> img(h.n + 1, 0);
  std::vector<char> used(g.n + 1, 0);
  auto rec = [&](auto&& self, int k) -> bool {
    if (k == h.n) return true;
    int hv = order[k];
    for (int gv = 1; gv <= g.n; ++gv) {
      if (used[gv] || gdeg[gv] < hdeg[hv]) continue;
      bool ok = true;
      for (int i = 0; i < k && ok; ++i)
        if (h.has_edge(order[i], hv) && !g.has_edge(img[order[i]], gv)) ok = false;
      if (!ok) continue;
      img[hv] = gv;
      used[gv] = 1;
      if (self(self, k + 1)) return true;
      used[gv] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

// Connected components of g as induced LabeledGraphs (relabeled), with their
// vertex sets, in order of least vertex.
inline std::vector<std::pair<std::vector<int>, LabeledGraph>> component_graphs(
    const LabeledGraph& g) {
  std::vector<std::vector<int>> adj = g.adjacency();
  std::vector<char> vis(g.n + 1, 0);
  std::vector<std::pair<std::vector<int>, LabeledGraph>> out;
  for (int s = 1; s <= g.n; ++s) {
    if (vis[s]) continue;
    std::vector<int> comp, stack{s};
    vis[s] = 1;
    while (!stack.empty()) {
      int v = stack.back(); stack.pop_back();
      comp.push_back(v);
      for (int w : adj[v]) if (!vis[w]) { vis[w] = 1; stack.push_back(w); }
    }
    std::sort(comp.begin(), comp.end());
    LabeledGraph sub = g.induced(comp);
    out.push_back({std::move(comp), std::move(sub)});
  }
  return out;
}

inline bool has_component_iso(const LabeledGraph& h, const LabeledGraph& g) {
  for (auto& [vs, c] : component_graphs(g)) {
    (void)vs;
    if (c.n == h.n && c.m() == h.m() && isomorphic(c, h)) return true;
  }
  return false;
}

}  // namespace planarlab
