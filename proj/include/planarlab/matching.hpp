#pragma once

// Maximum matching in general graphs via the blossom (augmenting path with
// odd-cycle contraction) algorithm, O(n^3).  The auxiliary graphs of the
// discrepancy machinery are non-bipartite, so odd cycles must be handled.

#include <cassert>

#include "planarlab/graph.hpp"

namespace planarlab {

struct Matching {
  std::vector<std::pair<int, int>> pairs;  // disjoint vertex pairs (u < v)
};

namespace detail {

// Standard blossom implementation on vertices 1..n.
class Blossom {
 public:
  explicit Blossom(int n, const std::vector<std::vector<char>>& adj)
      : n_(n), adj_(adj), match_(n + 1, 0), p_(n + 1, 0), base_(n + 1, 0),
        q_(), used_(n + 1, 0), blossom_(n + 1, 0) {}

  std::vector<int> run() {
    for (int v = 1; v <= n_; ++v)
      if (!match_[v]) {
        int u = find_path(v);
        while (u) {
          int pv = p_[u], ppv = match_[pv];
          match_[u] = pv;
          match_[pv] = u;
          u = ppv;
        }
      }
    return match_;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> used(n_ + 1, 0);
    while (true) {
      a = base_[a];
      used[a] = 1;
      if (!match_[a]) break;
      a = p_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (used[b]) return b;
      b = p_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = 1;
      blossom_[base_[match_[v]]] = 1;
      p_[v] = child;
      child = match_[v];
      v = p_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(p_.begin(), p_.end(), 0);
    for (int i = 0; i <= n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::vector<int> q{root};
    for (size_t qi = 0; qi < q.size(); ++qi) {
      int v = q[qi];
      for (int to = 1; to <= n_; ++to) {
        if (!adj_[v][to]) continue;
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] && p_[match_[to]])) {
          int curbase = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, curbase, to);
          mark_path(to, curbase, v);
          for (int i = 1; i <= n_; ++i)
            if (blossom_[base_[i]]) {
              base_[i] = curbase;
              if (!used_[i]) { used_[i] = 1; q.push_back(i); }
            }
        } else if (!p_[to]) {
          p_[to] = v;
          if (!match_[to]) return to;
          used_[match_[to]] = 1;
          q.push_back(match_[to]);
        }
      }
    }
    return 0;
  }

  int n_;
  const std::vector<std::vector<char>>& adj_;
  std::vector<int> match_, p_, base_;
  std::vector<int> q_;
  std::vector<char> used_, blossom_;
};

}  // namespace detail

// Maximum matching of a simple graph; pairs sorted for determinism.
inline Matching maximum_matching(const LabeledGraph& g) {
  std::vector<std::vector<char>> adj(g.n + 1, std::vector<char>(g.n + 1, 0));
  for (auto& e : g.edges) adj[e.first][e.second] = adj[e.second][e.first] = 1;
  auto match = detail::Blossom(g.n, adj).run();
  Matching m;
  for (int v = 1; v <= g.n; ++v)
    if (match[v] > v) m.pairs.push_back({v, match[v]});
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

// Perfect matching if one exists.
inline std::optional<Matching> perfect_matching(const LabeledGraph& g) {
  Matching m = maximum_matching(g);
  if (2 * static_cast<int>(m.pairs.size()) != g.n) return std::nullopt;
  return m;
}

}  // namespace planarlab
