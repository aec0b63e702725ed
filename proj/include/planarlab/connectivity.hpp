#pragma once

// Connectivity decompositions on multigraphs: components, cut edges
// (bridges), cut vertices, biconnected blocks, and the minimal 2-vertex-cut
// used by the discrepancy machinery.  Parallel edges are tracked by instance
// id, so a doubled edge is correctly never a bridge; loops are ignored by
// every connectivity notion here (they affect no separation).

#include <cassert>

#include "planarlab/graph.hpp"

namespace planarlab {

struct ConnectivityReport {
  std::vector<std::vector<int>> components;  // sorted vertex sets, by least vertex
  std::vector<Edge> cut_edges;               // sorted
  std::vector<int> cut_vertices;             // sorted
  std::vector<std::vector<int>> blocks;      // sorted vertex sets, by least vertex;
                                             // block edge sets partition non-loop edges
};

inline ConnectivityReport decompose(const PlanarMultigraph& g) {
  int n = g.n;
  std::vector<std::vector<std::pair<int, int>>> adj(n + 1);  // (neighbor, edge id)
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges[e];
    if (u == v) continue;
    adj[u].push_back({v, e});
    adj[v].push_back({u, e});
  }

  ConnectivityReport rep;

  // Components (loops irrelevant; isolated vertices are singleton components).
  {
    std::vector<char> vis(n + 1, 0);
    for (int s = 1; s <= n; ++s) {
      if (vis[s]) continue;
      std::vector<int> comp, stack{s};
      vis[s] = 1;
      while (!stack.empty()) {
        int v = stack.back(); stack.pop_back();
        comp.push_back(v);
        for (auto [w, e] : adj[v]) {
          (void)e;
          if (!vis[w]) { vis[w] = 1; stack.push_back(w); }
        }
      }
      std::sort(comp.begin(), comp.end());
      rep.components.push_back(std::move(comp));
    }
  }

  // Bridges, articulation points, blocks: one iterative lowpoint DFS.
  {
    std::vector<int> num(n + 1, 0), low(n + 1, 0);
    std::vector<char> is_cut(n + 1, 0);
    std::vector<int> edge_stack;
    std::vector<char> edge_seen(g.m(), 0);
    int timer = 0;
    struct Frame { int v, parent_edge; size_t i; int children; };
    for (int s = 1; s <= n; ++s) {
      if (num[s]) continue;
      std::vector<Frame> st{{s, -1, 0, 0}};
      num[s] = low[s] = ++timer;
      while (!st.empty()) {
        Frame& f = st.back();
        if (f.i < adj[f.v].size()) {
          auto [w, e] = adj[f.v][f.i++];
          if (e == f.parent_edge) continue;
          if (!edge_seen[e]) { edge_seen[e] = 1; edge_stack.push_back(e); }
          if (!num[w]) {
            num[w] = low[w] = ++timer;
            ++f.children;
            st.push_back({w, e, 0, 0});
          } else {
            low[f.v] = std::min(low[f.v], num[w]);
          }
        } else {
          int v = f.v, pe = f.parent_edge, children = f.children;
          st.pop_back();
          if (st.empty()) {
            if (children >= 2) is_cut[v] = 1;  // DFS root
          } else {
            int p = st.back().v;
            low[p] = std::min(low[p], low[v]);
            if (low[v] >= num[p]) {
              // Non-root articulation rule; the root is handled at its pop.
              if (st.size() > 1) is_cut[p] = 1;
              std::vector<int> blk_edges;
              while (true) {
                int e = edge_stack.back(); edge_stack.pop_back();
                blk_edges.push_back(e);
                if (e == pe) break;
              }
              if (blk_edges.size() == 1) {
                // Bridge iff the child subtree never reaches back past v.
                if (low[v] > num[p]) rep.cut_edges.push_back(g.edges[blk_edges[0]]);
              }
              std::set<int> vs;
              for (int e : blk_edges) {
                vs.insert(g.edges[e].first);
                vs.insert(g.edges[e].second);
              }
              rep.blocks.push_back(std::vector<int>(vs.begin(), vs.end()));
            }
          }
        }
      }
    }
    for (int v = 1; v <= n; ++v)
      if (is_cut[v]) rep.cut_vertices.push_back(v);
  }
  std::sort(rep.cut_edges.begin(), rep.cut_edges.end());
  std::sort(rep.blocks.begin(), rep.blocks.end());
  return rep;
}

// ---------------------------------------------------------------------------
// minimal_two_cut: over all 2-vertex-cuts {u,v}, a cut whose smallest
// separated side has minimum order; ties by lexicographically least (u,v).
// Precondition: connected with no cut vertex.
// ---------------------------------------------------------------------------
struct TwoCut {
  int u = 0, v = 0;
  std::vector<int> side;  // sorted vertex set of a smallest component of g\{u,v}
};

inline std::optional<TwoCut> minimal_two_cut(const PlanarMultigraph& g) {
  int n = g.n;
  {
    auto rep = decompose(g);
    assert(rep.components.size() == 1 && rep.cut_vertices.empty());
  }
  std::vector<std::vector<int>> adj(n + 1);
  for (auto& e : g.edges) {
    if (e.first == e.second) continue;
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::optional<TwoCut> best;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      // Components of g \ {u, v}.
      std::vector<char> vis(n + 1, 0);
      vis[u] = vis[v] = 1;
      std::vector<std::vector<int>> comps;
      for (int s = 1; s <= n; ++s) {
        if (vis[s]) continue;
        std::vector<int> comp, stack{s};
        vis[s] = 1;
        while (!stack.empty()) {
          int x = stack.back(); stack.pop_back();
          comp.push_back(x);
          for (int w : adj[x])
            if (!vis[w]) { vis[w] = 1; stack.push_back(w); }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
      if (comps.size() < 2) continue;
      auto smallest = std::min_element(
          comps.begin(), comps.end(), [](auto& a, auto& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
          });
      if (!best || smallest->size() < best->side.size())
        best = TwoCut{u, v, *smallest};
      // (u,v) iterate in lexicographic order, so first strict improvement wins
      // and equal-size later cuts are ignored — exactly the tie-break rule.
    }
  }
  return best;
}

}  // namespace planarlab
