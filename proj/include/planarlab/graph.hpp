#pragma once

// Core graph value types: simple labeled graphs on {1..n} and planar
// multigraphs (loops and parallel edges allowed), plus graph6 and JSON
// edge-list serialization.  All types are immutable-by-convention value
// types; operations elsewhere in the library are pure functions.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace planarlab {

using Edge = std::pair<int, int>;  // unordered; stored with first <= second

inline Edge make_edge(int u, int v) {
  return u <= v ? Edge{u, v} : Edge{v, u};
}

// ---------------------------------------------------------------------------
// LabeledGraph: simple graph on vertex labels 1..n.
// ---------------------------------------------------------------------------
struct LabeledGraph {
  int n = 0;
  std::vector<Edge> edges;  // normalized (u < v), sorted, duplicate-free

  LabeledGraph() = default;
  explicit LabeledGraph(int n_) : n(n_) {
    if (n_ < 0) throw std::invalid_argument("LabeledGraph: negative order");
  }
  LabeledGraph(int n_, std::vector<Edge> es) : n(n_) {
    for (auto& e : es) add_edge(e.first, e.second);
  }

  void add_edge(int u, int v) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw std::invalid_argument("LabeledGraph: endpoint out of range");
    if (u == v) throw std::invalid_argument("LabeledGraph: loop not allowed");
    Edge e = make_edge(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it != edges.end() && *it == e) return;
    edges.insert(it, e);
  }

  void remove_edge(int u, int v) {
    Edge e = make_edge(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it != edges.end() && *it == e) edges.erase(it);
  }

  bool has_edge(int u, int v) const {
    Edge e = make_edge(u, v);
    return std::binary_search(edges.begin(), edges.end(), e);
  }

  int m() const { return static_cast<int>(edges.size()); }

  std::vector<int> degrees() const {
    std::vector<int> d(n + 1, 0);
    for (auto& e : edges) { ++d[e.first]; ++d[e.second]; }
    return d;
  }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(n + 1);
    for (auto& e : edges) {
      adj[e.first].push_back(e.second);
      adj[e.second].push_back(e.first);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
  }

  std::vector<Edge> non_edges() const {
    std::vector<Edge> out;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (!has_edge(u, v)) out.push_back({u, v});
    return out;
  }

  // Induced subgraph on a sorted vertex set, relabeled 1..|w| in order.
  LabeledGraph induced(const std::vector<int>& w) const {
    std::vector<int> pos(n + 1, 0);
    for (size_t i = 0; i < w.size(); ++i) pos[w[i]] = static_cast<int>(i) + 1;
    LabeledGraph h(static_cast<int>(w.size()));
    for (auto& e : edges)
      if (pos[e.first] && pos[e.second]) h.add_edge(pos[e.first], pos[e.second]);
    return h;
  }

  bool operator==(const LabeledGraph& o) const {
    return n == o.n && edges == o.edges;
  }
};

// ---------------------------------------------------------------------------
// PlanarMultigraph: multigraph on 1..n; loops and parallel edges allowed.
// The name records intent (the 4-embeddability machinery lives on planar
// hosts); planarity itself is checked by embed(), not by the constructor.
// ---------------------------------------------------------------------------
struct PlanarMultigraph {
  int n = 0;
  std::vector<Edge> edges;  // multiset; each entry normalized u <= v

  PlanarMultigraph() = default;
  explicit PlanarMultigraph(int n_) : n(n_) {
    if (n_ < 0) throw std::invalid_argument("PlanarMultigraph: negative order");
  }
  PlanarMultigraph(int n_, std::vector<Edge> es) : n(n_) {
    for (auto& e : es) add_edge(e.first, e.second);
  }

  void add_edge(int u, int v) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw std::invalid_argument("PlanarMultigraph: endpoint out of range");
    edges.push_back(make_edge(u, v));
  }

  int m() const { return static_cast<int>(edges.size()); }

  // A loop at v contributes 2 to deg(v).
  std::vector<int> degrees() const {
    std::vector<int> d(n + 1, 0);
    for (auto& e : edges) { ++d[e.first]; ++d[e.second]; }
    return d;
  }

  bool is_simple() const {
    std::set<Edge> seen;
    for (auto& e : edges) {
      if (e.first == e.second) return false;
      if (!seen.insert(e).second) return false;
    }
    return true;
  }

  // Underlying simple graph: drop loops, collapse parallel edges.
  LabeledGraph underlying_simple() const {
    LabeledGraph g(n);
    for (auto& e : edges)
      if (e.first != e.second) g.add_edge(e.first, e.second);
    return g;
  }

  static PlanarMultigraph from_simple(const LabeledGraph& g) {
    PlanarMultigraph h(g.n);
    for (auto& e : g.edges) h.add_edge(e.first, e.second);
    return h;
  }
};

// ---------------------------------------------------------------------------
// graph6 (standard 6-bit encoding for simple graphs, n < 63 is all we need;
// the long form up to 258047 is supported for completeness).
// ---------------------------------------------------------------------------
inline std::string to_graph6(const LabeledGraph& g) {
  std::string s;
  if (g.n <= 62) {
    s.push_back(static_cast<char>(g.n + 63));
  } else {
    s.push_back(126);
    s.push_back(static_cast<char>(((g.n >> 12) & 63) + 63));
    s.push_back(static_cast<char>(((g.n >> 6) & 63) + 63));
    s.push_back(static_cast<char>((g.n & 63) + 63));
  }
  // Bits of the upper triangle, column by column: (0,1), (0,2), (1,2), ...
  int bit = 0, acc = 0;
  for (int v = 1; v < g.n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u + 1, v + 1) ? 1 : 0);
      if (++bit == 6) { s.push_back(static_cast<char>(acc + 63)); bit = 0; acc = 0; }
    }
  }
  if (bit) s.push_back(static_cast<char>((acc << (6 - bit)) + 63));
  return s;
}

inline LabeledGraph from_graph6(const std::string& s0) {
  std::string s = s0;
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  if (s.empty()) throw std::invalid_argument("graph6: empty string");
  size_t i = 0;
  int n;
  if (static_cast<unsigned char>(s[0]) == 126) {
    if (s.size() < 4) throw std::invalid_argument("graph6: truncated order");
    n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
    i = 4;
  } else {
    n = s[0] - 63;
    i = 1;
  }
  if (n < 0) throw std::invalid_argument("graph6: bad order");
  LabeledGraph g(n);
  int bit = 0, acc = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (bit == 0) {
        if (i >= s.size()) throw std::invalid_argument("graph6: truncated data");
        acc = s[i++] - 63;
        if (acc < 0 || acc > 63) throw std::invalid_argument("graph6: bad byte");
        bit = 6;
      }
      --bit;
      if ((acc >> bit) & 1) g.add_edge(u + 1, v + 1);
    }
  }
  return g;
}

}  // namespace planarlab
