#pragma once

// Structural detectors: pendant edges, short cycles, good triangles, and
// the appearance family (appearance / filtered / 2-appearance /
// 6-appearance) with their total vertex/edge sets, plus exact
// maximum-disjoint-family extraction over located records.

#include <cassert>
#include <map>

#include "planarlab/canonical.hpp"

namespace planarlab {

// ---------------------------------------------------------------------------
// structure_census
// ---------------------------------------------------------------------------
struct StructureCensus {
  int pendant_edges = 0;     // edges incident to a vertex of degree 1
  int isolated_vertices = 0;
  std::vector<std::vector<int>> short_cycles;   // distinct cycles, size <= 6;
                                                // min vertex first, oriented
                                                // with second < last
  std::vector<std::vector<int>> good_triangles; // triangles with a vertex of
                                                // degree <= 6, sorted triples
};

inline StructureCensus structure_census(const LabeledGraph& g) {
  StructureCensus out;
  auto deg = g.degrees();
  for (auto& e : g.edges)
    if (deg[e.first] == 1 || deg[e.second] == 1) ++out.pendant_edges;
  for (int v = 1; v <= g.n; ++v)
    if (deg[v] == 0) ++out.isolated_vertices;

  // All simple cycles of length 3..6: paths from the cycle's least vertex s
  // through vertices > s, closed by an edge back to s; orientation fixed by
  // second vertex < last vertex.
  auto adj = g.adjacency();
  std::vector<int> path;
  auto rec = [&](auto&& self, int s, int v, std::vector<char>& on) -> void {
    if (path.size() >= 3 && g.has_edge(v, s) && path[1] < path.back())
      out.short_cycles.push_back(path);
    if (path.size() == 6) return;
    for (int w : adj[v]) {
      if (w <= s || on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      self(self, s, w, on);
      path.pop_back();
      on[w] = 0;
    }
  };
  for (int s = 1; s <= g.n; ++s) {
    std::vector<char> on(g.n + 1, 0);
    on[s] = 1;
    path.assign(1, s);
    rec(rec, s, s, on);
  }

  for (auto& c : out.short_cycles)
    if (c.size() == 3 &&
        (deg[c[0]] <= 6 || deg[c[1]] <= 6 || deg[c[2]] <= 6)) {
      std::vector<int> t = c;
      std::sort(t.begin(), t.end());
      out.good_triangles.push_back(t);
    }
  std::sort(out.good_triangles.begin(), out.good_triangles.end());
  return out;
}

// ---------------------------------------------------------------------------
// Appearances
// ---------------------------------------------------------------------------
enum class AppearanceKind { appearance, two_appearance, six_appearance };

struct AppearanceRecord {
  AppearanceKind kind;
  LabeledGraph pattern;
  std::vector<int> site;          // W, sorted
  std::vector<Edge> boundary;     // the 1, 2 or 6 crossing edges, sorted
  std::vector<int> total_vertices;
  std::vector<Edge> total_edges;
};

namespace detail {

inline std::vector<Edge> internal_edges(const LabeledGraph& g,
                                        const std::vector<int>& w) {
  std::vector<char> in(g.n + 1, 0);
  for (int v : w) in[v] = 1;
  std::vector<Edge> out;
  for (auto& e : g.edges)
    if (in[e.first] && in[e.second]) out.push_back(e);
  return out;
}

inline std::vector<Edge> crossing_edges(const LabeledGraph& g,
                                        const std::vector<int>& w) {
  std::vector<char> in(g.n + 1, 0);
  for (int v : w) in[v] = 1;
  std::vector<Edge> out;
  for (auto& e : g.edges)
    if (in[e.first] != in[e.second]) out.push_back(e);
  return out;
}

}  // namespace detail

// H appears at W: the increasing bijection is an isomorphism onto G[W] and
// exactly one edge of G crosses W, incident with W's least element.
inline std::vector<AppearanceRecord> find_appearances(const LabeledGraph& h,
                                                      const LabeledGraph& g) {
  std::vector<AppearanceRecord> out;
  for (auto& w : order_preserving_induced_copies(h, g)) {
    auto cross = detail::crossing_edges(g, w);
    if (cross.size() != 1) continue;
    int root = w.front();
    auto [a, b] = cross[0];
    if (a != root && b != root) continue;
    int outer = (a == root) ? b : a;
    AppearanceRecord rec{AppearanceKind::appearance, h, w, cross, {}, {}};
    rec.total_vertices = w;
    rec.total_vertices.push_back(outer);
    std::sort(rec.total_vertices.begin(), rec.total_vertices.end());
    rec.total_edges = detail::internal_edges(g, w);
    rec.total_edges.push_back(cross[0]);
    std::sort(rec.total_edges.begin(), rec.total_edges.end());
    out.push_back(std::move(rec));
  }
  return out;
}

// Appearances whose cut-edge joins two vertices of host degree > d1.
inline std::vector<AppearanceRecord> find_appearances_filtered(
    const LabeledGraph& h, const LabeledGraph& g, int d1) {
  auto deg = g.degrees();
  std::vector<AppearanceRecord> out;
  for (auto& rec : find_appearances(h, g)) {
    auto [a, b] = rec.boundary[0];
    if (deg[a] > d1 && deg[b] > d1) out.push_back(rec);
  }
  return out;
}

// 2-appearance: exactly two crossing edges r1v1, r2v2 with r1 != r2 inside,
// v1 != v2 outside, and v1v2 a non-edge.
inline std::vector<AppearanceRecord> find_two_appearances(
    const LabeledGraph& j, const LabeledGraph& g) {
  std::vector<AppearanceRecord> out;
  for (auto& w : order_preserving_induced_copies(j, g)) {
    auto cross = detail::crossing_edges(g, w);
    if (cross.size() != 2) continue;
    std::vector<char> in(g.n + 1, 0);
    for (int v : w) in[v] = 1;
    auto split = [&](const Edge& e) {
      return in[e.first] ? std::pair{e.first, e.second}
                         : std::pair{e.second, e.first};
    };
    auto [r1, v1] = split(cross[0]);
    auto [r2, v2] = split(cross[1]);
    if (r1 == r2 || v1 == v2 || g.has_edge(v1, v2)) continue;
    AppearanceRecord rec{AppearanceKind::two_appearance, j, w, cross, {}, {}};
    rec.total_vertices = w;
    rec.total_vertices.push_back(v1);
    rec.total_vertices.push_back(v2);
    std::sort(rec.total_vertices.begin(), rec.total_vertices.end());
    rec.total_edges = detail::internal_edges(g, w);
    rec.total_edges.insert(rec.total_edges.end(), cross.begin(), cross.end());
    std::sort(rec.total_edges.begin(), rec.total_edges.end());
    out.push_back(std::move(rec));
  }
  return out;
}

// 6-appearance: exactly six crossing edges forming the alternating hexagon
// r1 v1 r2 v2 r3 v3 (three distinct sites, three distinct outer vertices)
// with the additional requirement v2, v3 in Gamma(v1) for some labeling.
// One record per site W.
inline std::vector<AppearanceRecord> find_six_appearances(
    const LabeledGraph& t, const LabeledGraph& g) {
  std::vector<AppearanceRecord> out;
  for (auto& w : order_preserving_induced_copies(t, g)) {
    auto cross = detail::crossing_edges(g, w);
    if (cross.size() != 6) continue;
    std::vector<char> in(g.n + 1, 0);
    for (int v : w) in[v] = 1;
    // Collect inner and outer endpoints with incidence counts.
    std::map<int, std::vector<int>> outer_to_inner;
    std::map<int, int> inner_count;
    bool bad = false;
    for (auto& e : cross) {
      int r = in[e.first] ? e.first : e.second;
      int v = in[e.first] ? e.second : e.first;
      outer_to_inner[v].push_back(r);
      ++inner_count[r];
    }
    if (outer_to_inner.size() != 3 || inner_count.size() != 3) continue;
    for (auto& [v, rs] : outer_to_inner)
      if (rs.size() != 2 || rs[0] == rs[1]) bad = true;
    for (auto& [r, c] : inner_count)
      if (c != 2) bad = true;
    if (bad) continue;
    // The bipartite multigraph (outer vs inner, each degree 2) must be a
    // single 6-cycle, not two triangles — with 3+3 vertices of degree 2 it
    // is a disjoint union of even cycles, so connectivity suffices.
    {
      std::vector<int> outers;
      for (auto& [v, rs] : outer_to_inner) { outers.push_back(v); (void)rs; }
      std::set<int> reach;
      std::vector<int> stack{outers[0]};
      reach.insert(outers[0]);
      while (!stack.empty()) {
        int x = stack.back(); stack.pop_back();
        for (auto& e : cross) {
          if (e.first != x && e.second != x) continue;
          int y = e.first == x ? e.second : e.first;
          if (reach.insert(y).second) stack.push_back(y);
        }
      }
      if (reach.size() != 6) continue;
    }
    // Some outer vertex adjacent (in g) to both others.
    std::vector<int> vs;
    for (auto& [v, rs] : outer_to_inner) { vs.push_back(v); (void)rs; }
    bool hub = (g.has_edge(vs[0], vs[1]) && g.has_edge(vs[0], vs[2])) ||
               (g.has_edge(vs[1], vs[0]) && g.has_edge(vs[1], vs[2])) ||
               (g.has_edge(vs[2], vs[0]) && g.has_edge(vs[2], vs[1]));
    if (!hub) continue;
    AppearanceRecord rec{AppearanceKind::six_appearance, t, w, cross, {}, {}};
    rec.total_vertices = w;
    rec.total_vertices.insert(rec.total_vertices.end(), vs.begin(), vs.end());
    std::sort(rec.total_vertices.begin(), rec.total_vertices.end());
    rec.total_edges = detail::internal_edges(g, w);
    rec.total_edges.insert(rec.total_edges.end(), cross.begin(), cross.end());
    std::sort(rec.total_edges.begin(), rec.total_edges.end());
    out.push_back(std::move(rec));
  }
  return out;
}

// ---------------------------------------------------------------------------
// max_disjoint_family: exact maximum independent set in the conflict graph.
// ---------------------------------------------------------------------------
enum class DisjointMode { vertex_disjoint, totally_edge_disjoint, totally_vertex_disjoint };

inline std::vector<AppearanceRecord> max_disjoint_family(
    const std::vector<AppearanceRecord>& records, DisjointMode mode) {
  int k = static_cast<int>(records.size());
  auto conflicts = [&](int i, int j) {
    auto meet = [](const auto& a, const auto& b) {
      auto ia = a.begin();
      auto ib = b.begin();
      while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else return true;
      }
      return false;
    };
    switch (mode) {
      case DisjointMode::vertex_disjoint:
        return meet(records[i].site, records[j].site);
      case DisjointMode::totally_edge_disjoint:
        return meet(records[i].total_edges, records[j].total_edges);
      case DisjointMode::totally_vertex_disjoint:
        return meet(records[i].total_vertices, records[j].total_vertices);
    }
    return false;
  };
  std::vector<std::vector<char>> conf(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      conf[i][j] = conf[j][i] = conflicts(i, j);

  std::vector<int> best, cur;
  auto rec = [&](auto&& self, int i) -> void {
    if (cur.size() + (k - i) <= best.size()) return;  // bound
    if (i == k) { best = cur; return; }
    bool ok = true;
    for (int c : cur)
      if (conf[c][i]) { ok = false; break; }
    if (ok) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
    self(self, i + 1);
  };
  rec(rec, 0);
  std::vector<AppearanceRecord> out;
  for (int i : best) out.push_back(records[i]);
  return out;
}

// The 2-appearance intersection bound Lambda(|J|) =
// (|J|+2) * C(|J|+2,|J|) * C(5 + 5^2 + ... + 5^{|J|+1}, |J|+1).
inline unsigned long long lambda_bound(int j) {
  auto choose = [](unsigned long long n, unsigned long long r) {
    unsigned long long acc = 1;
    for (unsigned long long i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
    return acc;
  };
  unsigned long long pow5 = 0, p = 1;
  for (int i = 1; i <= j + 1; ++i) { p *= 5; pow5 += p; }
  return static_cast<unsigned long long>(j + 2) * choose(j + 2, j) *
         choose(pow5, j + 1);
}

}  // namespace planarlab
