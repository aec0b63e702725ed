#pragma once

// Addable-non-edge analysis: add(G), the exact minimum add(n,m) over all
// planar (n,m)-graphs, closed-form lower bounds, and the extremal
// double-wheel "spine" construction family attaining the minimum in the
// dense regime m >= 2n-3.

#include <cassert>
#include <variant>

#include "planarlab/canonical.hpp"
#include "planarlab/embed.hpp"

namespace planarlab {

struct AddableSet {
  LabeledGraph host;
  std::vector<Edge> nonedges;  // sorted
  int size() const { return static_cast<int>(nonedges.size()); }
};

// Exactly the non-edges whose single insertion keeps the graph planar.
inline AddableSet addable_set(const LabeledGraph& g) {
  if (!is_planar(g)) throw std::invalid_argument("addable_set: non-planar host");
  AddableSet out{g, {}};
  for (auto& e : g.non_edges()) {
    LabeledGraph h = g;
    h.add_edge(e.first, e.second);
    if (is_planar(h)) out.nonedges.push_back(e);
  }
  return out;
}

// Closed-form lower bounds on add(n,m): the component-count bound
// (n+m)(n-m-1)/2 in the sparse regime, and ceil(3/2 (3n-6-m)) for
// n >= 6, m >= 8; floored at zero.
inline int lower_bound_add(int n, int m) {
  if (n < 1) throw std::invalid_argument("lower_bound_add: n < 1");
  long best = 0;
  if (m <= n - 2)  // at least n-m components force cross-component pairs
    best = std::max(best, static_cast<long>(n + m) * (n - m - 1) / 2);
  if (n >= 6 && m >= 8) {
    long t = 3L * (3L * n - 6 - m);
    long c = t >= 0 ? (t + 1) / 2 : 0;  // ceil(t/2) for non-negative t
    best = std::max(best, c);
  }
  return static_cast<int>(best);
}

// ---------------------------------------------------------------------------
// min_addable: exact minimum over P(n,m) by isomorphism-class enumeration.
// ---------------------------------------------------------------------------
struct MinAddCertificate {
  int n = 0, m = 0;
  int value = 0;
  LabeledGraph witness;
};
struct EmptyClass {
  int n = 0, m = 0;
};
using MinAddResult = std::variant<MinAddCertificate, EmptyClass>;

inline constexpr int kMinAddDefaultMaxN = 7;

// All of add(n, m) for m = 0..min(3n-6, C(n,2)) in one class sweep;
// |add(.)| is isomorphism-invariant, so one representative per class
// suffices.
inline std::vector<MinAddResult> min_addable_table(int n, int max_n_bound = kMinAddDefaultMaxN) {
  if (n < 1 || n > max_n_bound)
    throw std::invalid_argument("min_addable: order exceeds enumeration bound");
  int cap = n * (n - 1) / 2;
  if (n >= 3) cap = std::min(cap, 3 * n - 6);
  auto levels = iso_classes_by_edges(
      n, cap, [](const LabeledGraph& g) { return is_planar(g); });
  std::vector<MinAddResult> out;
  for (int m = 0; m <= cap; ++m) {
    if (m >= static_cast<int>(levels.size()) || levels[m].empty()) {
      out.push_back(EmptyClass{n, m});
      continue;
    }
    MinAddCertificate best{n, m, -1, {}};
    for (const auto& g : levels[m]) {
      int a = addable_set(g).size();
      if (best.value < 0 || a < best.value) {
        best.value = a;
        best.witness = g;
      }
    }
    out.push_back(best);
  }
  return out;
}

inline MinAddResult min_addable(int n, int m, int max_n_bound = kMinAddDefaultMaxN) {
  int cap = n * (n - 1) / 2;
  if (n >= 3) cap = std::min(cap, 3 * n - 6);
  if (m < 0 || m > cap) return EmptyClass{n, m};
  return min_addable_table(n, max_n_bound)[m];
}

// ---------------------------------------------------------------------------
// Spine construction.
// ---------------------------------------------------------------------------
struct SpineParams {
  int core = 0;      // double-wheel triangulation order (>= 4; >= 5 non-degenerate)
  int inserted = 0;  // new vertices subdividing spine lines
  int isolated = 0;

  bool valid() const { return core >= 4 && inserted >= 0 && isolated >= 0; }
};

namespace detail {

// Spine lines of the core: the rim-cycle edges of the double wheel
// (hubs 1 and 2, rim 3..core); the degenerate core = 4 is K4 with lines
// {3,4} and {1,2}.
inline std::vector<Edge> spine_lines(int core) {
  if (core == 4) return {{3, 4}, {1, 2}};
  std::vector<Edge> lines;
  for (int i = 3; i < core; ++i) lines.push_back({i, i + 1});
  lines.push_back({3, core});
  return lines;
}

inline LabeledGraph double_wheel(int core) {
  LabeledGraph g(core);
  if (core == 4) {
    for (int u = 1; u <= 4; ++u)
      for (int v = u + 1; v <= 4; ++v) g.add_edge(u, v);
    return g;
  }
  for (auto& e : spine_lines(core)) g.add_edge(e.first, e.second);  // rim cycle
  for (int r = 3; r <= core; ++r) {
    g.add_edge(1, r);
    g.add_edge(2, r);
  }
  return g;
}

}  // namespace detail

// The double-wheel triangulation on `core` vertices with `inserted` new
// vertices distributed as evenly as possible over the core-2 spine lines
// (subdividing them), plus isolated vertices.  (3*core - 6) + inserted edges.
inline LabeledGraph build_spine_graph(const SpineParams& p) {
  if (!p.valid()) throw std::invalid_argument("build_spine_graph: invalid params");
  auto lines = detail::spine_lines(p.core);
  int nlines = static_cast<int>(lines.size());
  LabeledGraph g(p.core + p.inserted + p.isolated);
  LabeledGraph core = detail::double_wheel(p.core);
  int q = p.inserted / nlines, r = p.inserted % nlines;
  int next = p.core;
  for (int i = 0; i < nlines; ++i) {
    int k = q + (i < r ? 1 : 0);  // vertices inserted on this line
    auto [a, b] = lines[i];
    core.remove_edge(a, b);
    int prev = a;
    for (int j = 0; j < k; ++j) {
      int w = ++next;
      g.add_edge(prev, w);
      prev = w;
    }
    g.add_edge(prev, b);
  }
  for (auto& e : core.edges) g.add_edge(e.first, e.second);
  return g;
}

// The exact extremal construction for m >= 2n-3: spine parameters plus the
// odd-parity extra edge (first inserted vertex joined to hub 1), so that
// |add| attains ceil(3/2 (3n-6-m)).
inline SpineParams spine_params_for(int n, int m) {
  if (!(n >= 4 && 2 * n - 3 <= m && m <= 3 * n - 6))
    throw std::invalid_argument("spine_params_for: need 2n-3 <= m <= 3n-6");
  SpineParams p;
  p.core = (m - n) / 2 + 3;
  p.inserted = (3 * n - m + 1) / 2 - 3;  // ceil((3n-m)/2) - 3
  p.isolated = 0;
  assert(p.core + p.inserted == n);
  return p;
}

inline LabeledGraph spine_extremal_graph(int n, int m) {
  SpineParams p = spine_params_for(n, m);
  LabeledGraph g = build_spine_graph(p);
  if ((m - n) % 2 != 0) {
    // One edge short of m; join the first inserted vertex to hub 1.
    assert(p.inserted >= 1);
    g.add_edge(p.core + 1, 1);
  }
  assert(g.m() == m);
  return g;
}

}  // namespace planarlab
