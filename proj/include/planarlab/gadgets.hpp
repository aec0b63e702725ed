#pragma once

// Regularization gadgets: for D2 in {3, 5}, a planar "filler" graph L_{D2}
// with one deficient vertex of degree D2 - 1 and all other vertices of
// degree D2.  Attaching D2 - deg(v) copies to each deficient host vertex
// turns any planar graph of maximum degree <= D2 into a D2-regular planar
// supergraph, so 3- and 5-regular embeddability is always a yes.

#include "planarlab/embed.hpp"

namespace planarlab {

// L3: 5 vertices; the deficient vertex is 5 (degree 2), the rest degree 3.
inline LabeledGraph gadget_l3() {
  LabeledGraph g(5);
  // a=1, b=2, c=3, t=4, d=5.
  for (auto& e : std::vector<Edge>{{1, 2}, {2, 3}, {2, 4}, {1, 4},
                                   {3, 4}, {1, 5}, {5, 3}})
    g.add_edge(e.first, e.second);
  return g;
}

// L5: 15 vertices; the deficient vertex is 15 (degree 4), the rest degree 5.
// Found by randomized planar local search; the parity and edge-count
// constraints rule out any such gadget on fewer than 13 vertices, and no
// 13-vertex example was found.
inline LabeledGraph gadget_l5() {
  LabeledGraph g(15);
  for (auto& e : std::vector<Edge>{
           {1, 4}, {1, 5}, {1, 9}, {1, 12}, {1, 15}, {2, 9}, {2, 10}, {2, 12},
           {2, 13}, {2, 15}, {3, 4}, {3, 6}, {3, 8}, {3, 10}, {3, 12}, {4, 5},
           {4, 8}, {4, 12}, {5, 7}, {5, 8}, {5, 14}, {6, 8}, {6, 10}, {6, 11},
           {6, 14}, {7, 9}, {7, 11}, {7, 13}, {7, 14}, {8, 14}, {9, 13},
           {9, 15}, {10, 11}, {10, 13}, {11, 13}, {11, 14}, {12, 15}})
    g.add_edge(e.first, e.second);
  return g;
}

// Attach D2 - deg(v) copies of L_{D2} to every deficient vertex of h; the
// result is D2-regular, planar, simple, and contains h on its own labels.
inline LabeledGraph regular_supergraph(const LabeledGraph& h, int D2) {
  if (D2 != 3 && D2 != 5)
    throw std::invalid_argument("regular_supergraph: D2 must be 3 or 5");
  auto deg = h.degrees();
  for (int v = 1; v <= h.n; ++v)
    if (deg[v] > D2)
      throw std::invalid_argument("regular_supergraph: maximum degree exceeds D2");
  if (!is_planar(h))
    throw std::invalid_argument("regular_supergraph: non-planar input");

  LabeledGraph gadget = D2 == 3 ? gadget_l3() : gadget_l5();
  int deficient = gadget.n;  // by construction the last vertex is deficient
  int copies = 0;
  for (int v = 1; v <= h.n; ++v) copies += D2 - deg[v];
  if (copies == 0) return h;

  LabeledGraph out(h.n + copies * gadget.n);
  for (auto& e : h.edges) out.add_edge(e.first, e.second);
  int base = h.n;
  for (int v = 1; v <= h.n; ++v) {
    for (int k = 0; k < D2 - deg[v]; ++k) {
      for (auto& e : gadget.edges) out.add_edge(base + e.first, base + e.second);
      out.add_edge(v, base + deficient);
      base += gadget.n;
    }
  }
  {
    auto d = out.degrees();
    for (int v = 1; v <= out.n; ++v) assert(d[v] == D2);
    assert(is_planar(out));
  }
  return out;
}

}  // namespace planarlab
