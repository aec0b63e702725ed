#pragma once

// Planarity testing with combinatorial embedding extraction.
//
// The core test is Demoucron's face-insertion algorithm run per biconnected
// block of a simple graph: grow an embedded subgraph from a cycle, repeatedly
// choosing a fragment with the fewest admissible faces and drawing one of its
// paths into such a face.  A fragment with no admissible face certifies
// non-planarity.  Block rotations are concatenated at cut vertices (which
// preserves genus 0), and multigraphs are handled by subdividing loops and
// parallel edges before testing and contracting the rotation afterwards.
//
// Faces are maintained as dart walks, so the rotation system falls out of the
// standard identity  sigma(d) = face_successor(reverse(d)).
//
// Non-planar inputs yield a witness: edges are deleted while non-planarity
// persists, and the edge-minimal residue is exactly a subdivision of K5 or
// K3,3 (every surviving edge lies on the subdivision), classified by branch
// degrees.

#include <array>
#include <cassert>
#include <map>
#include <numeric>
#include <queue>

#include "planarlab/graph.hpp"

namespace planarlab {

// Darts: edge e contributes darts 2e (first->second) and 2e+1 (second->first).
inline int dart_rev(int d) { return d ^ 1; }

namespace detail {

struct DartView {
  const std::vector<Edge>* edges;
  int tail(int d) const {
    const Edge& e = (*edges)[d >> 1];
    return (d & 1) ? e.second : e.first;
  }
  int head(int d) const { return tail(d ^ 1); }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// RotationEmbedding
// ---------------------------------------------------------------------------
struct RotationEmbedding {
  PlanarMultigraph host;
  // rotation[v] = cyclic order of darts with tail v (1-based vertex index).
  std::vector<std::vector<int>> rotation;

  // Face traversal: next dart = cyclic successor (at its tail) of the
  // reversed dart.  Every dart lies on exactly one closed walk.
  std::vector<std::vector<int>> faces() const {
    int m = host.m();
    std::vector<int> rot_next(2 * m, -1);
    for (int v = 1; v <= host.n; ++v) {
      const auto& r = rotation[v];
      for (size_t i = 0; i < r.size(); ++i)
        rot_next[r[i]] = r[(i + 1) % r.size()];
    }
    std::vector<std::vector<int>> walks;
    std::vector<char> used(2 * m, 0);
    for (int d0 = 0; d0 < 2 * m; ++d0) {
      if (used[d0]) continue;
      std::vector<int> walk;
      int d = d0;
      do {
        used[d] = 1;
        walk.push_back(d);
        d = rot_next[dart_rev(d)];
      } while (d != d0);
      walks.push_back(std::move(walk));
    }
    return walks;
  }

  int component_count() const {
    std::vector<int> comp(host.n + 1, -1);
    std::vector<std::vector<int>> adj(host.n + 1);
    for (auto& e : host.edges) {
      adj[e.first].push_back(e.second);
      adj[e.second].push_back(e.first);
    }
    int c = 0;
    for (int s = 1; s <= host.n; ++s) {
      if (comp[s] >= 0) continue;
      comp[s] = c;
      std::vector<int> stack{s};
      while (!stack.empty()) {
        int v = stack.back(); stack.pop_back();
        for (int w : adj[v]) if (comp[w] < 0) { comp[w] = c; stack.push_back(w); }
      }
      ++c;
    }
    return c;
  }

  // Derived face count: walks of components merge through a shared outer
  // face, so kappa_e edge-bearing components contribute walks - (kappa_e - 1)
  // faces (and an edgeless host has a single face).  This is the convention
  // under which n - m + f = 1 + kappa holds.
  int face_count() const {
    int edge_comps = 0;
    {
      std::vector<char> has_edge_comp;
      std::vector<int> comp(host.n + 1, -1);
      std::vector<std::vector<int>> adj(host.n + 1);
      for (auto& e : host.edges) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
      }
      for (int s = 1; s <= host.n; ++s) {
        if (comp[s] >= 0) continue;
        int c = static_cast<int>(has_edge_comp.size());
        has_edge_comp.push_back(0);
        comp[s] = c;
        std::vector<int> stack{s};
        while (!stack.empty()) {
          int v = stack.back(); stack.pop_back();
          if (!adj[v].empty()) has_edge_comp[c] = 1;
          for (int w : adj[v]) if (comp[w] < 0) { comp[w] = c; stack.push_back(w); }
        }
      }
      for (char h : has_edge_comp) edge_comps += h;
    }
    if (edge_comps == 0) return 1;
    return static_cast<int>(faces().size()) - (edge_comps - 1);
  }

  bool euler_ok() const {
    return host.n - host.m() + face_count() == 1 + component_count();
  }
};

// ---------------------------------------------------------------------------
// NonPlanarWitness: a K5 or K3,3 subdivision in the underlying simple graph.
// ---------------------------------------------------------------------------
struct NonPlanarWitness {
  bool is_k5 = false;  // otherwise K3,3
  std::vector<int> branch_vertices;            // 5 (K5) or 6 (K3,3)
  std::vector<std::vector<int>> paths;         // vertex sequences, branch..branch
};

struct EmbedResult {
  std::optional<RotationEmbedding> embedding;
  std::optional<NonPlanarWitness> witness;
  bool planar() const { return embedding.has_value(); }
};

// ===========================================================================
// Internal: Demoucron on a simple graph given as an edge list.
// ===========================================================================
namespace detail {

struct SimpleGraphView {
  int n;
  const std::vector<Edge>& edges;
  std::vector<std::vector<std::pair<int, int>>> adj;  // v -> (neighbor, edge id)

  SimpleGraphView(int n_, const std::vector<Edge>& es) : n(n_), edges(es), adj(n_ + 1) {
    for (int e = 0; e < static_cast<int>(es.size()); ++e) {
      adj[es[e].first].push_back({es[e].second, e});
      adj[es[e].second].push_back({es[e].first, e});
    }
  }
};

// Biconnected blocks as edge-id lists (standard DFS edge-stack algorithm).
inline std::vector<std::vector<int>> blocks_of(const SimpleGraphView& g) {
  int n = g.n;
  std::vector<int> num(n + 1, 0), low(n + 1, 0);
  std::vector<std::vector<int>> blocks;
  std::vector<int> edge_stack;
  std::vector<char> edge_seen(g.edges.size(), 0);
  int timer = 0;

  struct Frame { int v, parent_edge; size_t i; };
  for (int s = 1; s <= n; ++s) {
    if (num[s]) continue;
    std::vector<Frame> st{{s, -1, 0}};
    num[s] = low[s] = ++timer;
    while (!st.empty()) {
      Frame& f = st.back();
      if (f.i < g.adj[f.v].size()) {
        auto [w, e] = g.adj[f.v][f.i++];
        if (e == f.parent_edge) continue;
        if (!edge_seen[e]) { edge_seen[e] = 1; edge_stack.push_back(e); }
        if (!num[w]) {
          num[w] = low[w] = ++timer;
          st.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        int v = f.v, pe = f.parent_edge;
        st.pop_back();
        if (!st.empty()) {
          int p = st.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] >= num[p]) {
            std::vector<int> blk;
            while (true) {
              int e = edge_stack.back(); edge_stack.pop_back();
              blk.push_back(e);
              if (e == pe) break;
            }
            blocks.push_back(std::move(blk));
          }
        }
      }
    }
  }
  return blocks;
}

// Demoucron on one biconnected block.  On success appends the block's darts
// to rotation[v] in cyclic order; returns false if the block is non-planar.
// If `rotation` is null only the planarity verdict is computed.
inline bool embed_block(const SimpleGraphView& g, const std::vector<int>& block,
                        std::vector<std::vector<int>>* rotation) {
  DartView dv{&g.edges};
  if (block.size() == 1) {
    if (rotation) {
      int e = block[0];
      (*rotation)[g.edges[e].first].push_back(2 * e);
      (*rotation)[g.edges[e].second].push_back(2 * e + 1);
    }
    return true;
  }

  // Local adjacency restricted to the block.
  std::vector<char> in_block_e(g.edges.size(), 0);
  for (int e : block) in_block_e[e] = 1;
  std::map<int, std::vector<std::pair<int, int>>> badj;  // v -> (w, e)
  for (int e : block) {
    badj[g.edges[e].first].push_back({g.edges[e].second, e});
    badj[g.edges[e].second].push_back({g.edges[e].first, e});
  }

  // Find a cycle by DFS (a block with >= 2 edges contains one).
  std::vector<int> cycle_darts;
  {
    std::map<int, std::pair<int, int>> parent;  // v -> (parent vertex, edge)
    int start = g.edges[block[0]].first;
    std::vector<int> stack{start};
    parent[start] = {0, -1};
    int cu = -1, cv = -1, ce = -1;
    while (!stack.empty() && ce < 0) {
      int v = stack.back(); stack.pop_back();
      for (auto [w, e] : badj[v]) {
        if (e == parent[v].second) continue;
        if (parent.count(w)) {
          // Non-tree edge: close the cycle along the tree path cu..cv.
          cu = v; cv = w; ce = e;
          break;
        }
        parent[w] = {v, e};
        stack.push_back(w);
      }
    }
    assert(ce >= 0);
    // Tree paths to the root; splice at the lowest common ancestor.
    auto path_to_root = [&](int x) {
      std::vector<int> p{x};
      while (parent[x].first != 0) { x = parent[x].first; p.push_back(x); }
      return p;
    };
    std::vector<int> pu = path_to_root(cu), pv = path_to_root(cv);
    std::set<int> on_pu(pu.begin(), pu.end());
    std::vector<int> verts;  // cv -> lca -> cu
    int lca = -1;
    for (int x : pv) {
      verts.push_back(x);
      if (on_pu.count(x)) { lca = x; break; }
    }
    assert(lca >= 0);
    {
      std::vector<int> down;
      for (int x : pu) { if (x == lca) break; down.push_back(x); }
      for (auto it = down.rbegin(); it != down.rend(); ++it) verts.push_back(*it);
    }
    // Darts along consecutive tree edges, then ce back to cv.
    for (size_t i = 0; i + 1 < verts.size(); ++i) {
      int a = verts[i], b = verts[i + 1];
      // The tree edge joining a and b is the parent edge of the deeper one.
      int eid = (parent[a].first == b) ? parent[a].second : parent[b].second;
      assert((parent[a].first == b) || (parent[b].first == a));
      cycle_darts.push_back(g.edges[eid].first == a ? 2 * eid : 2 * eid + 1);
    }
    cycle_darts.push_back(g.edges[ce].first == cu ? 2 * ce : 2 * ce + 1);
  }

  std::vector<char> inH_e(g.edges.size(), 0), inH_v(g.n + 1, 0);
  for (int d : cycle_darts) { inH_e[d >> 1] = 1; inH_v[dv.tail(d)] = 1; }

  std::vector<std::vector<int>> faces;
  faces.push_back(cycle_darts);
  std::vector<int> revc;
  for (auto it = cycle_darts.rbegin(); it != cycle_darts.rend(); ++it)
    revc.push_back(dart_rev(*it));
  faces.push_back(revc);

  size_t embedded = cycle_darts.size();
  while (embedded < block.size()) {
    // Face vertex sets.
    std::vector<std::vector<char>> fv(faces.size(), std::vector<char>(g.n + 1, 0));
    for (size_t f = 0; f < faces.size(); ++f)
      for (int d : faces[f]) fv[f][dv.tail(d)] = 1;

    // Fragments: chords, then components of the unembedded part.
    struct Fragment {
      std::vector<int> attachments;
      std::vector<int> path_darts;  // a path between two distinct attachments
    };
    std::vector<Fragment> frags;

    for (int e : block) {
      if (inH_e[e]) continue;
      int a = g.edges[e].first, b = g.edges[e].second;
      if (inH_v[a] && inH_v[b])
        frags.push_back({{a, b}, {2 * e}});
    }
    {
      std::vector<int> comp(g.n + 1, -1);
      for (auto& [v, nb] : badj) {
        if (inH_v[v] || comp[v] >= 0) continue;
        // New component: BFS collecting attachments.
        int cid = v;
        std::vector<int> q{v}, members{v};
        comp[v] = cid;
        std::set<int> att;
        while (!q.empty()) {
          int x = q.back(); q.pop_back();
          for (auto [w, e] : badj[x]) {
            (void)e;
            if (inH_v[w]) { att.insert(w); continue; }
            if (comp[w] < 0) { comp[w] = cid; q.push_back(w); members.push_back(w); }
          }
        }
        // Path: from one attachment through the component to a different one.
        int a0 = *att.begin();
        int x0 = -1, e0 = -1;
        for (auto [w, e] : badj[a0])
          if (!inH_v[w] && comp[w] == cid) { x0 = w; e0 = e; break; }
        assert(x0 >= 0);
        std::map<int, std::pair<int, int>> par;  // vertex -> (prev, edge)
        std::queue<int> bfs;
        bfs.push(x0);
        par[x0] = {a0, e0};
        int bend = -1, bedge = -1, bprev = -1;
        while (!bfs.empty() && bend < 0) {
          int x = bfs.front(); bfs.pop();
          for (auto [w, e] : badj[x]) {
            if (w == a0) continue;
            if (inH_v[w]) { bend = w; bedge = e; bprev = x; break; }
            if (comp[w] == cid && !par.count(w)) { par[w] = {x, e}; bfs.push(w); }
          }
        }
        assert(bend >= 0);  // a block fragment always has >= 2 attachments
        std::vector<int> rpath;  // darts from bend back to a0
        rpath.push_back(g.edges[bedge].first == bprev ? 2 * bedge : 2 * bedge + 1);
        int x = bprev;
        while (x != a0) {
          auto [pv, pe] = par[x];
          rpath.push_back(g.edges[pe].first == pv ? 2 * pe : 2 * pe + 1);
          x = pv;
        }
        std::reverse(rpath.begin(), rpath.end());
        frags.push_back({std::vector<int>(att.begin(), att.end()), rpath});
      }
    }
    assert(!frags.empty());

    // Pick the fragment with the fewest admissible faces.
    int best = -1, best_count = -1, best_face = -1;
    for (size_t i = 0; i < frags.size(); ++i) {
      int cnt = 0, first_face = -1;
      for (size_t f = 0; f < faces.size(); ++f) {
        bool ok = true;
        for (int a : frags[i].attachments)
          if (!fv[f][a]) { ok = false; break; }
        if (ok) { ++cnt; if (first_face < 0) first_face = static_cast<int>(f); }
      }
      if (best < 0 || cnt < best_count) {
        best = static_cast<int>(i);
        best_count = cnt;
        best_face = first_face;
      }
      if (best_count == 0) break;
    }
    if (best_count == 0) return false;  // fragment with no admissible face

    // Draw the chosen path into the chosen face, splitting it in two.
    const std::vector<int>& P = frags[best].path_darts;
    int a = dv.tail(P.front()), b = dv.head(P.back());
    std::vector<int>& F = faces[best_face];
    int ia = -1, ib = -1;
    for (size_t i = 0; i < F.size(); ++i) {
      if (dv.head(F[i]) == a) ia = static_cast<int>(i);
      if (dv.head(F[i]) == b) ib = static_cast<int>(i);
    }
    assert(ia >= 0 && ib >= 0 && ia != ib);
    int k = static_cast<int>(F.size());
    std::vector<int> F1, F2;
    for (int i = (ia + 1) % k; ; i = (i + 1) % k) { F1.push_back(F[i]); if (i == ib) break; }
    for (auto it = P.rbegin(); it != P.rend(); ++it) F1.push_back(dart_rev(*it));
    for (int i = (ib + 1) % k; ; i = (i + 1) % k) { F2.push_back(F[i]); if (i == ia) break; }
    for (int d : P) F2.push_back(d);

    faces[best_face] = std::move(F1);
    faces.push_back(std::move(F2));
    for (int d : P) {
      inH_e[d >> 1] = 1;
      inH_v[dv.tail(d)] = 1;
      inH_v[dv.head(d)] = 1;
      ++embedded;
    }
  }

  if (rotation) {
    // sigma(d) = face_successor(rev(d)); emit each vertex's dart cycle.
    std::map<int, int> fs;
    for (auto& F : faces)
      for (size_t i = 0; i < F.size(); ++i) fs[F[i]] = F[(i + 1) % F.size()];
    std::vector<char> emitted(2 * g.edges.size(), 0);
    for (auto& F : faces) {
      for (int d : F) {
        if (emitted[d]) continue;
        int v = dv.tail(d);
        int x = d;
        do {
          emitted[x] = 1;
          (*rotation)[v].push_back(x);
          x = fs[dart_rev(x)];
        } while (x != d);
      }
    }
  }
  return true;
}

// Planarity (and optionally rotation) of a simple graph.
inline bool embed_simple(int n, const std::vector<Edge>& edges,
                         std::vector<std::vector<int>>* rotation) {
  if (rotation) rotation->assign(n + 1, {});
  if (edges.size() >= 3 && n >= 3 &&
      edges.size() > 3 * static_cast<size_t>(n) - 6)
    return false;
  SimpleGraphView g(n, edges);
  for (auto& blk : blocks_of(g))
    if (!embed_block(g, blk, rotation)) return false;
  return true;
}

}  // namespace detail

// Fast boolean planarity for a simple edge list.
inline bool is_planar_simple(int n, const std::vector<Edge>& edges) {
  return detail::embed_simple(n, edges, nullptr);
}

inline bool is_planar(const LabeledGraph& g) {
  return is_planar_simple(g.n, g.edges);
}

inline bool is_planar(const PlanarMultigraph& g) {
  LabeledGraph s = g.underlying_simple();
  return is_planar_simple(s.n, s.edges);
}

// ---------------------------------------------------------------------------
// Kuratowski witness extraction (underlying simple graph).
// ---------------------------------------------------------------------------
inline NonPlanarWitness extract_witness(const LabeledGraph& g0) {
  LabeledGraph g = g0;
  assert(!is_planar(g));
  // Edge-minimal non-planar subgraph: every surviving edge lies on a
  // Kuratowski subdivision, so the residue is exactly one.
  for (size_t i = 0; i < g.edges.size();) {
    LabeledGraph h = g;
    h.edges.erase(h.edges.begin() + i);
    if (!is_planar(h)) g = h; else ++i;
  }
  auto deg = g.degrees();
  NonPlanarWitness w;
  for (int v = 1; v <= g.n; ++v)
    if (deg[v] >= 3) w.branch_vertices.push_back(v);
  std::vector<char> branch(g.n + 1, 0);
  for (int v : w.branch_vertices) branch[v] = 1;
  auto adj = g.adjacency();
  std::set<std::pair<int, int>> used;  // directed first steps already walked
  for (int b : w.branch_vertices) {
    for (int x : adj[b]) {
      if (used.count({b, x})) continue;
      std::vector<int> path{b};
      int prev = b, cur = x;
      used.insert({b, x});
      while (!branch[cur]) {
        path.push_back(cur);
        int nxt = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
        prev = cur; cur = nxt;
      }
      used.insert({cur, prev});
      path.push_back(cur);
      w.paths.push_back(std::move(path));
    }
  }
  if (w.branch_vertices.size() == 5) {
    w.is_k5 = true;
    assert(w.paths.size() == 10);
  } else {
    w.is_k5 = false;
    assert(w.branch_vertices.size() == 6 && w.paths.size() == 9);
  }
  return w;
}

// ---------------------------------------------------------------------------
// embed(): full operation on multigraphs.
// ---------------------------------------------------------------------------
inline EmbedResult embed(const PlanarMultigraph& g) {
  EmbedResult res;
  // Subdivide: one vertex per non-loop edge, two per loop; the result is
  // simple and has the same planarity.
  int next = g.n;
  std::vector<Edge> sedges;
  // For every original dart, the subdivided edge whose v-end realizes it:
  // (edge id in sedges, dart direction at the original vertex).
  std::vector<int> orig_dart_of(0);
  std::map<std::pair<int, int>, int> sg_dart_to_orig;  // (sedge id, dir) -> dart
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges[e];
    if (u != v) {
      int x = ++next;
      int ea = static_cast<int>(sedges.size()); sedges.push_back(make_edge(u, x));
      int eb = static_cast<int>(sedges.size()); sedges.push_back(make_edge(x, v));
      sg_dart_to_orig[{ea, sedges[ea].first == u ? 0 : 1}] = 2 * e;
      sg_dart_to_orig[{eb, sedges[eb].first == v ? 0 : 1}] = 2 * e + 1;
    } else {
      int x = ++next, y = ++next;
      int ea = static_cast<int>(sedges.size()); sedges.push_back(make_edge(u, x));
      sedges.push_back(make_edge(x, y));
      int eb = static_cast<int>(sedges.size()); sedges.push_back(make_edge(y, u));
      sg_dart_to_orig[{ea, sedges[ea].first == u ? 0 : 1}] = 2 * e;
      sg_dart_to_orig[{eb, sedges[eb].first == u ? 0 : 1}] = 2 * e + 1;
    }
  }
  std::vector<std::vector<int>> srot;
  if (!detail::embed_simple(next, sedges, &srot)) {
    res.witness = extract_witness(g.underlying_simple());
    return res;
  }
  RotationEmbedding emb;
  emb.host = g;
  emb.rotation.assign(g.n + 1, {});
  for (int v = 1; v <= g.n; ++v) {
    for (int d : srot[v]) {
      auto it = sg_dart_to_orig.find({d >> 1, d & 1});
      assert(it != sg_dart_to_orig.end());
      emb.rotation[v].push_back(it->second);
    }
  }
  assert(emb.euler_ok());
  res.embedding = std::move(emb);
  return res;
}

inline EmbedResult embed(const LabeledGraph& g) {
  return embed(PlanarMultigraph::from_simple(g));
}

}  // namespace planarlab
