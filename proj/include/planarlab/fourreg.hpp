#pragma once

// Deciding whether a planar multigraph is a subgraph of a 4-regular planar
// multigraph on the same vertex set ("4-embeddability"), with witnesses.
//
// The driver works on discrepancy instances (R, f): find a planar multigraph
// M >= R with deg_M(v) = deg_R(v) + f(v).  The full decision runs in stages:
//   1. components are independent;
//   2. a cut edge splits the instance into its two sides;
//   3. in a 2-edge-connected piece, a cut vertex v has deg 4 and f(v) = 0,
//      so the piece splits at v;
//   4. a 2-connected base is split at a minimal 2-vertex-cut {u,v}; the small
//      side (made 2-cut-free by adding a uv edge) is solved by the matching
//      lemma, and the machine recurses on the other side.  The inserted uv
//      edge is carried in one of four augmented forms:
//        Type A: a bare edge;
//        Type B: subdivided by a vertex w with f(w) = 1;
//        Type C: subdivided by a vertex w with f(w) = 2;
//        Type D: a "diamond" (path u-a-m-b-v plus two apexes p,q adjacent to
//                a,m,b; f = 1 on the apexes, 0 elsewhere).
// The matching lemma (lemma2 here): a 2-cut-free base has an essentially
// unique embedding; build an auxiliary graph with f(x) copies of each vertex
// x, copies adjacent iff they can be joined by a new edge inside a common
// face, and test for a perfect matching.  Double edges whose augmented types
// differ are first reduced by the pairing rules (i)-(v); each reduction is
// undone on the witness by a local surgery.
//
// Every split and reduction records enough to reassemble a global witness;
// each surgery is validated (planarity + exact degrees), with a bounded
// exhaustive search as a last-resort fallback so a "yes" always carries a
// checked witness.

#include <cassert>
#include <functional>
#include <map>
#include <set>

#include "planarlab/connectivity.hpp"
#include "planarlab/embed.hpp"
#include "planarlab/matching.hpp"

namespace planarlab {

// ---------------------------------------------------------------------------
// DiscrepancyMap
// ---------------------------------------------------------------------------
struct DiscrepancyMap {
  PlanarMultigraph host;
  std::vector<int> f;  // index 1..n (f[0] unused)

  DiscrepancyMap() = default;
  DiscrepancyMap(PlanarMultigraph h, std::vector<int> fv)
      : host(std::move(h)), f(std::move(fv)) {
    if (static_cast<int>(f.size()) == host.n) f.insert(f.begin(), 0);
    if (static_cast<int>(f.size()) != host.n + 1)
      throw std::invalid_argument("DiscrepancyMap: f has wrong length");
    auto deg = host.degrees();
    long long total = 0;
    for (int v = 1; v <= host.n; ++v) {
      if (f[v] < 0)
        throw std::invalid_argument("DiscrepancyMap: negative discrepancy");
      if (f[v] > 4 - deg[v])
        throw std::invalid_argument("DiscrepancyMap: discrepancy inequality violated");
      total += f[v];
    }
    if (total % 2 != 0)
      throw std::invalid_argument("DiscrepancyMap: discrepancy parity violated");
  }

  // f(v) + deg(v) even for every v.
  bool even_refinement() const {
    auto deg = host.degrees();
    for (int v = 1; v <= host.n; ++v)
      if ((f[v] + deg[v]) % 2 != 0) return false;
    return true;
  }
};

struct SatisfyingWitness {
  PlanarMultigraph graph;
  RotationEmbedding embedding;
};

// Augmented base edge: type and the labels of its placed vertices in `red`.
// Type A: none; B/C: one subdivision vertex; D: five vertices {a,m,b,p,q}.
struct EdgeAug {
  char type = 'A';
  std::vector<int> placed;
};

// Public augmentation: `red` is `base` with the placed vertices appended; the
// base vertices keep labels 1..base.n inside red.
struct Augmentation {
  PlanarMultigraph base;
  PlanarMultigraph red;
  DiscrepancyMap f;                // f.host == red
  std::vector<EdgeAug> edge_map;   // parallel to base.edges

  static Augmentation trivial(PlanarMultigraph b, std::vector<int> fv) {
    Augmentation a;
    a.base = b;
    a.red = b;
    a.f = DiscrepancyMap(std::move(b), std::move(fv));
    a.edge_map.assign(a.base.m(), EdgeAug{});
    return a;
  }
};

namespace fourreg_detail {

// ---------------------------------------------------------------------------
// Inst: a discrepancy instance in a shared global label space.
// ---------------------------------------------------------------------------
struct Inst {
  std::vector<int> verts;        // sorted global labels
  std::vector<Edge> edges;       // multiset, loops allowed
  std::map<int, int> f;          // every vertex of `verts` has an entry

  std::map<int, int> degree() const {
    std::map<int, int> d;
    for (int v : verts) d[v] = 0;
    for (auto& e : edges) { d[e.first] += 1 + (e.first == e.second);
                            if (e.first != e.second) d[e.second]++; }
    return d;
  }

  long long f_sum() const {
    long long s = 0;
    for (auto& [v, fv] : f) s += fv;
    return s;
  }

  // Compact multigraph plus label maps (orig[i] = global label of i).
  std::pair<PlanarMultigraph, std::vector<int>> compact() const {
    std::map<int, int> pos;
    std::vector<int> orig(1, 0);
    for (int v : verts) { pos[v] = static_cast<int>(orig.size()); orig.push_back(v); }
    PlanarMultigraph g(static_cast<int>(verts.size()));
    for (auto& e : edges) g.add_edge(pos.at(e.first), pos.at(e.second));
    return {g, orig};
  }

  bool planar() const { return is_planar(compact().first); }
};

inline void sort_edges(std::vector<Edge>& es) { std::sort(es.begin(), es.end()); }

// Multiset containment a >= b.
inline bool edges_contain(std::vector<Edge> a, std::vector<Edge> b) {
  sort_edges(a);
  sort_edges(b);
  return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

// Multiset difference a - b (asserting b <= a).
inline std::vector<Edge> edges_minus(std::vector<Edge> a, std::vector<Edge> b) {
  sort_edges(a);
  sort_edges(b);
  std::vector<Edge> out;
  size_t j = 0;
  for (auto& e : a) {
    if (j < b.size() && b[j] == e) { ++j; continue; }
    out.push_back(e);
  }
  assert(j == b.size());
  return out;
}

// Does M satisfy (R, f): M over V(R), E(M) >= E(R), deg_M = deg_R + f, planar.
inline bool satisfies(const Inst& r, const std::vector<Edge>& m_edges) {
  std::set<int> vs(r.verts.begin(), r.verts.end());
  for (auto& e : m_edges)
    if (!vs.count(e.first) || !vs.count(e.second)) return false;
  if (!edges_contain(m_edges, r.edges)) return false;
  std::map<int, int> dm;
  for (int v : r.verts) dm[v] = 0;
  for (auto& e : m_edges) { dm[e.first] += 1 + (e.first == e.second);
                            if (e.first != e.second) dm[e.second]++; }
  auto dr = r.degree();
  for (int v : r.verts)
    if (dm[v] != dr[v] + r.f.at(v)) return false;
  Inst m{r.verts, m_edges, r.f};
  return m.planar();
}

// ---------------------------------------------------------------------------
// Bounded exhaustive search: the independent oracle and the small-case solver.
// Adds edges/loops in canonically non-decreasing order at the smallest vertex
// with positive residual, pruning by planarity (which is monotone here).
// ---------------------------------------------------------------------------
inline std::optional<std::vector<Edge>> satisfy_by_search(const Inst& inst) {
  if (inst.f_sum() % 2 != 0) return std::nullopt;
  auto [g, orig] = inst.compact();
  if (!is_planar(g)) return std::nullopt;
  int n = g.n;
  std::vector<int> r(n + 1, 0);
  for (int i = 1; i <= n; ++i) r[i] = inst.f.at(orig[i]);

  LabeledGraph simple = g.underlying_simple();
  std::vector<Edge> added;
  std::function<bool(int, int)> dfs = [&](int v, int minp) -> bool {
    while (v <= n && r[v] == 0) { ++v; minp = v; }
    if (v > n) return true;
    for (int u = minp; u <= n; ++u) {
      if (u == v) {
        if (r[v] < 2) continue;
        r[v] -= 2;
        added.push_back({v, v});
        if (dfs(v, u)) return true;
        added.pop_back();
        r[v] += 2;
      } else {
        if (r[u] == 0) continue;
        bool fresh_simple = !simple.has_edge(v, u);
        if (fresh_simple) {
          simple.add_edge(v, u);
          if (!is_planar(simple)) { simple.remove_edge(v, u); continue; }
        }
        --r[v]; --r[u];
        added.push_back(make_edge(v, u));
        if (dfs(v, u)) return true;
        added.pop_back();
        ++r[v]; ++r[u];
        if (fresh_simple) simple.remove_edge(v, u);
      }
    }
    return false;
  };
  if (!dfs(1, 1)) return std::nullopt;
  std::vector<Edge> m_edges = inst.edges;
  for (auto& e : added)
    m_edges.push_back(make_edge(orig[e.first], orig[e.second]));
  assert(satisfies(inst, m_edges));
  return m_edges;
}

// ---------------------------------------------------------------------------
// IAug: an augmentation in global label space.
// ---------------------------------------------------------------------------
struct IAug {
  std::vector<int> base_verts;      // sorted global labels
  std::vector<Edge> base_edges;     // multiset over base_verts
  std::vector<EdgeAug> aug;         // parallel to base_edges
  std::map<int, int> f;             // on all red vertices (base + placed)

  std::vector<Edge> red_edges_of(size_t i) const {
    auto [u, v] = base_edges[i];
    const EdgeAug& ea = aug[i];
    switch (ea.type) {
      case 'A': return {make_edge(u, v)};
      case 'B':
      case 'C': return {make_edge(u, ea.placed[0]), make_edge(ea.placed[0], v)};
      case 'D': {
        int a = ea.placed[0], m = ea.placed[1], b = ea.placed[2];
        int p = ea.placed[3], q = ea.placed[4];
        return {make_edge(u, a), make_edge(a, m), make_edge(m, b),
                make_edge(b, v), make_edge(p, a), make_edge(p, m),
                make_edge(p, b), make_edge(q, a), make_edge(q, m),
                make_edge(q, b)};
      }
    }
    assert(false);
    return {};
  }

  Inst red() const {
    Inst r;
    r.verts = base_verts;
    for (auto& ea : aug)
      for (int w : ea.placed) r.verts.push_back(w);
    std::sort(r.verts.begin(), r.verts.end());
    for (size_t i = 0; i < base_edges.size(); ++i)
      for (auto& e : red_edges_of(i)) r.edges.push_back(e);
    r.f = f;
    return r;
  }

  Inst base_inst() const {
    Inst b;
    b.verts = base_verts;
    b.edges = base_edges;
    for (int v : base_verts) b.f[v] = f.at(v);
    return b;
  }

  // Internal consistency: f defined exactly on red vertices, non-negative,
  // even total, and the discrepancy inequality on the red instance.
  void check() const {
    Inst r = red();
    assert(f.size() == r.verts.size());
    auto dr = r.degree();
    long long tot = 0;
    for (int v : r.verts) {
      assert(f.count(v));
      assert(f.at(v) >= 0);
      assert(f.at(v) <= 4 - dr[v]);
      tot += f.at(v);
    }
    assert(tot % 2 == 0);
  }
};

// f values the placed vertices of a new augmented edge carry.
inline void place_new_edge(IAug& a, int u, int v, char type, int& fresh) {
  a.base_edges.push_back(make_edge(u, v));
  EdgeAug ea;
  ea.type = type;
  if (type == 'B' || type == 'C') {
    int w = fresh++;
    ea.placed = {w};
    a.f[w] = (type == 'B') ? 1 : 2;
  } else if (type == 'D') {
    int va = fresh++, vm = fresh++, vb = fresh++, vp = fresh++, vq = fresh++;
    ea.placed = {va, vm, vb, vp, vq};
    a.f[va] = a.f[vm] = a.f[vb] = 0;
    a.f[vp] = a.f[vq] = 1;
  }
  a.aug.push_back(std::move(ea));
}

// ---------------------------------------------------------------------------
// lemma2: the matching engine on a 2-cut-free base.
// ---------------------------------------------------------------------------

// Auxiliary graph: one vertex per copy (vertex x appears f(x) times); copies
// of distinct vertices adjacent iff they lie on a common face; copies of one
// vertex always adjacent (a loop inside an incident face realizes the pair).
// `copy_of[i]` maps aux vertex i (1-based) to its global vertex label.
inline LabeledGraph build_auxiliary(const std::vector<std::set<int>>& face_sets,
                                    const std::map<int, int>& f,
                                    std::vector<int>* copy_of) {
  std::vector<int> owner(1, 0);
  for (auto& [v, fv] : f)
    for (int k = 0; k < fv; ++k) owner.push_back(v);
  LabeledGraph aux(static_cast<int>(owner.size()) - 1);
  for (int i = 1; i <= aux.n; ++i)
    for (int j = i + 1; j <= aux.n; ++j) {
      if (owner[i] == owner[j]) { aux.add_edge(i, j); continue; }
      for (auto& fs : face_sets)
        if (fs.count(owner[i]) && fs.count(owner[j])) { aux.add_edge(i, j); break; }
    }
  if (copy_of) *copy_of = owner;
  return aux;
}

struct RedOp {
  int rule;                 // 1..5
  Edge uv;
  EdgeAug removed;          // the deleted augmented part
  EdgeAug partner;          // the kept partner at reduction time
};

// One surgery undoing a reduction op on the witness M (global label edges).
// Returns candidate M's to validate (several when the surgery has a choice).
inline std::vector<std::vector<Edge>> undo_candidates(const RedOp& op,
                                                      const std::vector<Edge>& m) {
  auto [u, v] = op.uv;
  auto incident = [&](const std::vector<Edge>& es, int x) {
    std::vector<Edge> out;
    for (auto& e : es)
      if (e.first == x || e.second == x) out.push_back(e);
    return out;
  };
  // The unique "extra" partner of a placed vertex x: its incident edges minus
  // the listed structural neighbors.
  auto extra_of = [&](const std::vector<Edge>& es, int x,
                      std::vector<int> structural) -> std::optional<int> {
    std::vector<int> ends;
    for (auto& e : incident(es, x))
      ends.push_back(e.first == x ? e.second : e.first);
    for (int s : structural) {
      auto it = std::find(ends.begin(), ends.end(), s);
      if (it == ends.end()) return std::nullopt;
      ends.erase(it);
    }
    if (ends.size() != 1) return std::nullopt;
    return ends[0];
  };
  std::vector<std::vector<Edge>> cands;
  switch (op.rule) {
    case 1: {  // deleted Type A next to a Type B: put the bare edge back
      std::vector<Edge> m2 = m;
      m2.push_back(make_edge(u, v));
      cands.push_back(std::move(m2));
      break;
    }
    case 2:
    case 3: {  // deleted Type C (partner A or B): strand u-w-v plus loop at w
      int w = op.removed.placed[0];
      std::vector<Edge> m2 = m;
      m2.push_back(make_edge(u, w));
      m2.push_back(make_edge(w, v));
      m2.push_back({w, w});
      cands.push_back(std::move(m2));
      break;
    }
    case 4: {  // deleted Type D (partner B with vertex w1): reroute w1's extra
      int w1 = op.partner.placed[0];
      auto z = extra_of(m, w1, {u, v});
      if (!z) break;
      int a = op.removed.placed[0], mm = op.removed.placed[1],
          b = op.removed.placed[2], p = op.removed.placed[3],
          q = op.removed.placed[4];
      for (int swap = 0; swap < 2; ++swap) {
        int pp = swap ? q : p, qq = swap ? p : q;
        std::vector<Edge> m2 = edges_minus(m, {make_edge(w1, *z)});
        for (auto& e : std::vector<Edge>{make_edge(u, a), make_edge(a, mm),
                                         make_edge(mm, b), make_edge(b, v),
                                         make_edge(p, a), make_edge(p, mm),
                                         make_edge(p, b), make_edge(q, a),
                                         make_edge(q, mm), make_edge(q, b),
                                         make_edge(pp, w1), make_edge(qq, *z)})
          m2.push_back(e);
        cands.push_back(std::move(m2));
      }
      break;
    }
    case 5: {  // deleted Type C (partner D): hang w off one apex's extra edge
      int w = op.removed.placed[0];
      int a = op.partner.placed[0], mm = op.partner.placed[1],
          b = op.partner.placed[2];
      for (int apex : {op.partner.placed[3], op.partner.placed[4]}) {
        auto z = extra_of(m, apex, {a, mm, b});
        if (!z) continue;
        std::vector<Edge> m2 = edges_minus(m, {make_edge(apex, *z)});
        m2.push_back(make_edge(u, w));
        m2.push_back(make_edge(w, v));
        m2.push_back(make_edge(w, apex));
        m2.push_back(make_edge(w, *z));
        cands.push_back(std::move(m2));
      }
      break;
    }
  }
  return cands;
}

inline std::optional<std::vector<Edge>> solve_lemma2(const IAug& a0) {
  a0.check();
  Inst red0 = a0.red();

  // Small bases (and the rare base with loops, which lacks the unique
  // embedding the face analysis needs) go to the exhaustive solver.
  bool base_loop = false;
  for (auto& e : a0.base_edges) base_loop |= (e.first == e.second);
  if (a0.base_verts.size() <= 4 || base_loop) return satisfy_by_search(red0);

  // The matching engine needs 2-cut-freeness (stage 4 guarantees it).
  {
    auto [bg, orig] = a0.base_inst().compact();
    (void)orig;
    assert(!minimal_two_cut(bg).has_value());
  }

  // --- Double-edge reduction: rules (i)-(v) on mixed-type parallel edges ---
  IAug a = a0;
  std::vector<RedOp> ops;
  auto type_rank = [](char t) { return t == 'A' ? 0 : t == 'B' ? 1 : t == 'C' ? 2 : 3; };
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<Edge, std::vector<size_t>> by_pair;
    for (size_t i = 0; i < a.base_edges.size(); ++i)
      by_pair[a.base_edges[i]].push_back(i);
    for (auto& [uv, idxs] : by_pair) {
      if (idxs.size() < 2) continue;
      // Two lowest-ranked distinct types present on this pair.
      std::vector<size_t> sorted = idxs;
      std::sort(sorted.begin(), sorted.end(), [&](size_t x, size_t y) {
        return type_rank(a.aug[x].type) < type_rank(a.aug[y].type);
      });
      size_t i1 = sorted[0], i2 = sorted.size();
      for (size_t k = 1; k < sorted.size(); ++k)
        if (a.aug[sorted[k]].type != a.aug[i1].type) { i2 = k; break; }
      if (i2 == sorted.size()) continue;  // all one type: nothing to reduce
      size_t j2 = sorted[i2];
      char t1 = a.aug[i1].type, t2 = a.aug[j2].type;
      size_t del;
      int rule;
      if (t1 == 'A' && t2 == 'B') { del = i1; rule = 1; }
      else if (t1 == 'A' && t2 == 'C') { del = j2; rule = 2; }
      else if (t1 == 'B' && t2 == 'C') { del = j2; rule = 3; }
      else if (t1 == 'B' && t2 == 'D') { del = j2; rule = 4; }
      else if (t1 == 'C' && t2 == 'D') { del = i1; rule = 5; }
      else { assert(t1 == 'A' && t2 == 'D'); return std::nullopt; }
      size_t keep = (del == i1) ? j2 : i1;
      RedOp op{rule, uv, a.aug[del], a.aug[keep]};
      for (int w : a.aug[del].placed) a.f.erase(w);
      a.base_edges.erase(a.base_edges.begin() + del);
      a.aug.erase(a.aug.begin() + del);
      ops.push_back(std::move(op));
      changed = true;
      break;  // maps are stale; rescan
    }
  }

  // --- Embed the reduced red graph (unique up to reflection and per-diamond
  //     apex swaps, which are enumerated below) ---
  Inst red = a.red();
  auto [rg, orig] = red.compact();
  std::map<int, int> pos;
  for (size_t i = 1; i < orig.size(); ++i) pos[orig[i]] = static_cast<int>(i);
  auto er = embed(rg);
  if (!er.planar()) return std::nullopt;
  auto walks = er.embedding->faces();
  // Face walks as global-label vertex sequences.
  std::vector<std::vector<int>> face_walks;
  for (auto& w : walks) {
    std::vector<int> seq;
    for (int d : w) {
      const Edge& e = rg.edges[d >> 1];
      seq.push_back(orig[(d & 1) ? e.second : e.first]);
    }
    face_walks.push_back(std::move(seq));
  }

  // Diamond apexes: swapping p and q is a red-graph automorphism that flips
  // which side face each apex sees, so both orientations must be tried.
  std::vector<std::pair<int, int>> apex_pairs;
  for (size_t i = 0; i < a.base_edges.size(); ++i)
    if (a.aug[i].type == 'D')
      apex_pairs.push_back({a.aug[i].placed[3], a.aug[i].placed[4]});
  assert(apex_pairs.size() <= 12);

  // Undo the double-edge reductions in reverse order on a witness of the
  // reduced instance; nullopt when some surgery cannot be validated.
  auto undo_all = [&](std::vector<Edge> cur) -> std::optional<std::vector<Edge>> {
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
      bool undone = false;
      for (auto& cand : undo_candidates(*it, cur))
        if (Inst{red0.verts, cand, red0.f}.planar()) {
          cur = cand;
          undone = true;
          break;
        }
      if (!undone) return std::nullopt;
    }
    if (!satisfies(red0, cur)) return std::nullopt;
    return cur;
  };

  long long need = red.f_sum();
  if (need == 0) {
    if (!satisfies(red, red.edges)) return std::nullopt;
    if (auto m = undo_all(red.edges)) return m;
    auto rescue = satisfy_by_search(red0);
    assert(rescue.has_value());
    return rescue;
  }

  bool matched_any = false;
  for (unsigned mask = 0; mask < (1u << apex_pairs.size()); ++mask) {
    // Orientation = relabeling p<->q for the selected diamonds.
    std::map<int, int> pi;
    for (size_t i = 0; i < apex_pairs.size(); ++i)
      if (mask & (1u << i)) {
        pi[apex_pairs[i].first] = apex_pairs[i].second;
        pi[apex_pairs[i].second] = apex_pairs[i].first;
      }
    auto relab = [&](int x) { auto it = pi.find(x); return it == pi.end() ? x : it->second; };
    std::vector<std::vector<int>> fw;
    std::vector<std::set<int>> fsets;
    for (auto& w : face_walks) {
      std::vector<int> seq;
      for (int x : w) seq.push_back(relab(x));
      fsets.push_back(std::set<int>(seq.begin(), seq.end()));
      fw.push_back(std::move(seq));
    }

    std::vector<int> copy_of;
    LabeledGraph aux = build_auxiliary(fsets, a.f, &copy_of);
    auto pm = perfect_matching(aux);
    if (!pm) continue;
    matched_any = true;

    // Assign each matched pair to a common face; per face, collect corner
    // tokens and re-pair consecutively (non-crossing; per-vertex counts are
    // what the degrees need, so re-pairing within a face is harmless).
    std::vector<std::vector<std::pair<size_t, int>>> tokens(fw.size());
    bool ok = true;
    for (auto& [ci, cj] : pm->pairs) {
      int x = copy_of[ci], y = copy_of[cj];
      int fi = -1;
      if (x == y) {
        for (size_t t = 0; t < fsets.size() && fi < 0; ++t)
          if (fsets[t].count(x)) fi = static_cast<int>(t);
      } else {
        for (size_t t = 0; t < fsets.size() && fi < 0; ++t)
          if (fsets[t].count(x) && fsets[t].count(y)) fi = static_cast<int>(t);
      }
      if (fi < 0) { ok = false; break; }
      auto corner = [&](int vtx) -> size_t {
        for (size_t t = 0; t < fw[fi].size(); ++t)
          if (fw[fi][t] == vtx) return t;
        assert(false);
        return 0;
      };
      tokens[fi].push_back({corner(x), x});
      tokens[fi].push_back({corner(y), y});
    }
    if (!ok) continue;
    std::vector<Edge> m = red.edges;
    for (auto& tk : tokens) {
      std::sort(tk.begin(), tk.end());
      assert(tk.size() % 2 == 0);
      for (size_t t = 0; t + 1 < tk.size(); t += 2)
        m.push_back(make_edge(tk[t].second, tk[t + 1].second));
    }
    if (!satisfies(red, m)) continue;  // defensive; pairing should be drawable
    if (auto full = undo_all(m)) return full;
    // Surgery failed for this orientation; try the next one, then fall back.
  }

  // No orientation produced a drawable witness.  Ground truth from the
  // exhaustive solver both rescues witness construction and checks the
  // auxiliary-graph policy: a perfect matching must exist in some
  // orientation exactly when the instance is satisfiable.
  {
    auto ground = satisfy_by_search(red0);
    assert(matched_any == ground.has_value());
    return ground;
  }
}

// ---------------------------------------------------------------------------
// Stage 4: split at a minimal 2-vertex-cut.
// ---------------------------------------------------------------------------
struct StepInfo {
  bool base = false;           // no 2-cut (or <= 3 vertices): lemma2 applies
  bool neg = false;            // resolved unsatisfiable
  std::optional<std::vector<Edge>> resolved;  // solved in place (case c small)
  int u = 0, v = 0;            // the cut actually used for the insertion
  std::string label;           // "a_i", "a_ii", "b_i", "b_ii", "c_small", "c_shift"
  IAug next;                   // recursion target
  char combine = 0;            // 'B' (case i), 'A', 'D', 'C' (three-way route 3)
  std::vector<Edge> m1;        // solved-side witness ('B'/'A'/'D')
  std::optional<std::vector<Edge>> m1_bare, m1_diamond;  // route 3 ('C')
  bool solved_prime = false, solved_dprime = false;      // (ii) variant verdicts
  int w1 = 0, w2 = 0;          // case (i) bridging vertices
  std::vector<int> d1, d2;     // inserted diamond vertices (solved side / next)
  int cw = 0;                  // inserted Type C vertex on `next` (route 3)
};

using SideSolver = std::function<std::optional<std::vector<Edge>>(const IAug&)>;

// Build the two side augmentations for a cut (u,v) with side-1 vertex set s1.
// `keep_on_side1`: case (b) keeps f(u), f(v) (and the u-v base edges) on the
// solved side; case (a) moves them to the recursed side.
struct SplitParts {
  std::vector<size_t> e1, euv, e2;  // indices into base_edges
};

inline SplitParts split_parts(const IAug& a, int u, int v, const std::set<int>& s1) {
  SplitParts p;
  for (size_t i = 0; i < a.base_edges.size(); ++i) {
    auto [x, y] = a.base_edges[i];
    if (s1.count(x) || s1.count(y)) p.e1.push_back(i);
    else if ((x == u && y == v) || (x == v && y == u)) p.euv.push_back(i);
    else p.e2.push_back(i);
  }
  return p;
}

inline IAug make_side(const IAug& a, const std::vector<size_t>& idxs,
                      const std::set<int>& vset, int u, int v, bool zero_uv) {
  IAug s;
  s.base_verts.assign(vset.begin(), vset.end());
  for (size_t i : idxs) {
    s.base_edges.push_back(a.base_edges[i]);
    s.aug.push_back(a.aug[i]);
  }
  for (int x : s.base_verts) s.f[x] = a.f.at(x);
  for (auto& ea : s.aug)
    for (int w : ea.placed) s.f[w] = a.f.at(w);
  if (zero_uv) { s.f[u] = 0; s.f[v] = 0; }
  return s;
}

// The shared (a)/(b) machinery.  side1 is solved by `solver1`; the result
// describes the recursion target and how to stitch witnesses.
inline StepInfo run_case(const IAug& a, int u, int v, const std::set<int>& s1,
                         bool case_b, const SideSolver& solver1, int& fresh,
                         const char* label_prefix) {
  StepInfo info;
  info.u = u;
  info.v = v;
  SplitParts parts = split_parts(a, u, v, s1);

  std::set<int> v1set = s1;
  v1set.insert(u);
  v1set.insert(v);
  std::set<int> v2set;
  for (int x : a.base_verts) if (!s1.count(x)) v2set.insert(x);

  // Case (a): u-v base edges and f(u), f(v) travel with side 2.
  // Case (b): they travel with side 1.
  std::vector<size_t> side1_idx = parts.e1, side2_idx = parts.e2;
  if (case_b) side1_idx.insert(side1_idx.end(), parts.euv.begin(), parts.euv.end());
  else side2_idx.insert(side2_idx.end(), parts.euv.begin(), parts.euv.end());

  IAug s1a = make_side(a, side1_idx, v1set, u, v, /*zero_uv=*/!case_b);
  IAug s2a = make_side(a, side2_idx, v2set, u, v, /*zero_uv=*/case_b);

  long long p1 = 0;
  for (auto& [x, fx] : s1a.f) p1 += fx;

  if (p1 % 2 != 0) {
    // Variant (i): both inserted edges are Type B.
    info.label = std::string(label_prefix) + "_i";
    info.combine = 'B';
    IAug c1 = s1a;
    place_new_edge(c1, u, v, 'B', fresh);
    info.w1 = c1.aug.back().placed[0];
    c1.check();
    auto m1 = solver1(c1);
    if (!m1) { info.neg = true; return info; }
    info.m1 = *m1;
    IAug c2 = s2a;
    place_new_edge(c2, u, v, 'B', fresh);
    info.w2 = c2.aug.back().placed[0];
    c2.check();
    info.next = std::move(c2);
    return info;
  }

  // Variant (ii): the three-way disjunction over bare / diamond / f=2 forms.
  info.label = std::string(label_prefix) + "_ii";
  IAug c1p = s1a;
  place_new_edge(c1p, u, v, 'A', fresh);
  c1p.check();
  auto m1p = solver1(c1p);

  IAug c1d = s1a;
  place_new_edge(c1d, u, v, 'D', fresh);
  info.d1 = c1d.aug.back().placed;
  c1d.check();
  auto m1d = solver1(c1d);

  info.solved_prime = m1p.has_value();
  info.solved_dprime = m1d.has_value();

  if (m1p && m1d) {
    info.combine = 'C';
    info.m1_bare = m1p;
    info.m1_diamond = m1d;
    IAug c2 = s2a;
    place_new_edge(c2, u, v, 'C', fresh);
    info.cw = c2.aug.back().placed[0];
    c2.check();
    info.next = std::move(c2);
  } else if (m1p) {
    info.combine = 'A';
    info.m1 = *m1p;
    IAug c2 = s2a;
    place_new_edge(c2, u, v, 'A', fresh);
    c2.check();
    info.next = std::move(c2);
  } else if (m1d) {
    info.combine = 'D';
    info.m1 = *m1d;
    IAug c2 = s2a;
    place_new_edge(c2, u, v, 'D', fresh);
    info.d2 = c2.aug.back().placed;
    c2.check();
    info.next = std::move(c2);
  } else {
    info.neg = true;
  }
  return info;
}

inline StepInfo stage4_analyze(const IAug& a, int& fresh) {
  a.check();
  StepInfo info;
  if (a.base_verts.size() <= 3) { info.base = true; return info; }
  auto [bg, orig] = a.base_inst().compact();
  auto cut = minimal_two_cut(bg);
  if (!cut) { info.base = true; return info; }
  int u = orig[cut->u], v = orig[cut->v];
  std::set<int> s1;
  for (int x : cut->side) s1.insert(orig[x]);

  // Count base edges from the cut vertices into each side.
  auto side_count = [&](int x, bool into_s1) {
    int c = 0;
    for (auto& e : a.base_edges) {
      int other = -1;
      if (e.first == x) other = e.second;
      else if (e.second == x) other = e.first;
      else continue;
      if (other == u || other == v) continue;
      if (s1.count(other) == static_cast<size_t>(into_s1)) ++c;
    }
    return c;
  };
  bool u1 = (a.f.at(u) == 0 || side_count(u, true) == 1);
  bool v1 = (a.f.at(v) == 0 || side_count(v, true) == 1);
  bool u2 = (a.f.at(u) == 0 || side_count(u, false) == 1);
  bool v2 = (a.f.at(v) == 0 || side_count(v, false) == 1);

  SideSolver lemma2 = [](const IAug& s) { return solve_lemma2(s); };
  SideSolver search = [](const IAug& s) { return satisfy_by_search(s.red()); };

  if (u1 && v1) return run_case(a, u, v, s1, /*case_b=*/false, lemma2, fresh, "a");
  if (u2 && v2) return run_case(a, u, v, s1, /*case_b=*/true, lemma2, fresh, "b");

  // Case (c): orient so uu satisfies statement 1 only, vv statement 2 only.
  int uu = u, vv = v;
  if (!(u1 && !u2)) { std::swap(uu, vv); std::swap(u1, v1); std::swap(u2, v2); }
  assert(u1 && !u2 && !v1 && v2);
  // Forced local structure.
  assert(a.f.at(uu) == 1 && a.f.at(vv) == 1);
  assert(side_count(uu, true) == 1 && side_count(uu, false) == 2);
  assert(side_count(vv, true) == 2 && side_count(vv, false) == 1);
  assert(s1.size() == 1);
  int b1 = *s1.begin();
  std::set<int> b2;
  for (int x : a.base_verts)
    if (x != uu && x != vv && x != b1) b2.insert(x);
  {
    int uvcnt = 0;
    for (auto& e : a.base_edges)
      if (e == make_edge(uu, vv)) ++uvcnt;
    assert(uvcnt == 0);
  }
  if (b2.size() == 1) {
    info.label = "c_small";
    info.u = u; info.v = v;
    info.resolved = satisfy_by_search(a.red());
    if (!info.resolved) info.neg = true;
    return info;
  }
  // Shift the cut to {uu, x}, where x is vv's unique neighbor in B2; the
  // new small side {b1, vv} is handled by the case-(a) machinery with the
  // (possibly 2-cut-bearing) solved side decided by bounded search.
  int x = -1;
  for (auto& e : a.base_edges) {
    int other = -1;
    if (e.first == vv) other = e.second;
    else if (e.second == vv) other = e.first;
    else continue;
    if (b2.count(other)) { x = other; break; }
  }
  assert(x > 0);
  std::set<int> shifted{b1, vv};
  StepInfo out = run_case(a, uu, x, shifted, /*case_b=*/false,
                          [](const IAug& s) { return satisfy_by_search(s.red()); },
                          fresh, "c_shift");
  return out;
}

// --- Witness combination for the stage-4 splits --------------------------
inline std::vector<Edge> strip_vertex(const std::vector<Edge>& m, int w) {
  std::vector<Edge> out;
  for (auto& e : m)
    if (e.first != w && e.second != w) out.push_back(e);
  return out;
}

// Endpoint multiset of w's incident edges minus the structural neighbors.
inline std::vector<int> extras_at(const std::vector<Edge>& m, int w,
                                  std::vector<int> structural) {
  std::vector<int> ends;
  for (auto& e : m) {
    if (e.first == w && e.second == w) { ends.push_back(w); ends.push_back(w); continue; }
    if (e.first == w) ends.push_back(e.second);
    else if (e.second == w) ends.push_back(e.first);
  }
  for (int s : structural) {
    auto it = std::find(ends.begin(), ends.end(), s);
    assert(it != ends.end());
    ends.erase(it);
  }
  return ends;
}

inline std::optional<std::vector<Edge>> combine_step(const StepInfo& info,
                                                     const std::vector<Edge>& m2,
                                                     const Inst& parent_red) {
  int u = info.u, v = info.v;
  std::vector<std::vector<Edge>> cands;
  switch (info.combine) {
    case 'B': {
      auto z1s = extras_at(info.m1, info.w1, {u, v});
      auto z2s = extras_at(m2, info.w2, {u, v});
      assert(z1s.size() == 1 && z2s.size() == 1);
      std::vector<Edge> m = strip_vertex(info.m1, info.w1);
      for (auto& e : strip_vertex(m2, info.w2)) m.push_back(e);
      m.push_back(make_edge(z1s[0], z2s[0]));
      cands.push_back(std::move(m));
      break;
    }
    case 'A': {
      std::vector<Edge> m = edges_minus(info.m1, {make_edge(u, v)});
      for (auto& e : edges_minus(m2, {make_edge(u, v)})) m.push_back(e);
      cands.push_back(std::move(m));
      break;
    }
    case 'D': {
      auto zp1 = extras_at(info.m1, info.d1[3], {info.d1[0], info.d1[1], info.d1[2]});
      auto zq1 = extras_at(info.m1, info.d1[4], {info.d1[0], info.d1[1], info.d1[2]});
      auto zp2 = extras_at(m2, info.d2[3], {info.d2[0], info.d2[1], info.d2[2]});
      auto zq2 = extras_at(m2, info.d2[4], {info.d2[0], info.d2[1], info.d2[2]});
      assert(zp1.size() == 1 && zq1.size() == 1 && zp2.size() == 1 && zq2.size() == 1);
      std::vector<Edge> base1 = info.m1, base2 = m2;
      for (int w : info.d1) base1 = strip_vertex(base1, w);
      for (int w : info.d2) base2 = strip_vertex(base2, w);
      for (int swap = 0; swap < 2; ++swap) {
        std::vector<Edge> m = base1;
        for (auto& e : base2) m.push_back(e);
        m.push_back(make_edge(zp1[0], swap ? zq2[0] : zp2[0]));
        m.push_back(make_edge(zq1[0], swap ? zp2[0] : zq2[0]));
        cands.push_back(std::move(m));
      }
      break;
    }
    case 'C': {
      // Side 2 carries the f=2 vertex cw; its extras are two edge-ends or a
      // loop at cw itself.  Pair them with side 1's bare-edge route or
      // diamond route.
      auto zs = extras_at(m2, info.cw, {u, v});
      bool loop_extra = (zs.size() == 2 && zs[0] == info.cw);
      if (loop_extra) zs.clear();
      std::vector<Edge> m2s = strip_vertex(m2, info.cw);
      if (info.m1_bare) {
        std::vector<Edge> m = edges_minus(*info.m1_bare, {make_edge(u, v)});
        for (auto& e : m2s) m.push_back(e);
        if (zs.size() == 2) m.push_back(make_edge(zs[0], zs[1]));
        cands.push_back(std::move(m));
      }
      if (info.m1_diamond) {
        auto zp1 = extras_at(*info.m1_diamond, info.d1[3],
                             {info.d1[0], info.d1[1], info.d1[2]});
        auto zq1 = extras_at(*info.m1_diamond, info.d1[4],
                             {info.d1[0], info.d1[1], info.d1[2]});
        assert(zp1.size() == 1 && zq1.size() == 1);
        std::vector<Edge> base1 = *info.m1_diamond;
        for (int w : info.d1) base1 = strip_vertex(base1, w);
        if (zs.size() == 2) {
          for (int swap = 0; swap < 2; ++swap) {
            std::vector<Edge> m = base1;
            for (auto& e : m2s) m.push_back(e);
            m.push_back(make_edge(zp1[0], swap ? zs[1] : zs[0]));
            m.push_back(make_edge(zq1[0], swap ? zs[0] : zs[1]));
            cands.push_back(std::move(m));
          }
        } else {
          // cw's extras formed a loop: the two side-1 ends pair with each other.
          std::vector<Edge> m = base1;
          for (auto& e : m2s) m.push_back(e);
          m.push_back(make_edge(zp1[0], zq1[0]));
          cands.push_back(std::move(m));
        }
      }
      break;
    }
    default:
      assert(false);
  }
  for (auto& m : cands)
    if (satisfies(parent_red, m)) return m;
  return std::nullopt;
}

inline std::optional<std::vector<Edge>> solve_stage4(const IAug& a, int& fresh) {
  StepInfo info = stage4_analyze(a, fresh);
  if (info.base) return solve_lemma2(a);
  if (info.neg) return std::nullopt;
  if (info.resolved) return info.resolved;
  auto m2 = solve_stage4(info.next, fresh);
  if (!m2) return std::nullopt;
  auto m = combine_step(info, *m2, a.red());
  if (m) return m;
  // Last-resort witness repair (the verdict "yes" is already established by
  // the recursive structure; only the stitching can be rescued by search).
  return satisfy_by_search(a.red());
}

// ---------------------------------------------------------------------------
// Stages 1-3.
// ---------------------------------------------------------------------------
inline std::optional<std::vector<Edge>> solve_2econn(const Inst& a, int& fresh);

// Stage 3 dispatch for a connected, 2-edge-connected instance with a valid,
// even-refined discrepancy function.
inline std::optional<std::vector<Edge>> solve_2econn(const Inst& a, int& fresh) {
  if (a.verts.size() <= 4) return satisfy_by_search(a);
  auto [g, orig] = a.compact();
  auto rep = decompose(g);
  assert(rep.components.size() == 1 && rep.cut_edges.empty());
  if (!rep.cut_vertices.empty()) {
    int cv = orig[rep.cut_vertices.front()];
    auto deg = a.degree();
    assert(deg[cv] == 4 && a.f.at(cv) == 0);
    // Components of a \ cv.
    std::map<int, std::vector<int>> adj;
    for (auto& e : a.edges) {
      if (e.first == cv || e.second == cv || e.first == e.second) continue;
      adj[e.first].push_back(e.second);
      adj[e.second].push_back(e.first);
    }
    std::map<int, int> comp;
    int nc = 0;
    for (int s : a.verts) {
      if (s == cv || comp.count(s)) continue;
      std::vector<int> st{s};
      comp[s] = nc;
      while (!st.empty()) {
        int x = st.back(); st.pop_back();
        for (int w : adj[x])
          if (!comp.count(w)) { comp[w] = nc; st.push_back(w); }
      }
      ++nc;
    }
    assert(nc == 2);
    std::vector<Edge> combined;
    for (int side = 0; side < 2; ++side) {
      Inst piece;
      for (int x : a.verts)
        if (x == cv || comp[x] == side) piece.verts.push_back(x);
      std::set<int> pv(piece.verts.begin(), piece.verts.end());
      for (auto& e : a.edges)
        if (pv.count(e.first) && pv.count(e.second)) piece.edges.push_back(e);
      for (int x : piece.verts) piece.f[x] = a.f.at(x);
      auto m = solve_2econn(piece, fresh);
      if (!m) return std::nullopt;
      for (auto& e : *m) combined.push_back(e);
    }
    assert(satisfies(a, combined));  // wedge at the cut vertex stays planar
    return combined;
  }
  // 2-connected: hand to stage 4 with the trivial augmentation.
  IAug ia;
  ia.base_verts = a.verts;
  ia.base_edges = a.edges;
  ia.aug.assign(a.edges.size(), EdgeAug{});
  ia.f = a.f;
  return solve_stage4(ia, fresh);
}

// Stage 2 (and recursion) for a connected component under the full
// discrepancy function f = 4 - deg.
inline std::optional<std::vector<Edge>> solve_full_connected(const Inst& a, int& fresh) {
  auto [g, orig] = a.compact();
  auto rep = decompose(g);
  assert(rep.components.size() == 1);
  if (rep.cut_edges.empty()) return solve_2econn(a, fresh);
  Edge ce = {orig[rep.cut_edges.front().first], orig[rep.cut_edges.front().second]};
  // Remove one instance of the bridge and recurse on the two sides with
  // recomputed full discrepancies.
  std::vector<Edge> rest = edges_minus(a.edges, {make_edge(ce.first, ce.second)});
  std::map<int, std::vector<int>> adj;
  for (auto& e : rest) {
    if (e.first == e.second) continue;
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::set<int> side_u;
  {
    std::vector<int> st{ce.first};
    side_u.insert(ce.first);
    while (!st.empty()) {
      int x = st.back(); st.pop_back();
      for (int w : adj[x])
        if (side_u.insert(w).second) st.push_back(w);
    }
  }
  assert(!side_u.count(ce.second));
  std::vector<std::vector<Edge>> sides;
  std::vector<Inst> insts;
  for (int s = 0; s < 2; ++s) {
    Inst piece;
    for (int x : a.verts)
      if (side_u.count(x) == static_cast<size_t>(1 - s)) piece.verts.push_back(x);
    std::set<int> pv(piece.verts.begin(), piece.verts.end());
    for (auto& e : rest)
      if (pv.count(e.first)) { assert(pv.count(e.second)); piece.edges.push_back(e); }
    auto deg = piece.degree();
    for (int x : piece.verts) piece.f[x] = 4 - deg[x];
    auto m = solve_full_connected(piece, fresh);
    if (!m) return std::nullopt;
    sides.push_back(*m);
    insts.push_back(std::move(piece));
  }
  // Glue: free one slot at each bridge endpoint (delete an extra edge uw and
  // vx), reconnect with ce and the cross edge wx.
  auto extras = [&](int s, int endp) {
    std::vector<Edge> out;
    auto added = edges_minus(sides[s], insts[s].edges);
    for (auto& e : added)
      if (e.first == endp || e.second == endp) out.push_back(e);
    return out;
  };
  int su = side_u.count(ce.first) ? 0 : 1;
  for (auto& eu : extras(su, ce.first)) {
    for (auto& ev : extras(1 - su, ce.second)) {
      int w = (eu.first == ce.first) ? eu.second : eu.first;
      int x = (ev.first == ce.second) ? ev.second : ev.first;
      std::vector<Edge> m = edges_minus(sides[su], {eu});
      for (auto& e : edges_minus(sides[1 - su], {ev})) m.push_back(e);
      m.push_back(make_edge(ce.first, ce.second));
      m.push_back(make_edge(w, x));
      if (satisfies(a, m)) return m;
    }
  }
  // The pairing argument guarantees some choice embeds; search as repair.
  return satisfy_by_search(a);
}

inline std::optional<std::vector<Edge>> solve_full(const Inst& a, int& fresh) {
  auto [g, orig] = a.compact();
  auto rep = decompose(g);
  std::vector<Edge> out;
  for (auto& comp : rep.components) {
    Inst piece;
    for (int x : comp) piece.verts.push_back(orig[x]);
    std::set<int> pv(piece.verts.begin(), piece.verts.end());
    for (auto& e : a.edges)
      if (pv.count(e.first)) piece.edges.push_back(e);
    for (int x : piece.verts) piece.f[x] = a.f.at(x);
    auto m = solve_full_connected(piece, fresh);
    if (!m) return std::nullopt;
    for (auto& e : *m) out.push_back(e);
  }
  return out;
}

// Public-augmentation <-> IAug conversion (identity labels).
inline IAug from_public(const Augmentation& a) {
  IAug ia;
  for (int v = 1; v <= a.base.n; ++v) ia.base_verts.push_back(v);
  ia.base_edges = a.base.edges;
  ia.aug = a.edge_map;
  for (int v = 1; v <= a.red.n; ++v) ia.f[v] = a.f.f[v];
  // Keep only red vertices actually referenced (base + placed).
  std::set<int> redv(ia.base_verts.begin(), ia.base_verts.end());
  for (auto& ea : ia.aug)
    for (int w : ea.placed) redv.insert(w);
  for (auto it = ia.f.begin(); it != ia.f.end();)
    if (!redv.count(it->first)) it = ia.f.erase(it); else ++it;
  return ia;
}

inline Augmentation to_public(const IAug& ia) {
  // Relabel: base vertices first (sorted), then placed vertices in edge order.
  std::map<int, int> pos;
  int next = 0;
  for (int v : ia.base_verts) pos[v] = ++next;
  Augmentation a;
  a.base = PlanarMultigraph(static_cast<int>(ia.base_verts.size()));
  for (auto& e : ia.base_edges) a.base.add_edge(pos.at(e.first), pos.at(e.second));
  for (auto& ea : ia.aug)
    for (int w : ea.placed)
      if (!pos.count(w)) pos[w] = ++next;
  a.red = PlanarMultigraph(next);
  a.edge_map.clear();
  for (size_t i = 0; i < ia.base_edges.size(); ++i) {
    EdgeAug ea = ia.aug[i];
    for (int& w : ea.placed) w = pos.at(w);
    a.edge_map.push_back(std::move(ea));
  }
  {
    Inst r = ia.red();
    for (auto& e : r.edges) a.red.add_edge(pos.at(e.first), pos.at(e.second));
  }
  std::vector<int> fv(next + 1, 0);
  for (auto& [v, f] : ia.f) fv[pos.at(v)] = f;
  a.f = DiscrepancyMap(a.red, fv);
  return a;
}

inline int fresh_label(const IAug& ia) {
  int mx = 0;
  for (int v : ia.base_verts) mx = std::max(mx, v);
  for (auto& [v, f] : ia.f) mx = std::max(mx, v);
  return mx + 1;
}

}  // namespace fourreg_detail

// ---------------------------------------------------------------------------
// Public operations.
// ---------------------------------------------------------------------------
inline std::optional<SatisfyingWitness> satisfy_discrepancy(const DiscrepancyMap& d) {
  namespace fd = fourreg_detail;
  fd::Inst inst;
  for (int v = 1; v <= d.host.n; ++v) inst.verts.push_back(v);
  inst.edges = d.host.edges;
  for (int v = 1; v <= d.host.n; ++v) inst.f[v] = d.f[v];

  auto deg = d.host.degrees();
  bool full = true;
  for (int v = 1; v <= d.host.n; ++v) full &= (d.f[v] == 4 - deg[v]);

  std::optional<std::vector<Edge>> m;
  int fresh = d.host.n + 1;
  if (full) {
    m = fd::solve_full(inst, fresh);
  } else if (d.host.n <= 10) {
    // Non-full maps only arise internally; the public entry supports them on
    // small hosts via the exhaustive solver.
    m = fd::satisfy_by_search(inst);
  } else {
    throw std::invalid_argument(
        "satisfy_discrepancy: non-full discrepancy maps supported only for n <= 10");
  }
  if (!m) return std::nullopt;
  assert(fd::satisfies(inst, *m));
  SatisfyingWitness w;
  w.graph = PlanarMultigraph(d.host.n);
  std::vector<Edge> sorted = *m;
  fd::sort_edges(sorted);
  for (auto& e : sorted) w.graph.add_edge(e.first, e.second);
  auto er = embed(w.graph);
  assert(er.planar());
  w.embedding = std::move(*er.embedding);
  return w;
}

inline std::optional<SatisfyingWitness> satisfy_discrepancy(
    const PlanarMultigraph& h, const std::vector<int>& f) {
  return satisfy_discrepancy(DiscrepancyMap(h, f));
}

inline std::optional<SatisfyingWitness> lemma2_satisfiable(
    const PlanarMultigraph& b, const Augmentation& a) {
  namespace fd = fourreg_detail;
  if (b.n != a.base.n || b.edges != a.base.edges)
    throw std::invalid_argument("lemma2_satisfiable: augmentation does not match base");
  bool has_loop = false;
  for (auto& e : b.edges) has_loop |= (e.first == e.second);
  if (b.n > 4 && !has_loop) {
    auto rep = decompose(b);
    if (rep.components.size() != 1 || !rep.cut_vertices.empty() ||
        minimal_two_cut(b).has_value())
      throw std::invalid_argument("lemma2_satisfiable: base must be 2-cut-free");
  }
  fd::IAug ia = fd::from_public(a);
  auto m = fd::solve_lemma2(ia);
  if (!m) return std::nullopt;
  SatisfyingWitness w;
  w.graph = PlanarMultigraph(a.red.n);
  std::vector<Edge> sorted = *m;
  fd::sort_edges(sorted);
  for (auto& e : sorted) w.graph.add_edge(e.first, e.second);
  auto er = embed(w.graph);
  assert(er.planar());
  w.embedding = std::move(*er.embedding);
  return w;
}

// One step of the stage-4 loop, reported structurally.
struct Stage4Step {
  bool base_case = false;
  std::optional<SatisfyingWitness> base_witness;   // lemma2 verdict when base
  bool verdict_no = false;
  int u = 0, v = 0;                                // cut used for the insertion
  std::string case_label;
  bool solved_side_ok = false;
  bool solved_prime = false, solved_dprime = false;  // (ii) variants
  std::optional<Augmentation> next;                // recursion target
  std::optional<SatisfyingWitness> resolved;       // case (c) small solved here
};

inline Stage4Step stage4_step(const PlanarMultigraph& b, const Augmentation& a) {
  namespace fd = fourreg_detail;
  if (b.n != a.base.n || b.edges != a.base.edges)
    throw std::invalid_argument("stage4_step: augmentation does not match base");
  {
    auto rep = decompose(b);
    if (rep.components.size() != 1 || !rep.cut_vertices.empty())
      throw std::invalid_argument("stage4_step: base must be connected with no cut vertex");
  }
  fd::IAug ia = fd::from_public(a);
  int fresh = fd::fresh_label(ia);
  Stage4Step out;
  fd::StepInfo info = fd::stage4_analyze(ia, fresh);
  if (info.base) {
    out.base_case = true;
    out.base_witness = lemma2_satisfiable(b, a);
    out.verdict_no = !out.base_witness.has_value();
    return out;
  }
  out.u = info.u;
  out.v = info.v;
  out.case_label = info.label;
  out.solved_prime = info.solved_prime;
  out.solved_dprime = info.solved_dprime;
  if (info.resolved) {
    fd::Inst red = ia.red();
    SatisfyingWitness w;
    auto [g, orig] = red.compact();
    (void)g;
    std::map<int, int> pos;
    for (size_t i = 1; i < orig.size(); ++i) pos[orig[i]] = static_cast<int>(i);
    w.graph = PlanarMultigraph(static_cast<int>(red.verts.size()));
    for (auto& e : *info.resolved) w.graph.add_edge(pos.at(e.first), pos.at(e.second));
    auto er = embed(w.graph);
    assert(er.planar());
    w.embedding = std::move(*er.embedding);
    out.resolved = std::move(w);
    return out;
  }
  if (info.neg) { out.verdict_no = true; return out; }
  out.solved_side_ok = true;
  out.next = fd::to_public(info.next);
  return out;
}

// Independent oracle: search over all 4-regular planar multigraph completions.
inline bool brute_force_oracle(const PlanarMultigraph& h) {
  if (h.n > 7) throw std::invalid_argument("brute_force_oracle: |h| <= 7 required");
  auto deg = h.degrees();
  for (int v = 1; v <= h.n; ++v)
    if (deg[v] > 4) return false;
  fourreg_detail::Inst inst;
  for (int v = 1; v <= h.n; ++v) inst.verts.push_back(v);
  inst.edges = h.edges;
  for (int v = 1; v <= h.n; ++v) inst.f[v] = 4 - deg[v];
  return fourreg_detail::satisfy_by_search(inst).has_value();
}

// Replace loops and redundant parallel edges of a 4-regular witness by the
// 6-vertex gadget (path p1-p2-p3-p4 plus two apexes adjacent to all four;
// u-p1 and p4-v attach the ends), preferring to keep the host's own edges.
inline LabeledGraph witness_to_simple(const PlanarMultigraph& g, const LabeledGraph& h) {
  {
    auto deg = g.degrees();
    for (int v = 1; v <= g.n; ++v)
      if (deg[v] != 4) throw std::invalid_argument("witness_to_simple: g not 4-regular");
    if (!is_planar(g)) throw std::invalid_argument("witness_to_simple: g not planar");
    for (auto& e : h.edges) {
      if (std::find(g.edges.begin(), g.edges.end(), e) == g.edges.end())
        throw std::invalid_argument("witness_to_simple: g does not contain h");
    }
  }
  // Decide which edge instances to expand: all loops; for parallel bundles,
  // all but one instance (keep a host instance when present).
  std::vector<char> expand(g.edges.size(), 0);
  std::map<Edge, std::vector<size_t>> bundles;
  for (size_t i = 0; i < g.edges.size(); ++i) {
    if (g.edges[i].first == g.edges[i].second) { expand[i] = 1; continue; }
    bundles[g.edges[i]].push_back(i);
  }
  for (auto& [e, idxs] : bundles) {
    (void)e;
    if (idxs.size() <= 1) continue;
    for (size_t k = 1; k < idxs.size(); ++k) expand[idxs[k]] = 1;
  }
  int extra = 0;
  for (char c : expand) extra += c;
  LabeledGraph out(g.n + 6 * extra);
  int next = g.n;
  for (size_t i = 0; i < g.edges.size(); ++i) {
    auto [u, v] = g.edges[i];
    if (!expand[i]) { out.add_edge(u, v); continue; }
    int p1 = ++next, p2 = ++next, p3 = ++next, p4 = ++next;
    int q1 = ++next, q2 = ++next;
    out.add_edge(p1, p2); out.add_edge(p2, p3); out.add_edge(p3, p4);
    for (int p : {p1, p2, p3, p4}) { out.add_edge(q1, p); out.add_edge(q2, p); }
    out.add_edge(u, p1);
    out.add_edge(p4, v);
  }
  // Validate: simple by type; planar; 4-regular; contains h.
  {
    auto deg = out.degrees();
    for (int v = 1; v <= out.n; ++v) assert(deg[v] == 4);
    assert(is_planar(out));
    for (auto& e : h.edges) assert(out.has_edge(e.first, e.second));
  }
  return out;
}

struct FourEmbedResult {
  bool yes = false;
  std::optional<PlanarMultigraph> multigraph;  // 4-regular planar >= h
  std::optional<LabeledGraph> witness;         // simple version when requested
};

inline FourEmbedResult is_four_embeddable(const LabeledGraph& h, bool want_witness) {
  auto deg = h.degrees();
  for (int v = 1; v <= h.n; ++v)
    if (deg[v] > 4) throw std::invalid_argument("is_four_embeddable: maximum degree > 4");
  if (!is_planar(h)) throw std::invalid_argument("is_four_embeddable: non-planar input");
  std::vector<int> f(h.n + 1, 0);
  for (int v = 1; v <= h.n; ++v) f[v] = 4 - deg[v];
  auto sat = satisfy_discrepancy(PlanarMultigraph::from_simple(h), f);
  FourEmbedResult res;
  if (!sat) return res;
  res.yes = true;
  res.multigraph = sat->graph;
  if (want_witness) res.witness = witness_to_simple(sat->graph, h);
  return res;
}

}  // namespace planarlab
