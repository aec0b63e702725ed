// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
//
//  1. census exactness           |P(n)| for n = 1..5
//  2. connectivity/kappa bounds  exact rationals, n <= 6
//  3. addable exactness          add(n,m) formula (n = 6,7) + lower bound
//  4. spine construction         attains ceil(3/2(3n-6-m)), n = 6..12
//  5. short-cycle lemma          all planar hosts n <= 7 under the hypothesis
//  6. appearance intersections   <= |H| overlaps, n <= 7; Lambda bound
//  7. 4-embeddability            oracle equivalence + fixed verdicts
//  8. cut-edge composition       verdict = AND of side verdicts, 200 pairs
//  9. regularization gadgets     D2-regular supergraphs, n <= 6, D2 in {3,5}
// 10. asymptotics substituted    exact finite-n probability tables, n <= 7

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "planarlab/addable.hpp"
#include "planarlab/canonical.hpp"
#include "planarlab/census.hpp"
#include "planarlab/detectors.hpp"
#include "planarlab/fourreg.hpp"
#include "planarlab/gadgets.hpp"

using namespace planarlab;

namespace {

constexpr double kSlack = 1e-12;  // float comparisons favor the inequality

int g_failures = 0;

class Criterion {
 public:
  Criterion(int id, std::string what) : id_(id), what_(std::move(what)) {
    t0_ = std::chrono::steady_clock::now();
  }
  void fail(const std::string& why) {
    ok_ = false;
    reasons_.push_back(why);
  }
  void finish() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0_).count();
    std::cout << "criterion " << id_ << ": " << (ok_ ? "PASS" : "FAIL") << " — "
              << what_ << " (" << ms / 1000.0 << "s)\n";
    for (auto& r : reasons_) std::cout << "    " << r << "\n";
    if (!ok_) ++g_failures;
  }

 private:
  int id_;
  std::string what_;
  bool ok_ = true;
  std::vector<std::string> reasons_;
  std::chrono::steady_clock::time_point t0_;
};

LabeledGraph complete(int n) {
  LabeledGraph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

LabeledGraph octahedron() {
  LabeledGraph g = complete(6);
  g.remove_edge(1, 4);
  g.remove_edge(2, 5);
  g.remove_edge(3, 6);
  return g;
}

// Random planar simple graph with a degree cap.
LabeledGraph random_planar(int n, std::mt19937& rng, int max_deg) {
  LabeledGraph g(n);
  std::vector<Edge> cand;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) cand.push_back({u, v});
  std::shuffle(cand.begin(), cand.end(), rng);
  int want = static_cast<int>(rng() % (2 * n));
  for (auto& e : cand) {
    if (g.m() >= want) break;
    auto d = g.degrees();
    if (d[e.first] >= max_deg || d[e.second] >= max_deg) continue;
    g.add_edge(e.first, e.second);
    if (!is_planar(g)) g.remove_edge(e.first, e.second);
  }
  return g;
}

bool simple_witness_ok(const LabeledGraph& w, const LabeledGraph& h) {
  auto deg = w.degrees();
  for (int v = 1; v <= w.n; ++v)
    if (deg[v] != 4) return false;
  if (!is_planar(w)) return false;
  for (auto& e : h.edges)
    if (!w.has_edge(e.first, e.second)) return false;
  return true;
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

// ---------------------------------------------------------------------------
void criterion1() {
  Criterion c(1, "census exactness: |P(n)| = 1, 2, 8, 64, 1023 for n = 1..5");
  const long long expect[] = {1, 2, 8, 64, 1023};
  for (int n = 1; n <= 5; ++n) {
    ClassConstraints cc;
    cc.n = n;
    long long got = enumerate_class(cc, nullptr);
    if (got != expect[n - 1])
      c.fail("n = " + std::to_string(n) + ": got " + std::to_string(got));
  }
  c.finish();
}

void criterion2() {
  Criterion c(2, "P[connected] >= 1/e, E[kappa] <= 2, Poisson dominance, n <= 6");
  for (int n = 1; n <= 6; ++n) {
    auto rep = kappa_dominance_check(n);
    if (!rep.ok) {
      for (auto& v : rep.violations) c.fail("n = " + std::to_string(n) + ": " + v);
      continue;
    }
    if (rep.p_connected.value() + kSlack < std::exp(-1.0))
      c.fail("n = " + std::to_string(n) + ": P[connected] < 1/e");
    if (rep.e_kappa.value() > 2.0 + kSlack)
      c.fail("n = " + std::to_string(n) + ": E[kappa] > 2");
  }
  c.finish();
}

void criterion3() {
  Criterion c(3, "add(n,m) = ceil(3/2(3n-6-m)) for n = 6,7; lemma lower bound");
  for (int n = 6; n <= 7; ++n) {
    auto table = min_addable_table(n);
    for (int m = 2 * n - 3; m <= 3 * n - 6; ++m) {
      auto* cert = std::get_if<MinAddCertificate>(&table[m]);
      long long want = ceil_div(3LL * (3 * n - 6 - m), 2);
      if (!cert || cert->value != want)
        c.fail("n = " + std::to_string(n) + ", m = " + std::to_string(m) +
               ": add != " + std::to_string(want));
    }
  }
  for (int n = 1; n <= 7; ++n) {
    auto table = min_addable_table(n);
    for (int m = 0; m < n && m < static_cast<int>(table.size()); ++m) {
      auto* cert = std::get_if<MinAddCertificate>(&table[m]);
      if (!cert) continue;
      long long bound = ceil_div(static_cast<long long>(n + m) * (n - m - 1), 2);
      if (cert->value < bound)
        c.fail("lemma bound fails at n = " + std::to_string(n) +
               ", m = " + std::to_string(m));
    }
  }
  c.finish();
}

void criterion4() {
  Criterion c(4, "spine construction attains ceil(3/2(3n-6-m)), n = 6..12");
  for (int n = 6; n <= 12; ++n) {
    for (int m = 2 * n - 3; m <= 3 * n - 6; ++m) {
      LabeledGraph g = spine_extremal_graph(n, m);
      long long want = ceil_div(3LL * (3 * n - 6 - m), 2);
      if (g.n != n || g.m() != m || !is_planar(g) ||
          addable_set(g).size() != want)
        c.fail("n = " + std::to_string(n) + ", m = " + std::to_string(m));
    }
  }
  c.finish();
}

// Criteria 5 and 6 share one exhaustive sweep over planar hosts with n <= 7.
void criteria5and6() {
  Criterion c5(5, "short-cycle lemma: zero violations over planar hosts n <= 7");
  Criterion c6(6, "appearance intersections <= |H| (n <= 7); Lambda bound");
  for (int n = 1; n <= 7; ++n) {
    int pairs = n * (n - 1) / 2;
    std::vector<Edge> pair_list;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) pair_list.push_back({u, v});
    // Subsets of size 1..3 for the appearance scan.
    std::vector<std::vector<int>> subsets;
    for (int mask = 1; mask < (1 << n); ++mask) {
      if (__builtin_popcount(mask) > 3) continue;
      std::vector<int> w;
      for (int v = 1; v <= n; ++v)
        if (mask >> (v - 1) & 1) w.push_back(v);
      subsets.push_back(std::move(w));
    }
    int cap = n >= 3 ? 3 * n - 6 : pairs;
    for (long long mask = 0; mask < (1LL << pairs); ++mask) {
      if (__builtin_popcountll(mask) > cap) continue;
      LabeledGraph g(n);
      for (int b = 0; b < pairs; ++b)
        if (mask >> b & 1) g.add_edge(pair_list[b].first, pair_list[b].second);
      if (!is_planar(g)) continue;
      auto deg = g.degrees();

      // --- criterion 6: per-order appearance records and their overlaps ---
      // For each site W: the induced pattern must be connected and attached
      // to the rest by exactly one edge at min(W).
      std::vector<std::vector<std::vector<Edge>>> recs(4);  // by |W|
      for (auto& w : subsets) {
        int in_mask = 0;
        for (int v : w) in_mask |= 1 << v;
        std::vector<Edge> internal, cross;
        for (auto& e : g.edges) {
          bool a = in_mask >> e.first & 1, b = in_mask >> e.second & 1;
          if (a && b) internal.push_back(e);
          else if (a || b) cross.push_back(e);
        }
        if (cross.size() != 1) continue;
        if (cross[0].first != w.front() && cross[0].second != w.front()) continue;
        // Connectivity of the induced pattern (|W| <= 3).
        if (w.size() == 2 && internal.size() != 1) continue;
        if (w.size() == 3) {
          if (internal.size() < 2) continue;  // 3 vertices need >= 2 edges
        }
        std::vector<Edge> total = internal;
        total.push_back(cross[0]);
        std::sort(total.begin(), total.end());
        recs[w.size()].push_back(std::move(total));
      }
      for (int k = 1; k <= 3; ++k) {
        auto& rk = recs[k];
        for (size_t i = 0; i < rk.size(); ++i) {
          int meets = 0;
          for (size_t j = 0; j < rk.size(); ++j) {
            if (i == j) continue;
            std::vector<Edge> inter;
            std::set_intersection(rk[i].begin(), rk[i].end(), rk[j].begin(),
                                  rk[j].end(), std::back_inserter(inter));
            if (!inter.empty()) ++meets;
          }
          if (meets > k) {
            c6.fail("overlap bound exceeded at n = " + std::to_string(n) +
                    ", graph " + to_graph6(g) + ", k = " + std::to_string(k));
            goto next_host;  // one report per host is enough
          }
        }
      }

      // --- criterion 5: the k < 1/15 hypothesis at n <= 7 forces no vertex
      //     of degree <= 2, so the bounds read with k = 0 ---
      {
        bool hyp = n >= 1;
        for (int v = 1; v <= n; ++v)
          if (deg[v] <= 2) hyp = false;
        if (hyp) {
          auto s = structure_census(g);
          if (static_cast<long long>(s.short_cycles.size()) < ceil_div(n, 28))
            c5.fail("cycle count at " + to_graph6(g));
          auto emb = embed(g);
          int small_faces = 0;
          for (auto& f : emb.embedding->faces())
            if (f.size() <= 6) ++small_faces;
          if (small_faces * 14 < n) c5.fail("face count at " + to_graph6(g));
        }
      }
    next_host:;
    }
  }
  // Lambda bound for 2-appearances on 1000 random max-degree-5 planar hosts.
  {
    std::mt19937 rng(321);
    for (int rep = 0; rep < 1000; ++rep) {
      LabeledGraph g = random_planar(9, rng, 5);
      for (int k = 1; k <= 2; ++k) {
        // All order-k 2-appearance records by site.
        std::vector<std::vector<int>> sites;
        std::vector<int> w;
        auto gen = [&](auto&& self, int next) -> void {
          if (static_cast<int>(w.size()) == k) { sites.push_back(w); return; }
          for (int v = next; v <= g.n; ++v) {
            w.push_back(v);
            self(self, v + 1);
            w.pop_back();
          }
        };
        gen(gen, 1);
        std::vector<std::vector<int>> totals;
        for (auto& s : sites) {
          LabeledGraph pat = g.induced(s);
          if (component_graphs(pat).size() != 1) continue;
          for (auto& r : find_two_appearances(pat, g))
            if (r.site == s) totals.push_back(r.total_vertices);
        }
        unsigned long long cap = lambda_bound(k);
        for (size_t i = 0; i < totals.size(); ++i) {
          unsigned long long meets = 0;
          for (size_t j = 0; j < totals.size(); ++j) {
            if (i == j) continue;
            std::vector<int> inter;
            std::set_intersection(totals[i].begin(), totals[i].end(),
                                  totals[j].begin(), totals[j].end(),
                                  std::back_inserter(inter));
            if (!inter.empty()) ++meets;
          }
          if (meets > cap) {
            c6.fail("Lambda bound exceeded on host " + to_graph6(g));
            break;
          }
        }
      }
    }
  }
  c5.finish();
  c6.finish();
}

void criterion7() {
  Criterion c(7, "4-embeddability = oracle (exhaustive n <= 6, 500 random n = 7)");
  // Fixed verdicts.
  LabeledGraph k5e = complete(5);
  k5e.remove_edge(4, 5);
  if (is_four_embeddable(k5e, false).yes) c.fail("K5 - e should be no");
  if (!is_four_embeddable(octahedron(), false).yes) c.fail("octahedron should be yes");
  if (!is_four_embeddable(complete(4), false).yes) c.fail("K4 should be yes");

  auto keep = [](const LabeledGraph& g) {
    if (!is_planar(g)) return false;
    auto d = g.degrees();
    for (int v = 1; v <= g.n; ++v)
      if (d[v] > 4) return false;
    return true;
  };
  for (int n = 1; n <= 6; ++n) {
    auto levels = iso_classes_by_edges(n, 2 * n, keep);
    for (auto& level : levels)
      for (auto& g : level) {
        bool oracle = brute_force_oracle(PlanarMultigraph::from_simple(g));
        auto res = is_four_embeddable(g, oracle);
        if (res.yes != oracle) {
          c.fail("verdict mismatch at " + to_graph6(g));
          continue;
        }
        if (res.yes && !simple_witness_ok(*res.witness, g))
          c.fail("bad witness at " + to_graph6(g));
      }
  }
  std::mt19937 rng(20240824);
  for (int t = 0; t < 500; ++t) {
    LabeledGraph g = random_planar(7, rng, 4);
    bool oracle = brute_force_oracle(PlanarMultigraph::from_simple(g));
    auto res = is_four_embeddable(g, oracle);
    if (res.yes != oracle) {
      c.fail("random verdict mismatch at " + to_graph6(g));
      continue;
    }
    if (res.yes && !simple_witness_ok(*res.witness, g))
      c.fail("bad random witness at " + to_graph6(g));
  }
  c.finish();
}

void criterion8() {
  Criterion c(8, "cut-edge composition: verdict = AND of side verdicts, 200 pairs");
  std::mt19937 rng(88);
  int done = 0;
  while (done < 200) {
    int a = 2 + static_cast<int>(rng() % 3), b = 2 + static_cast<int>(rng() % 3);
    if (a + b > 7) continue;  // keep the oracle applicable to the composition
    LabeledGraph h1 = random_planar(a, rng, 4);
    LabeledGraph h2 = random_planar(b, rng, 4);
    if (h1.degrees()[1] >= 4 || h2.degrees()[1] >= 4) continue;
    LabeledGraph both(a + b);
    for (auto& e : h1.edges) both.add_edge(e.first, e.second);
    for (auto& e : h2.edges) both.add_edge(a + e.first, a + e.second);
    both.add_edge(1, a + 1);
    // The stage-2 sides keep the bridge as a pendant stub.
    LabeledGraph su(a + 1, h1.edges);
    su.add_edge(1, a + 1);
    LabeledGraph sv(b + 1, h2.edges);
    sv.add_edge(1, b + 1);
    bool yu = is_four_embeddable(su, false).yes;
    bool yv = is_four_embeddable(sv, false).yes;
    bool yc = is_four_embeddable(both, false).yes;
    if (yc != (yu && yv)) {
      c.fail("composition identity fails at " + to_graph6(both));
      ++done;
      continue;
    }
    if (yc != brute_force_oracle(PlanarMultigraph::from_simple(both)))
      c.fail("composition oracle mismatch at " + to_graph6(both));
    ++done;
  }
  c.finish();
}

void criterion9() {
  Criterion c(9, "regular_supergraph validates for n <= 6, D2 in {3, 5}");
  for (int D2 : {3, 5}) {
    auto keep = [&](const LabeledGraph& g) {
      if (!is_planar(g)) return false;
      auto d = g.degrees();
      for (int v = 1; v <= g.n; ++v)
        if (d[v] > D2) return false;
      return true;
    };
    for (int n = 1; n <= 6; ++n) {
      auto levels = iso_classes_by_edges(n, n * (n - 1) / 2, keep);
      for (auto& level : levels)
        for (auto& g : level) {
          LabeledGraph r = regular_supergraph(g, D2);
          auto d = r.degrees();
          bool ok = is_planar(r);
          for (int v = 1; v <= r.n; ++v) ok &= (d[v] == D2);
          for (auto& e : g.edges) ok &= r.has_edge(e.first, e.second);
          if (!ok)
            c.fail("D2 = " + std::to_string(D2) + " fails at " + to_graph6(g));
        }
    }
  }
  c.finish();
}

void criterion10() {
  Criterion c(10,
              "asymptotics substituted: exact finite-n probability tables, n <= 7");
  for (auto which : {TrendTable::component_table, TrendTable::connectivity_table,
                     TrendTable::subgraph_table, TrendTable::kappa_bounds}) {
    std::string csv = trend_tables(7, which);
    if (csv.find("EMPIRICAL PROBE") == std::string::npos)
      c.fail("missing probe label");
    if (csv.find("\n7,") == std::string::npos)
      c.fail("missing n = 7 rows");
  }
  // Spot values: triangulations are connected; P[K3 subgraph] at (3,3) = 1.
  std::string conn = trend_tables(7, TrendTable::connectivity_table);
  for (int n = 4; n <= 7; ++n) {
    std::string row = std::to_string(n) + "," + std::to_string(3 * n - 6) + ",1/1,";
    if (conn.find(row) == std::string::npos)
      c.fail("P[connected] at m = 3n-6 not 1 for n = " + std::to_string(n));
  }
  std::string sub = trend_tables(3, TrendTable::subgraph_table);
  if (sub.find("3,3,1/1,") == std::string::npos)
    c.fail("P[K3 subgraph] at (3,3) != 1");
  c.finish();
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criteria5and6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  if (g_failures) {
    std::cout << "ACCEPTANCE: " << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "ACCEPTANCE: all 10 criteria passed\n";
  return 0;
}
