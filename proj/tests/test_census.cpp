#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "planarlab/census.hpp"

using namespace planarlab;

namespace {

LabeledGraph complete(int n) {
  LabeledGraph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

ClassConstraints cls(int n) {
  ClassConstraints c;
  c.n = n;
  return c;
}

}  // namespace

TEST_CASE("enumerate_class: |P(n)| = 1, 2, 8, 64, 1023") {
  std::vector<long long> expect{1, 2, 8, 64, 1023};
  for (int n = 1; n <= 5; ++n)
    CHECK(enumerate_class(cls(n), nullptr) == expect[n - 1]);
  // n = 6 full count for later cross-checks (not a pinned value).
  CHECK(enumerate_class(cls(6), nullptr) == 32071);
}

TEST_CASE("enumerate_class: edge slices and degree windows") {
  ClassConstraints c = cls(4);
  c.m = 6;
  CHECK(enumerate_class(c, nullptr) == 1);  // K4 only

  c = cls(5);
  c.m = 10;
  CHECK(enumerate_class(c, nullptr) == 0);  // K5 non-planar

  // 3-regular graphs on 4 vertices: only K4.
  c = cls(4);
  c.d1 = 3; c.d2 = 3; c.D1 = 3; c.D2 = 3;
  long long cnt = 0;
  enumerate_class(c, [&](const LabeledGraph& g) {
    ++cnt;
    CHECK(g == complete(4));
  });
  CHECK(cnt == 1);

  // P(n, D2, 5, 0, D2): D2-regular planar; empty for odd n.
  for (int D2 : {3, 5}) {
    ClassConstraints r = cls(5);
    r.d1 = D2; r.d2 = 5; r.D1 = 0; r.D2 = D2;
    CHECK(enumerate_class(r, nullptr) == 0);
  }
  // Even n sanity: 3-regular planar on 4 vertices exists (K4).
  ClassConstraints r4 = cls(4);
  r4.d1 = 3; r4.d2 = 5; r4.D1 = 0; r4.D2 = 3;
  CHECK(enumerate_class(r4, nullptr) == 1);
}

TEST_CASE("sharded enumeration merges to the single-shard row") {
  for (int n : {4, 5, 6}) {
    CensusRow whole = census_row(cls(n));
    CensusRow merged;
    merged.constraints = cls(n);
    for (int s = 0; s < 4; ++s)
      merged = merge_rows(merged, census_row(cls(n), false, 4, s));
    CHECK(merged.total == whole.total);
    CHECK(merged.connected == whole.connected);
    CHECK(merged.kappa_histogram == whole.kappa_histogram);
  }
}

TEST_CASE("probability: fixed examples") {
  Predicate conn;
  conn.kind = Predicate::connected;
  CHECK(probability(cls(2), conn) == Rational(1, 2));

  ClassConstraints c32 = cls(3);
  c32.m = 2;
  CHECK(probability(c32, conn) == Rational(1, 1));

  // Spot value cross-checked by direct scan: P[K3 subgraph] on n=4.
  Predicate k3sub;
  k3sub.kind = Predicate::has_subgraph_iso;
  k3sub.pattern = complete(3);
  long long hits = 0, tot = 0;
  enumerate_class(cls(4), [&](const LabeledGraph& g) {
    ++tot;
    bool any = false;
    for (int a = 1; a <= 4 && !any; ++a)
      for (int b = a + 1; b <= 4 && !any; ++b)
        for (int cc = b + 1; cc <= 4 && !any; ++cc)
          if (g.has_edge(a, b) && g.has_edge(b, cc) && g.has_edge(a, cc)) any = true;
    if (any) ++hits;
  });
  CHECK(probability(cls(4), k3sub) == Rational(hits, tot));

  // Complement identity: P[connected] + P[kappa >= 2] = 1.
  Predicate k1;
  k1.kind = Predicate::kappa_leq;
  k1.l = 1;
  for (int n = 1; n <= 5; ++n) {
    Rational pc = probability(cls(n), conn);
    Rational pk = probability(cls(n), k1);
    CHECK(pc == pk);
  }

  CHECK_THROWS(probability([] { ClassConstraints c = cls(5); c.m = 10; return c; }(),
                           conn));
}

TEST_CASE("kappa dominance holds for n <= 5 (n = 6 in acceptance)") {
  for (int n = 1; n <= 5; ++n) {
    auto rep = kappa_dominance_check(n);
    INFO("n = ", n);
    for (auto& v : rep.violations) INFO(v);
    CHECK(rep.ok);
    CHECK(rep.p_connected.value() >= std::exp(-1.0) - 1e-12);
    CHECK(rep.e_kappa.value() <= 2.0 + 1e-12);
  }
  auto r1 = kappa_dominance_check(1);
  CHECK(r1.p_connected == Rational(1, 1));
  auto r2 = kappa_dominance_check(2);
  CHECK(r2.e_kappa == Rational(3, 2));
  CHECK(r2.p_connected == Rational(1, 2));
}

TEST_CASE("trend_tables: structure and sanity") {
  for (auto which : {TrendTable::component_table, TrendTable::connectivity_table,
                     TrendTable::subgraph_table, TrendTable::kappa_bounds}) {
    std::string csv = trend_tables(5, which);
    CHECK(csv.find("EMPIRICAL PROBE") != std::string::npos);
    CHECK(csv.find(",") != std::string::npos);
  }
  // Connectivity at m = 3n-6 is non-decreasing in n over n = 4..6 (in fact
  // identically 1: a disconnected planar graph has at most 3n-9 edges, so
  // every (n, 3n-6) planar graph is connected).
  std::string csv = trend_tables(6, TrendTable::connectivity_table);
  auto lookup = [&](int n, int m) {
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#' || line[0] == 'n') continue;
      std::istringstream ls(line);
      std::string tok;
      std::getline(ls, tok, ',');
      int ln = std::stoi(tok);
      std::getline(ls, tok, ',');
      int lm = std::stoi(tok);
      std::getline(ls, tok, ',');
      std::getline(ls, tok, ',');
      if (ln == n && lm == m) return std::stod(tok);
    }
    return -1.0;
  };
  double prev = -1;
  for (int n = 4; n <= 6; ++n) {
    double p = lookup(n, 3 * n - 6);
    REQUIRE(p >= 0);
    CHECK(p >= prev);
    prev = p;
  }
}

TEST_CASE("bounds: large n rejected without the flag") {
  ClassConstraints c = cls(9);
  CHECK_THROWS(enumerate_class(c, nullptr));
  CHECK_THROWS(enumerate_class(cls(5), nullptr, false, 0, 0));  // bad shard
}
