#pragma once

// Exhaustive censuses of the labeled planar classes P(n), P(n,m),
// P(n,d1,d2,D1,D2): direct enumeration over edge subsets of K_n, exact
// rational probabilities, the component-count dominance checks, and the
// empirical trend tables.

#include <bit>
#include <cassert>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <sstream>

#include "planarlab/canonical.hpp"
#include "planarlab/embed.hpp"

namespace planarlab {

// ---------------------------------------------------------------------------
// Exact rationals (counts fit comfortably in 64 bits at census scale).
// ---------------------------------------------------------------------------
struct Rational {
  long long num = 0, den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) {
    assert(den > 0);
    long long g = std::gcd(num, den);
    if (g > 1) { num /= g; den /= g; }
  }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

inline Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

// ---------------------------------------------------------------------------
// Class constraints and rows.
// ---------------------------------------------------------------------------
struct ClassConstraints {
  int n = 0;
  std::optional<int> m;
  int d1 = 0, d2 = std::numeric_limits<int>::max();  // min-degree window
  int D1 = 0, D2 = std::numeric_limits<int>::max();  // max-degree window

  bool valid() const { return n >= 1 && d1 <= d2 && D1 <= D2; }
};

struct CensusRow {
  ClassConstraints constraints;
  long long total = 0;
  long long connected = 0;
  std::map<int, long long> kappa_histogram;
  std::map<std::string, long long> predicate_counts;
};

inline constexpr int kCensusDefaultMaxN = 7;

namespace detail {

inline int census_max_n() {
  if (const char* s = std::getenv("PLANARLAB_MAX_N")) {
    int v = std::atoi(s);
    if (v >= 1) return v;
  }
  return kCensusDefaultMaxN;
}

inline int component_count(int n, const std::vector<Edge>& edges) {
  std::vector<int> p(n + 1);
  std::iota(p.begin(), p.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return p[x] == x ? x : p[x] = find(p[x]);
  };
  int comps = n;
  for (auto& e : edges) {
    int a = find(e.first), b = find(e.second);
    if (a != b) { p[a] = b; --comps; }
  }
  return comps;
}

}  // namespace detail

// Visit every labeled graph of the class exactly once (all edge subsets of
// K_n filtered by planarity, the optional edge count, and the degree
// windows).  `allow_large` lifts the n <= 7 default bound (env var
// PLANARLAB_MAX_N also raises it); sharding splits the mask range into
// `shards` contiguous chunks by the high-order mask bits.
inline long long enumerate_class(const ClassConstraints& c,
                                 const std::function<void(const LabeledGraph&)>& visitor,
                                 bool allow_large = false,
                                 int shards = 1, int shard = 0) {
  if (!c.valid()) throw std::invalid_argument("enumerate_class: bad constraints");
  if (c.n > detail::census_max_n() && !allow_large)
    throw std::invalid_argument("enumerate_class: order exceeds bound (set flag)");
  if (shards < 1 || shard < 0 || shard >= shards)
    throw std::invalid_argument("enumerate_class: bad shard spec");
  int n = c.n;
  int pairs = n * (n - 1) / 2;
  std::vector<Edge> all;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) all.push_back({u, v});
  unsigned long long nmask = 1ull << pairs;
  unsigned long long lo = nmask * shard / shards;
  unsigned long long hi = nmask * (shard + 1) / shards;
  int planar_cap = n >= 3 ? 3 * n - 6 : pairs;
  long long total = 0;
  std::vector<Edge> edges;
  std::vector<int> deg(n + 1);
  for (unsigned long long mask = lo; mask < hi; ++mask) {
    int m = std::popcount(mask);
    if (m > planar_cap) continue;
    if (c.m && m != *c.m) continue;
    edges.clear();
    std::fill(deg.begin(), deg.end(), 0);
    for (int b = 0; b < pairs; ++b)
      if (mask >> b & 1) {
        edges.push_back(all[b]);
        ++deg[all[b].first];
        ++deg[all[b].second];
      }
    if (n >= 1) {
      auto [lod, hid] = std::minmax_element(deg.begin() + 1, deg.end());
      if (*lod < c.d1 || *lod > c.d2 || *hid < c.D1 || *hid > c.D2) continue;
    }
    if (n >= 5 && !is_planar_simple(n, edges)) continue;
    ++total;
    if (visitor) {
      LabeledGraph g(n);
      g.edges = edges;
      visitor(g);
    }
  }
  return total;
}

inline CensusRow census_row(const ClassConstraints& c, bool allow_large = false,
                            int shards = 1, int shard = 0) {
  CensusRow row;
  row.constraints = c;
  row.total = enumerate_class(
      c,
      [&](const LabeledGraph& g) {
        int k = detail::component_count(g.n, g.edges);
        ++row.kappa_histogram[k];
        if (k == 1) ++row.connected;
      },
      allow_large, shards, shard);
  return row;
}

inline CensusRow merge_rows(const CensusRow& a, const CensusRow& b) {
  CensusRow out = a;
  out.total += b.total;
  out.connected += b.connected;
  for (auto& [k, v] : b.kappa_histogram) out.kappa_histogram[k] += v;
  for (auto& [k, v] : b.predicate_counts) out.predicate_counts[k] += v;
  return out;
}

// ---------------------------------------------------------------------------
// probability
// ---------------------------------------------------------------------------
struct Predicate {
  enum Kind {
    connected,
    has_component_iso,
    has_subgraph_iso,
    has_induced_order_preserving,
    kappa_leq
  } kind = connected;
  LabeledGraph pattern;  // for the iso kinds
  int l = 1;             // for kappa_leq

  bool eval(const LabeledGraph& g) const {
    switch (kind) {
      case connected:
        return detail::component_count(g.n, g.edges) == 1;
      case has_component_iso:
        return planarlab::has_component_iso(pattern, g);
      case has_subgraph_iso:
        return planarlab::has_subgraph_iso(pattern, g);
      case has_induced_order_preserving:
        return !order_preserving_induced_copies(pattern, g).empty();
      case kappa_leq:
        return detail::component_count(g.n, g.edges) <= l;
    }
    return false;
  }
};

inline Rational probability(const ClassConstraints& c, const Predicate& p,
                            bool allow_large = false) {
  long long hit = 0;
  long long total = enumerate_class(
      c, [&](const LabeledGraph& g) { if (p.eval(g)) ++hit; }, allow_large);
  if (total == 0) throw std::invalid_argument("probability: empty class");
  return Rational(hit, total);
}

// ---------------------------------------------------------------------------
// kappa dominance: kappa(P_n) is stochastically dominated by 1 + Poisson(1);
// in particular P[connected] >= 1/e and E[kappa] <= 2.
// ---------------------------------------------------------------------------
struct KappaDominanceReport {
  int n = 0;
  bool ok = true;
  Rational p_connected;
  Rational e_kappa;  // as a rational (sum k * count / total)
  std::vector<std::string> violations;
};

inline KappaDominanceReport kappa_dominance_check(int n, bool allow_large = false) {
  ClassConstraints c;
  c.n = n;
  CensusRow row = census_row(c, allow_large);
  KappaDominanceReport rep;
  rep.n = n;
  const double slack = 1e-12;  // in the inequality's favor

  rep.p_connected = Rational(row.connected, row.total);
  if (rep.p_connected.value() + slack < std::exp(-1.0)) {
    rep.ok = false;
    rep.violations.push_back("P[connected] < 1/e");
  }
  long long ksum = 0;
  for (auto& [k, cnt] : row.kappa_histogram) ksum += static_cast<long long>(k) * cnt;
  rep.e_kappa = Rational(ksum, row.total);
  if (rep.e_kappa.value() > 2.0 + slack) {
    rep.ok = false;
    rep.violations.push_back("E[kappa] > 2");
  }
  // Dominance: P[kappa <= l] >= sum_{k=0}^{l-1} e^{-1}/k! for every l >= 1.
  long long cum = 0;
  double poisson_cum = 0.0, fact = 1.0;
  for (int l = 1; l <= n; ++l) {
    cum += row.kappa_histogram.count(l) ? row.kappa_histogram[l] : 0;
    poisson_cum += std::exp(-1.0) / fact;  // k = l-1 term, 1/(l-1)!
    fact *= l;
    double lhs = Rational(cum, row.total).value();
    if (lhs + slack < poisson_cum) {
      rep.ok = false;
      rep.violations.push_back("P[kappa <= " + std::to_string(l) + "] below Poisson tail");
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// trend tables (empirical probes of the asymptotic summary tables).
// ---------------------------------------------------------------------------
enum class TrendTable { component_table, connectivity_table, subgraph_table, kappa_bounds };

inline std::string trend_tables(int n_max, TrendTable which, bool allow_large = false) {
  if (n_max > detail::census_max_n() && !allow_large)
    throw std::invalid_argument("trend_tables: order exceeds bound (set flag)");
  std::ostringstream out;
  out << "# EMPIRICAL PROBE: exact finite-n probabilities; no asymptotic claim"
         " is asserted.\n";
  LabeledGraph k3(3, {{1, 2}, {2, 3}, {1, 3}});
  switch (which) {
    case TrendTable::component_table:
    case TrendTable::connectivity_table:
    case TrendTable::subgraph_table: {
      if (which == TrendTable::component_table)
        out << "# event: some component isomorphic to H = K3\n";
      else if (which == TrendTable::subgraph_table)
        out << "# event: some subgraph isomorphic to H = K3\n";
      else
        out << "# event: connected\n";
      out << "n,m,probability,probability_float\n";
      for (int n = 1; n <= n_max; ++n) {
        int cap = n >= 3 ? 3 * n - 6 : n * (n - 1) / 2;
        // One sweep per n, binned by edge count.
        std::vector<long long> hit(cap + 1, 0), tot(cap + 1, 0);
        ClassConstraints c;
        c.n = n;
        Predicate p;
        if (which == TrendTable::component_table) {
          p.kind = Predicate::has_component_iso;
          p.pattern = k3;
        } else if (which == TrendTable::subgraph_table) {
          p.kind = Predicate::has_subgraph_iso;
          p.pattern = k3;
        } else {
          p.kind = Predicate::connected;
        }
        enumerate_class(c, [&](const LabeledGraph& g) {
          int m = g.m();
          ++tot[m];
          if (p.eval(g)) ++hit[m];
        }, allow_large);
        for (int m = 0; m <= cap; ++m) {
          if (!tot[m]) continue;
          Rational r(hit[m], tot[m]);
          out << n << "," << m << "," << r.str() << "," << r.value() << "\n";
        }
      }
      break;
    }
    case TrendTable::kappa_bounds: {
      out << "# growth column target (not asserted): gamma_l ~ 27.2268\n";
      out << "n,total,e_kappa,median_kappa,p_connected,growth\n";
      double logfact = 0.0;
      for (int n = 1; n <= n_max; ++n) {
        logfact += std::log(static_cast<double>(n));
        ClassConstraints c;
        c.n = n;
        CensusRow row = census_row(c, allow_large);
        long long ksum = 0, cum = 0;
        int median = n;
        for (auto& [k, cnt] : row.kappa_histogram) ksum += static_cast<long long>(k) * cnt;
        for (auto& [k, cnt] : row.kappa_histogram) {
          cum += cnt;
          if (2 * cum >= row.total) { median = k; break; }
        }
        double growth = std::exp((std::log(static_cast<double>(row.total)) - logfact) / n);
        out << n << "," << row.total << "," << Rational(ksum, row.total).str()
            << "," << median << "," << Rational(row.connected, row.total).str()
            << "," << growth << "\n";
      }
      break;
    }
  }
  return out.str();
}

}  // namespace planarlab
