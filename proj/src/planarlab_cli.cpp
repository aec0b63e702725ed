// planarlab: planar-graph combinatorics workbench.
//
// Subcommands: planarity, addable, min-add, detect, census, fourreg,
// construct.  Graphs are passed as graph6 strings (simple graphs) or JSON
// edge lists {"n": int, "edges": [[u, v], ...]} for multigraphs; loops are
// [u, u].  Exit codes: 0 success, 2 usage or input error, 3 negative fourreg
// decision, 4 enumeration bound exceeded.  All outputs use fixed key and
// iteration orders, so identical inputs produce byte-identical reports.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "planarlab/addable.hpp"
#include "planarlab/census.hpp"
#include "planarlab/detectors.hpp"
#include "planarlab/fourreg.hpp"
#include "planarlab/gadgets.hpp"

using json = nlohmann::ordered_json;
using namespace planarlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNo = 3;
constexpr int kExitBound = 4;

// An error that should surface as "bound exceeded" rather than bad input.
struct BoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accept a graph6 literal, or the path of a file whose first line is one.
LabeledGraph load_graph6(const std::string& arg) {
  std::string s = arg;
  if (std::ifstream in(arg); in.good()) std::getline(in, s);
  return from_graph6(s);
}

PlanarMultigraph load_multigraph_json(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw std::invalid_argument("cannot open " + path);
  json j = json::parse(in);
  PlanarMultigraph g(j.at("n").get<int>());
  for (auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  return g;
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (auto& e : edges) out.push_back({e.first, e.second});
  return out;
}

json multigraph_json(const PlanarMultigraph& g) {
  return json{{"n", g.n}, {"edges", edges_json(g.edges)}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int max_n_bound() { return detail::census_max_n(); }

// ---------------------------------------------------------------------------
int run_planarity(const std::string& g6, const std::string& jsonfile) {
  PlanarMultigraph g =
      jsonfile.empty() ? PlanarMultigraph::from_simple(load_graph6(g6))
                       : load_multigraph_json(jsonfile);
  auto res = embed(g);
  json out;
  out["n"] = g.n;
  out["m"] = g.m();
  out["planar"] = res.planar();
  if (res.planar()) {
    out["face_count"] = res.embedding->face_count();
    json faces = json::array();
    for (auto& walk : res.embedding->faces()) {
      json f = json::array();
      for (int d : walk) {
        const Edge& e = g.edges[d >> 1];
        f.push_back((d & 1) ? e.second : e.first);
      }
      faces.push_back(std::move(f));
    }
    out["faces"] = std::move(faces);
  } else {
    const auto& w = *res.witness;
    json wj;
    wj["kind"] = w.is_k5 ? "K5" : "K3,3";
    wj["branch_vertices"] = w.branch_vertices;
    json paths = json::array();
    for (auto& p : w.paths) paths.push_back(p);
    wj["paths"] = std::move(paths);
    out["witness"] = std::move(wj);
  }
  emit(out);
  return kExitOk;
}

int run_addable(const std::string& g6) {
  LabeledGraph g = load_graph6(g6);
  AddableSet s = addable_set(g);
  json out;
  out["graph6"] = to_graph6(g);
  out["n"] = g.n;
  out["m"] = g.m();
  out["count"] = s.size();
  out["addable"] = edges_json(s.nonedges);
  emit(out);
  return kExitOk;
}

int run_min_add(int n, int m) {
  MinAddResult res;
  try {
    res = min_addable(n, m, max_n_bound());
  } catch (const std::invalid_argument& e) {
    throw BoundExceeded(e.what());
  }
  json out;
  out["n"] = n;
  out["m"] = m;
  if (auto* cert = std::get_if<MinAddCertificate>(&res)) {
    out["value"] = cert->value;
    out["witness_graph6"] = to_graph6(cert->witness);
  } else {
    out["empty"] = true;
  }
  emit(out);
  return kExitOk;
}

int run_detect(const std::string& kind, const std::string& host_g6,
               const std::string& pattern_g6, int d1) {
  LabeledGraph host = load_graph6(host_g6);
  json out;
  out["kind"] = kind;
  out["host"] = to_graph6(host);
  if (kind == "census") {
    StructureCensus c = structure_census(host);
    json cj;
    cj["pendant_edges"] = c.pendant_edges;
    cj["isolated_vertices"] = c.isolated_vertices;
    json cycles = json::array();
    for (auto& cy : c.short_cycles) cycles.push_back(cy);
    cj["short_cycles"] = std::move(cycles);
    json tris = json::array();
    for (auto& t : c.good_triangles) tris.push_back(t);
    cj["good_triangles"] = std::move(tris);
    out["census"] = std::move(cj);
    emit(out);
    return kExitOk;
  }
  if (pattern_g6.empty())
    throw std::invalid_argument("detect: --pattern required for kind " + kind);
  LabeledGraph pattern = load_graph6(pattern_g6);
  out["pattern"] = to_graph6(pattern);
  std::vector<AppearanceRecord> recs;
  if (kind == "appear")
    recs = d1 > 0 ? find_appearances_filtered(pattern, host, d1)
                  : find_appearances(pattern, host);
  else if (kind == "2appear")
    recs = find_two_appearances(pattern, host);
  else if (kind == "6appear")
    recs = find_six_appearances(pattern, host);
  else
    throw std::invalid_argument("detect: unknown kind " + kind);
  json rj = json::array();
  for (auto& r : recs) {
    json rec;
    rec["site"] = r.site;
    rec["boundary"] = edges_json(r.boundary);
    rj.push_back(std::move(rec));
  }
  out["count"] = recs.size();
  out["records"] = std::move(rj);
  emit(out);
  return kExitOk;
}

Predicate parse_predicate(const std::string& name, const std::string& pattern_g6,
                          int l) {
  Predicate p;
  if (name == "connected") p.kind = Predicate::connected;
  else if (name == "component-iso") p.kind = Predicate::has_component_iso;
  else if (name == "subgraph-iso") p.kind = Predicate::has_subgraph_iso;
  else if (name == "induced") p.kind = Predicate::has_induced_order_preserving;
  else if (name == "kappa-leq") p.kind = Predicate::kappa_leq;
  else throw std::invalid_argument("census: unknown predicate " + name);
  if (p.kind == Predicate::kappa_leq) p.l = l;
  else if (p.kind != Predicate::connected) {
    if (pattern_g6.empty())
      throw std::invalid_argument("census: --pattern required for " + name);
    p.pattern = load_graph6(pattern_g6);
  }
  return p;
}

int run_census(int n, int m, int d1, int d2, int D1, int D2,
               const std::string& predicate, const std::string& pattern_g6,
               int l, int shards, const std::string& table, int n_max) {
  if (!table.empty()) {
    TrendTable which;
    if (table == "component") which = TrendTable::component_table;
    else if (table == "connectivity") which = TrendTable::connectivity_table;
    else if (table == "subgraph") which = TrendTable::subgraph_table;
    else if (table == "kappa") which = TrendTable::kappa_bounds;
    else throw std::invalid_argument("census: unknown table " + table);
    if (n_max > max_n_bound()) throw BoundExceeded("census: n-max exceeds bound");
    std::cout << trend_tables(n_max, which);
    return kExitOk;
  }
  ClassConstraints c;
  c.n = n;
  if (m >= 0) c.m = m;
  if (d1 >= 0) c.d1 = d1;
  if (d2 >= 0) c.d2 = d2;
  if (D1 >= 0) c.D1 = D1;
  if (D2 >= 0) c.D2 = D2;
  if (n > max_n_bound()) throw BoundExceeded("census: n exceeds bound");
  json out;
  out["n"] = c.n;
  if (m >= 0) out["m"] = m;
  if (!predicate.empty()) {
    Predicate p = parse_predicate(predicate, pattern_g6, l);
    long long hit = 0, total = 0;
    for (int s = 0; s < shards; ++s)
      enumerate_class(c, [&](const LabeledGraph& g) {
        ++total;
        if (p.eval(g)) ++hit;
      }, false, shards, s);
    out["predicate"] = predicate;
    out["count"] = hit;
    out["total"] = total;
    if (total == 0) throw std::invalid_argument("census: empty class");
    out["p"] = Rational(hit, total).str();
  } else {
    long long total = 0;
    for (int s = 0; s < shards; ++s)
      total += enumerate_class(c, nullptr, false, shards, s);
    out["total"] = total;
  }
  emit(out);
  return kExitOk;
}

int run_fourreg(const std::string& g6, const std::string& witness_out) {
  LabeledGraph h = load_graph6(g6);
  FourEmbedResult res = is_four_embeddable(h, !witness_out.empty());
  json out;
  out["graph6"] = to_graph6(h);
  out["yes"] = res.yes;
  if (res.yes) out["multigraph"] = multigraph_json(*res.multigraph);
  emit(out);
  if (!res.yes) return kExitNo;
  if (!witness_out.empty()) {
    json w;
    w["n"] = res.witness->n;
    w["edges"] = edges_json(res.witness->edges);
    w["graph6"] = to_graph6(*res.witness);
    std::ofstream f(witness_out);
    if (!f.good()) throw std::invalid_argument("cannot write " + witness_out);
    f << w.dump(2) << "\n";
  }
  return kExitOk;
}

int run_construct(const std::string& kind, int core, int inserted, int isolated,
                  const std::string& g6, int degree) {
  json out;
  out["kind"] = kind;
  LabeledGraph g;
  if (kind == "spine") {
    g = build_spine_graph(SpineParams{core, inserted, isolated});
  } else if (kind == "regular") {
    if (g6.empty()) throw std::invalid_argument("construct: --input required");
    g = regular_supergraph(load_graph6(g6), degree);
    out["degree"] = degree;
  } else {
    throw std::invalid_argument("construct: unknown kind " + kind);
  }
  out["graph6"] = to_graph6(g);
  out["n"] = g.n;
  out["m"] = g.m();
  out["planar"] = is_planar(g);
  emit(out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planarlab: planar-graph combinatorics workbench"};
  app.require_subcommand(1);
  unsigned long seed = 1;  // reserved for randomized samplers
  app.add_option("--seed", seed, "Seed for randomized samplers (fixed default)");

  // planarity
  auto* planarity = app.add_subcommand("planarity", "Planarity with embedding or witness");
  std::string p_g6, p_json;
  planarity->add_option("--input", p_g6, "graph6 string or file");
  planarity->add_option("--json", p_json, "JSON multigraph file");

  // addable
  auto* addable = app.add_subcommand("addable", "Addable non-edges of a planar graph");
  std::string a_g6;
  addable->add_option("--input", a_g6, "graph6 string or file")->required();

  // min-add
  auto* minadd = app.add_subcommand("min-add", "Minimum |add| over the (n, m) class");
  int ma_n = 0, ma_m = 0;
  minadd->add_option("--n", ma_n, "vertex count")->required();
  minadd->add_option("--m", ma_m, "edge count")->required();

  // detect
  auto* detect = app.add_subcommand("detect", "Appearance detectors and structure census");
  std::string d_kind, d_host, d_pattern;
  int d_d1 = 0;
  detect->add_option("--kind", d_kind, "appear | 2appear | 6appear | census")->required();
  detect->add_option("--host", d_host, "host graph6")->required();
  detect->add_option("--pattern", d_pattern, "pattern graph6");
  detect->add_option("--d1", d_d1, "minimum-degree filter for kind=appear");

  // census
  auto* census = app.add_subcommand("census", "Exact class counts and probabilities");
  int c_n = 1, c_m = -1, c_d1 = -1, c_d2 = -1, c_D1 = -1, c_D2 = -1;
  int c_l = 1, c_shards = 1, c_shard = -1, c_nmax = 5;
  std::string c_pred, c_pattern, c_table;
  census->add_option("--n", c_n, "vertex count");
  census->add_option("--m", c_m, "edge count slice");
  census->add_option("--d1", c_d1, "min-degree window lower bound");
  census->add_option("--d2", c_d2, "min-degree window upper bound");
  census->add_option("--D1", c_D1, "max-degree window lower bound");
  census->add_option("--D2", c_D2, "max-degree window upper bound");
  census->add_option("--predicate", c_pred,
                     "connected | component-iso | subgraph-iso | induced | kappa-leq");
  census->add_option("--pattern", c_pattern, "pattern graph6 for iso predicates");
  census->add_option("--l", c_l, "bound for kappa-leq");
  census->add_option("--shards", c_shards, "split the enumeration into shards");
  census->add_option("--shard", c_shard, "run a single shard (default: all)");
  census->add_option("--table", c_table,
                     "component | connectivity | subgraph | kappa (CSV output)");
  census->add_option("--n-max", c_nmax, "largest n for --table");

  // fourreg
  auto* fourreg = app.add_subcommand("fourreg", "Subgraph-of-4-regular decision");
  std::string f_g6, f_witness;
  fourreg->add_option("--input", f_g6, "host graph6")->required();
  fourreg->add_option("--witness", f_witness, "write simple witness JSON here");

  // construct
  auto* construct = app.add_subcommand("construct", "Extremal constructions");
  std::string k_kind, k_g6;
  int k_core = 5, k_inserted = 0, k_isolated = 0, k_degree = 3;
  construct->add_option("--kind", k_kind, "spine | regular")->required();
  construct->add_option("--core", k_core, "spine core order");
  construct->add_option("--inserted", k_inserted, "spine inserted vertices");
  construct->add_option("--isolated", k_isolated, "spine isolated vertices");
  construct->add_option("--input", k_g6, "host graph6 for kind=regular");
  construct->add_option("--degree", k_degree, "target degree (3 or 5)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*planarity) {
      if (p_g6.empty() == p_json.empty())
        throw std::invalid_argument("planarity: exactly one of --input/--json");
      return run_planarity(p_g6, p_json);
    }
    if (*addable) return run_addable(a_g6);
    if (*minadd) return run_min_add(ma_n, ma_m);
    if (*detect) return run_detect(d_kind, d_host, d_pattern, d_d1);
    if (*census) {
      if (c_shard >= 0) {
        // Single shard: emit just that shard's row (merge externally).
        ClassConstraints c;
        c.n = c_n;
        if (c_m >= 0) c.m = c_m;
        if (c_n > max_n_bound()) throw BoundExceeded("census: n exceeds bound");
        json out;
        out["n"] = c_n;
        out["shards"] = c_shards;
        out["shard"] = c_shard;
        out["total"] = enumerate_class(c, nullptr, false, c_shards, c_shard);
        emit(out);
        return kExitOk;
      }
      return run_census(c_n, c_m, c_d1, c_d2, c_D1, c_D2, c_pred, c_pattern,
                        c_l, c_shards, c_table, c_nmax);
    }
    if (*fourreg) return run_fourreg(f_g6, f_witness);
    if (*construct)
      return run_construct(k_kind, k_core, k_inserted, k_isolated, k_g6, k_degree);
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBound;
  } catch (const std::exception& e) {
    std::string msg = e.what();
    std::cerr << "error: " << msg << "\n";
    return msg.find("bound") != std::string::npos ? kExitBound : kExitInput;
  }
  return kExitInput;
}
