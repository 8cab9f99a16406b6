#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lss/cas_export.hpp"
#include "lss/classifier.hpp"
#include "lss/error.hpp"
#include "lss/graph.hpp"
#include "lss/pmd.hpp"
#include "lss/regularity.hpp"
#include "lss/report.hpp"
#include "lss/tpmd.hpp"
#include "lss/verify.hpp"

using namespace lss;

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kSize = 3, kIo = 4, kVerifyFailed = 5 };

struct Options {
  std::string graph_file;
  std::string family;
  bool pretty = false;
  bool witness = false;
  bool no_timing = false;
  std::optional<int> max_n;
  std::optional<int> max_edges;
  int jobs = 1;
  int d = 1;
  int s = 1;
  std::optional<long long> reg_base;
  std::string property = "ci";
  bool twisted = false;
  std::string dialect = "macaulay2";
  std::string out;
  std::string suite = "all";
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph load_graph(const Options& o) {
  if (!o.graph_file.empty() && !o.family.empty())
    throw Error(ErrorCode::BadParameter, "give either --graph or --family, not both");
  if (!o.family.empty()) return named_graph(o.family);
  if (o.graph_file.empty()) throw Error(ErrorCode::BadParameter, "one of --graph or --family is required");
  std::ifstream in(o.graph_file);
  if (!in) throw IoError("cannot read " + o.graph_file);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

SearchLimits limits_for(const Options& o, SearchLimits base) {
  if (const char* env = std::getenv("LSS_MAX_N")) {
    try {
      base.max_n = std::stoi(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadParameter, "LSS_MAX_N is not an integer");
    }
  }
  if (o.max_n) base.max_n = *o.max_n;
  if (o.max_edges) base.max_edges = *o.max_edges;
  return base;
}

void cite(RunReport& r, const std::string& c) {
  if (c.empty()) return;
  for (const auto& x : r.citations)
    if (x == c) return;
  r.citations.push_back(c);
}

RunReport cmd_invariants(const Options& o) {
  Graph g = load_graph(o);
  RunReport r{"invariants", graph_digest(g)};
  ShapeKind kind = shape_kind(g);
  PmdResult pm = pmd_exact(g, limits_for(o, kPmdLimits));
  TpmdResult tp = tpmd_exact(g, limits_for(o, kTpmdLimits));
  r.results = Json{{"n", g.n()},
                   {"edges", g.edge_count()},
                   {"max_degree", max_degree(g)},
                   {"shape", shape_kind_name(kind)},
                   {"connected", is_connected(g)},
                   {"pmd", pm.p},
                   {"tpmd", tp.p},
                   {"tpmd_lower_bound", (max_degree(g) + 1) / 2},
                   {"empty_odd_stage", tp.has_empty_odd_stage}};
  if (o.witness) {
    r.results["pmd_witness"] = to_json(pm.witness);
    r.results["tpmd_witness"] = to_json(tp.witness, tp.certificates);
  }
  return r;
}

RunReport cmd_classify(const Options& o) {
  Graph g = load_graph(o);
  RunReport r{"classify", graph_digest(g)};
  Verdict v = classify(g, o.d, parse_property(o.property));
  r.results = to_json(v);
  r.results["d"] = o.d;
  cite(r, v.citation);
  return r;
}

RunReport cmd_reg(const Options& o) {
  Graph g = load_graph(o);
  RunReport r{"reg", graph_digest(g)};
  if (o.d < 1 || o.s < 1) throw Error(ErrorCode::BadParameter, "d and s must be at least 1");
  std::optional<RegularityReport> rep;
  std::string route;
  try {
    rep = reg_power_ci_graph(g, o.d, o.s);
    route = "complete-intersection";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotApplicable) throw;
  }
  if (!rep) {
    try {
      rep = reg_power_aci_bounds(g, o.d, o.s, o.reg_base);
      route = "almost-complete-intersection";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotApplicable && e.code() != ErrorCode::NotACI) throw;
    }
  }
  Json extra = Json::object();
  if (o.d >= 3) {
    SearchLimits lim = limits_for(o, kInducedSearchLimits);
    int t = t_invariant(g, o.d, lim), u = u_invariant(g, o.d, lim);
    extra["t"] = t;
    extra["u"] = u;
    extra["u_absent"] = u == 0;
    long long lower = reg_lower_bound(g, o.d, o.s, lim);
    extra["induced_lower_bound"] = lower;
    if (!rep) {
      RegularityReport lb;
      lb.s = o.s;
      lb.lower = lower;
      lb.citation = "induced subgraphs: reg(S/L^s) >= 2(s-1) + max{t(G), u(G)}";
      rep = lb;
      route = "induced-lower-bound";
    }
  }
  if (!rep) throw Error(ErrorCode::NotApplicable, "no regularity statement applies to this graph and d");
  r.results = to_json(*rep);
  r.results["route"] = route;
  r.results["d"] = o.d;
  for (auto& [k, v] : extra.items()) r.results[k] = v;
  cite(r, rep->citation);
  return r;
}

RunReport cmd_koszul(const Options& o) {
  Graph g = load_graph(o);
  RunReport r{"koszul", graph_digest(g)};
  bool k = koszul_classify(g, o.d);
  r.results = Json{{"d", o.d}, {"koszul", k}, {"edges", g.edge_count()}, {"n", g.n()}};
  r.results["citation"] = g.edge_count() == 0 ? "edgeless: the quotient is a polynomial ring, Koszul"
                                              : "generic quadrics: Koszul iff r <= nd or 4r >= n^2 d^2 + 2nd";
  cite(r, r.results["citation"].get<std::string>());
  try {
    KoszulFamilyReport f = koszul_family(g, o.d);
    r.results["family"] = Json{{"name", f.family}, {"sufficient_condition_met", f.sufficient_condition_met},
                               {"citation", f.citation}};
    cite(r, f.citation);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnknownFamily) throw;
    r.results["family"] = nullptr;
  }
  return r;
}

RunReport cmd_export(const Options& o, bool& printed_script) {
  Graph g = load_graph(o);
  RunReport r{"export", graph_digest(g)};
  Dialect dialect = parse_dialect(o.dialect);
  std::string script = export_cas_script(g, o.d, o.twisted, dialect);
  if (o.out.empty()) {
    std::cout << script;
    printed_script = true;
    return r;
  }
  std::ofstream out(o.out, std::ios::binary);
  if (!out || !(out << script) || !out.flush()) throw IoError("cannot write " + o.out);
  r.results = Json{{"path", o.out},
                   {"dialect", dialect_name(dialect)},
                   {"twisted", o.twisted},
                   {"d", o.d},
                   {"generators", g.edge_count()},
                   {"bytes", script.size()}};
  r.results["script_fnv1a64"] = fnv1a64(script);
  return r;
}

RunReport cmd_verify(const Options& o, bool& failed) {
  VerifyOptions v;
  v.max_n = o.max_n.value_or(5);
  v.jobs = std::max(1, o.jobs);
  std::string key = "verify:" + o.suite + ":" + std::to_string(v.max_n);
  RunReport r{"verify", [&] {
                char buf[17];
                std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(key)));
                return std::string(buf);
              }()};
  Json suites = Json::array();
  for (const auto& s : run_verify(o.suite, v)) {
    suites.push_back(Json{{"suite", s.suite},
                          {"checks", s.checks},
                          {"failures", s.failures},
                          {"passed", s.passed()},
                          {"samples", s.samples}});
    failed = failed || !s.passed();
  }
  r.results = Json{{"max_n", v.max_n}, {"suites", suites}};
  return r;
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::InvalidEdge:
    case ErrorCode::OutOfRange:
    case ErrorCode::UnknownFamily:
    case ErrorCode::BadParameter:
    case ErrorCode::UnknownDialect:
      return kParse;
    case ErrorCode::SizeLimit: return kSize;
    default: return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lovasz-Saks-Schrijver ideal toolkit: matching decompositions, classifications, regularity"};
  app.require_subcommand(1);
  Options o;

  auto add_graph = [&](CLI::App* c) {
    c->add_option("--graph", o.graph_file, "edge-list file");
    c->add_option("--family", o.family, "Kn, Km,n, Cn or Pn");
    c->add_flag("--pretty", o.pretty, "indent JSON output");
    c->add_flag("--no-timing", o.no_timing, "omit timing_ms");
    c->add_option("--max-n", o.max_n, "vertex cap for exact searches");
    c->add_option("--max-edges", o.max_edges, "edge cap for exact searches");
  };
  auto* inv = app.add_subcommand("invariants", "max degree, shape, pmd and tpmd");
  add_graph(inv);
  inv->add_flag("--witness", o.witness, "include decompositions and certificates");

  auto* cls = app.add_subcommand("classify", "radical / ci / aci / prime / twisted-ci verdict");
  add_graph(cls);
  cls->add_option("--d", o.d, "number of layers")->required()->check(CLI::PositiveNumber);
  cls->add_option("--property", o.property, "ci, aci, radical, prime or twisted-ci");

  auto* reg = app.add_subcommand("reg", "regularity of powers");
  add_graph(reg);
  reg->add_option("--d", o.d)->required()->check(CLI::PositiveNumber);
  reg->add_option("--s", o.s, "power")->check(CLI::PositiveNumber);
  reg->add_option("--reg-base", o.reg_base, "known value of reg(S/L_G(d))");

  auto* kos = app.add_subcommand("koszul", "Koszul property of the quotient");
  add_graph(kos);
  kos->add_option("--d", o.d)->required()->check(CLI::PositiveNumber);

  auto* exp = app.add_subcommand("export", "Macaulay2 or Singular script for the ideal");
  add_graph(exp);
  exp->add_option("--d", o.d)->required()->check(CLI::PositiveNumber);
  exp->add_flag("--twisted", o.twisted, "twisted generators");
  exp->add_option("--dialect", o.dialect, "macaulay2 or singular");
  exp->add_option("--out", o.out, "output file (default: stdout)");

  auto* ver = app.add_subcommand("verify", "cross-oracle self checks");
  ver->add_option("--suite", o.suite, "matching, pmd, tpmd, leading-terms, classifier or all");
  ver->add_option("--max-n", o.max_n, "largest vertex count enumerated (default 5)");
  ver->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  ver->add_flag("--pretty", o.pretty);
  ver->add_flag("--no-timing", o.no_timing);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  auto start = std::chrono::steady_clock::now();
  try {
    RunReport report;
    bool printed_script = false;
    bool failed = false;
    if (*inv) report = cmd_invariants(o);
    if (*cls) report = cmd_classify(o);
    if (*reg) report = cmd_reg(o);
    if (*kos) report = cmd_koszul(o);
    if (*exp) report = cmd_export(o, printed_script);
    if (*ver) report = cmd_verify(o, failed);
    if (printed_script) return kOk;
    report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << render(report, o.pretty, !o.no_timing);
    return failed ? kVerifyFailed : kOk;
  } catch (const Error& e) {
    std::cerr << "error: " << error_code_name(e.code()) << ": " << e.what();
    if (e.line()) std::cerr << " (line " << e.line() << ")";
    std::cerr << "\n";
    return exit_for(e.code());
  } catch (const IoError& e) {
    std::cerr << "error: io: " << e.what() << "\n";
    return kIo;
  }
}
