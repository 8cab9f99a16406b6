#include "lss/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "lss/classifier.hpp"
#include "lss/enumerate.hpp"
#include "lss/error.hpp"
#include "lss/matching.hpp"
#include "lss/pmd.hpp"
#include "lss/polynomial.hpp"
#include "lss/tpmd.hpp"

namespace lss {

namespace {

constexpr std::size_t kMaxSamples = 10;

struct ItemResult {
  long long checks = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (!ok) failures.push_back(describe());
  }
};

std::string describe(const Graph& g) {
  std::string s = "n=" + std::to_string(g.n()) + " E=";
  for (const auto& e : g.edges()) s += "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
  return s;
}

// Runs work over items on `jobs` threads and merges in item order.
SuiteResult run_items(const std::string& name, const std::vector<Graph>& items, int jobs,
                      const std::function<ItemResult(const Graph&)>& work) {
  std::vector<ItemResult> slots(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < items.size();) {
      try {
        slots[k] = work(items[k]);
      } catch (const std::exception& e) {
        slots[k].checks += 1;
        slots[k].failures.push_back(describe(items[k]) + ": exception: " + e.what());
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteResult r;
  r.suite = name;
  for (auto& s : slots) {
    r.checks += s.checks;
    r.failures += static_cast<long long>(s.failures.size());
    for (auto& f : s.failures)
      if (r.samples.size() < kMaxSamples) r.samples.push_back(std::move(f));
  }
  return r;
}

std::vector<Graph> labeled_graphs_up_to(int max_n, bool connected_only) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n)
    for_each_labeled_graph(n, [&](const Graph& g) {
      if (!connected_only || is_connected(g)) out.push_back(g);
    });
  return out;
}

std::vector<Graph> iso_classes_up_to(int max_n, bool connected_only) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n)
    for (auto& g : nonisomorphic_graphs(n, connected_only)) out.push_back(std::move(g));
  return out;
}

// The twisted invariants depend on the labeling, so small orders are covered
// labeling by labeling and larger ones by one representative per class.
constexpr int kAllLabelingsUpTo = 5;

std::vector<Graph> connected_for_twisted(int max_n) {
  std::vector<Graph> out = labeled_graphs_up_to(std::min(max_n, kAllLabelingsUpTo), true);
  for (int n = kAllLabelingsUpTo + 1; n <= max_n; ++n)
    for (auto& g : nonisomorphic_graphs(n, true)) out.push_back(std::move(g));
  return out;
}

void for_each_matching(const Graph& g, const std::function<void(const Matching&)>& visit) {
  std::vector<Edge> current;
  std::vector<bool> used(g.n() + 1, false);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == static_cast<std::size_t>(g.edge_count())) {
      if (!current.empty()) visit(Matching(current));
      return;
    }
    self(self, k + 1);
    const Edge& e = g.edges()[k];
    if (used[e.u] || used[e.v]) return;
    used[e.u] = used[e.v] = true;
    current.push_back(e);
    self(self, k + 1);
    current.pop_back();
    used[e.u] = used[e.v] = false;
  };
  rec(rec, 0);
}

ItemResult matching_item(const Graph& g) {
  ItemResult r;
  for_each_matching(g, [&](const Matching& m) {
    bool walk = !has_alternating_closed_walk(g, m);
    auto cert = find_weight_certificate(g, m);
    r.check(walk == cert.has_value(), [&] { return describe(g) + ": walk criterion and LP disagree"; });
    if (cert) r.check(certifies(g, m, *cert), [&] { return describe(g) + ": LP weights violate a constraint"; });
  });
  return r;
}

ItemResult pmd_item(const Graph& g) {
  ItemResult r;
  PmdResult res = pmd_exact(g);
  std::string why;
  r.check(is_pm_decomposition(g, res.witness, &why), [&] { return describe(g) + ": invalid witness: " + why; });
  r.check(res.p >= pmd_lower_bound(g), [&] { return describe(g) + ": pmd below max degree"; });
  for (std::size_t k = 0; k < res.witness.parts.size(); ++k) {
    const auto& c = res.witness.certificates[k];
    r.check(c && certifies(residual_graph(g, res.witness, k), res.witness.parts[k], *c),
            [&] { return describe(g) + ": part " + std::to_string(k + 1) + " lacks a valid certificate"; });
  }
  ShapeKind kind = shape_kind(g);
  if (kind == ShapeKind::Tree || kind == ShapeKind::Forest)
    r.check(res.p == max_degree(g), [&] { return describe(g) + ": forest pmd differs from max degree"; });
  if (kind != ShapeKind::Other)
    r.check(res.p <= pmd_upper_bound(g), [&] { return describe(g) + ": pmd exceeds the constructive bound"; });
  return r;
}

class PmdCache {
 public:
  int get(const Graph& g) {
    std::uint64_t key = canonical_code(g) ^ (std::uint64_t(g.n()) << 58);
    {
      std::lock_guard lock(mutex_);
      if (auto it = values_.find(key); it != values_.end()) return it->second;
    }
    int p = pmd_exact(g).p;
    std::lock_guard lock(mutex_);
    values_[key] = p;
    return p;
  }

 private:
  std::mutex mutex_;
  std::map<std::uint64_t, int> values_;
};

ItemResult tpmd_item(const Graph& g, PmdCache& pmd_cache) {
  ItemResult r;
  long long stages_seen = 0;
  long long disagreements = 0;
  TpmdResult t = tpmd_exact(g, kTpmdLimits, [&](const SignSystem& s, bool fast) {
    ++stages_seen;
    if (solve_sign_system(s).has_value() != fast) ++disagreements;
  });
  r.checks += stages_seen;
  for (long long k = 0; k < disagreements; ++k)
    r.failures.push_back(describe(g) + ": stage fast path and LP disagree");
  const int delta = max_degree(g);
  const int pmd = pmd_cache.get(g);
  r.check((delta + 1) / 2 <= t.p && t.p <= pmd, [&] {
    return describe(g) + ": sandwich fails: tpmd=" + std::to_string(t.p) + " pmd=" + std::to_string(pmd);
  });
  auto check = check_twisted_decomposition(g, t.witness);
  r.check(check.valid, [&] { return describe(g) + ": invalid twisted witness: " + check.violation; });
  for (int q = 1; q <= t.p; ++q) {
    std::string v = twisted_certificate_violation(g, t.witness, q, t.certificates[q - 1]);
    r.check(v.empty(), [&] { return describe(g) + ": stage " + std::to_string(q) + " certificate: " + v; });
  }
  PmdResult pm = pmd_exact(g);
  TwistedFromPmd lifted = tpmd_from_pmd(g, pm.witness);
  r.check(check_twisted_decomposition(g, lifted.decomposition).valid,
          [&] { return describe(g) + ": lifted pmd decomposition is not a twisted decomposition"; });
  for (int q = 1; q <= lifted.decomposition.stages(); ++q) {
    std::string v = twisted_certificate_violation(g, lifted.decomposition, q, lifted.certificates[q - 1]);
    r.check(v.empty(), [&] { return describe(g) + ": lifted certificate " + std::to_string(q) + ": " + v; });
  }
  return r;
}

ItemResult leading_item(const Graph& g) {
  ItemResult r;
  TpmdResult t = tpmd_exact(g);
  LeadingTermReport rep = check_leading_terms(g, std::max(1, t.p), t.witness, t.certificates);
  r.check(rep.coprime, [&] { return describe(g) + ": " + rep.detail; });
  r.check(rep.squarefree_quadratic, [&] { return describe(g) + ": " + rep.detail; });
  r.check(rep.matches_closed_form, [&] { return describe(g) + ": " + rep.detail; });
  return r;
}

ItemResult classifier_item(const Graph& g, int max_d) {
  ItemResult r;
  const int delta = max_degree(g);
  const bool forest = cyclomatic_number(g) == 0;
  for (int d = 1; d <= max_d; ++d) {
    Verdict ci = classify_ci(g, d), aci = classify_aci(g, d), rad = classify_radical(g, d);
    Verdict prime = classify_prime(g, d);
    auto tag = [&](const std::string& what) { return describe(g) + " d=" + std::to_string(d) + ": " + what; };
    for (const Verdict* v : {&ci, &aci, &rad, &prime})
      r.check(v->status == Status::Unknown || !v->citation.empty(), [&] { return tag("verdict without citation"); });
    r.check(!(ci.status == Status::Yes && aci.status == Status::Yes), [&] { return tag("both CI and ACI"); });
    r.check(!(prime.status == Status::Yes && ci.status == Status::No), [&] { return tag("prime but not CI"); });
    r.check(rad.status != Status::No, [&] { return tag("radical answered No"); });
    r.check(classify_ci(g, d).status == ci.status && classify_aci(g, d).status == aci.status,
            [&] { return tag("repeated calls disagree"); });
    if (forest) {
      r.check(ci.status == (d >= delta ? Status::Yes : Status::No), [&] { return tag("forest CI rule"); });
      r.check(prime.status == (d >= delta + 1 ? Status::Yes : Status::No), [&] { return tag("forest prime rule"); });
    }
    if (aci.status == Status::Yes && aci.witness.distinguished_edge) {
      const Edge e = *aci.witness.distinguished_edge;
      r.check(max_degree(g.without_edges(std::span<const Edge>(&e, 1))) <= d,
              [&] { return tag("ACI edge does not lower the max degree to d"); });
    }
    if (!aci.witness.obstruction.empty()) {
      auto t = build_obstruction_set(g, d, aci.witness.obstruction);
      r.check(max_degree(delete_vertices(g, t)) <= d - 1, [&] { return tag("obstruction set leaves a degree >= d"); });
    }
  }
  return r;
}

}  // namespace

std::vector<std::string_view> verify_suite_names() {
  return {"matching", "pmd", "tpmd", "leading-terms", "classifier"};
}

std::vector<SuiteResult> run_verify(std::string_view suite, const VerifyOptions& o) {
  if (o.max_n < 1) throw Error(ErrorCode::BadParameter, "max-n must be at least 1");
  std::vector<SuiteResult> out;
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "matching") {
    known = true;
    out.push_back(run_items("matching", labeled_graphs_up_to(std::min(o.max_n, 7), false), o.jobs, matching_item));
  }
  if (all || suite == "pmd") {
    known = true;
    out.push_back(run_items("pmd", iso_classes_up_to(std::min(o.max_n, 8), true), o.jobs, pmd_item));
  }
  if (all || suite == "tpmd") {
    known = true;
    PmdCache cache;
    out.push_back(run_items("tpmd", connected_for_twisted(std::min(o.max_n, 7)), o.jobs,
                            [&](const Graph& g) { return tpmd_item(g, cache); }));
  }
  if (all || suite == "leading-terms") {
    known = true;
    out.push_back(run_items("leading-terms", connected_for_twisted(std::min(o.max_n, 7)), o.jobs, leading_item));
  }
  if (all || suite == "classifier") {
    known = true;
    out.push_back(run_items("classifier", iso_classes_up_to(std::min(o.max_n, 8), false), o.jobs,
                            [&](const Graph& g) { return classifier_item(g, o.max_d); }));
  }
  if (!known) throw Error(ErrorCode::BadParameter, "unknown suite '" + std::string(suite) + "'");
  return out;
}

}  // namespace lss
