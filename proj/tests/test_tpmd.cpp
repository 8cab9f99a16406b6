#include <doctest.h>

#include <vector>

#include "lss/enumerate.hpp"
#include "lss/error.hpp"
#include "lss/tpmd.hpp"
#include "oracles.hpp"

using namespace lss;

namespace {

Graph example() { return parse_graph("4\n1 2\n1 3\n1 4\n2 3\n2 4\n"); }

TwistedDecomposition published() {
  return {{{Matching({{1, 2}}), Matching({{1, 4}})}, {Matching({{2, 3}}), Matching({{1, 3}, {2, 4}})}}};
}

TwistedWeightCertificate weights(int stage, std::vector<int> odd, std::vector<int> even) {
  TwistedWeightCertificate c;
  c.stage = stage;
  c.odd.push_back(0);
  c.even.push_back(0);
  for (int v : odd) c.odd.emplace_back(v);
  for (int v : even) c.even.emplace_back(v);
  return c;
}

}  // namespace

TEST_CASE("published decomposition of the example graph") {
  CHECK(check_twisted_decomposition(example(), published()).valid);

  TwistedDecomposition moved = published();
  moved.pairs[0].even.edges.push_back({2, 3});
  moved.pairs[1].odd.edges.clear();
  auto check = check_twisted_decomposition(example(), moved);
  CHECK_FALSE(check.valid);
  CHECK_FALSE(check.violation.empty());

  CHECK(check_twisted_decomposition(Graph(3, {}), TwistedDecomposition{}).valid);

  TwistedDecomposition missing = published();
  missing.pairs[1].even = Matching({{1, 3}});
  CHECK_FALSE(check_twisted_decomposition(example(), missing).valid);
}

TEST_CASE("stage graphs") {
  HqGraph h1 = build_hq(example(), published(), 1);
  using P = std::pair<LayeredVertex, LayeredVertex>;
  CHECK(h1.matched_edges == std::vector<P>{{{1, 1}, {2, 2}}, {{4, 1}, {1, 2}}});
  HqGraph h2 = build_hq(example(), published(), 2);
  CHECK(h2.matched_edges == std::vector<P>{{{2, 3}, {3, 4}}, {{3, 3}, {1, 4}}, {{4, 3}, {2, 4}}});

  TwistedDecomposition single{{{Matching({{1, 2}}), Matching()}}};
  HqGraph h = build_hq(named_graph("P2"), single, 1);
  CHECK(h.matched_edges == std::vector<P>{{{1, 1}, {2, 2}}});
  CHECK_THROWS_AS(build_hq(example(), published(), 3), Error);
  CHECK_THROWS_AS(twisted_mapping_feasible(example(), published(), 0), Error);
}

TEST_CASE("published weight figures") {
  auto w2 = weights(2, {-3, 2, -2, 2}, {3, -1, -1, -3});
  CHECK(twisted_certificate_violation(example(), published(), 2, w2).empty());

  // The first figure breaks the later-edge inequality for {2,4}:
  // w(4 on layer 1) + w(2 on layer 2) = 2 - 1 = 1.
  auto w1 = weights(1, {2, -3, -3, 2}, {-1, -1, -3, -3});
  std::string why = twisted_certificate_violation(example(), published(), 1, w1);
  CHECK_FALSE(why.empty());

  // Both stages are nonetheless feasible.
  for (int q = 1; q <= 2; ++q) {
    auto cert = twisted_mapping_feasible(example(), published(), q);
    REQUIRE(cert);
    CHECK(twisted_certificate_violation(example(), published(), q, *cert).empty());
    CHECK(twisted_stage_positive(example(), published(), q));
  }
}

TEST_CASE("single edge stage") {
  TwistedDecomposition td{{{Matching({{1, 2}}), Matching()}}};
  auto cert = twisted_mapping_feasible(named_graph("P2"), td, 1);
  REQUIRE(cert);
  CHECK(cert->odd[1] + cert->even[2] > 0);
  CHECK(cert->odd[2] + cert->even[1] < 0);
}

TEST_CASE("exact values") {
  TpmdResult ex = tpmd_exact(example());
  CHECK(ex.p == 2);
  CHECK(check_twisted_decomposition(example(), ex.witness).valid);
  for (int m = 2; m <= 7; ++m) {
    Graph star = named_graph("K1," + std::to_string(m));
    CHECK(tpmd_exact(star).p == (m + 1) / 2);
  }
  CHECK(tpmd_exact(named_graph("P3")).p == 2);
  CHECK(tpmd_exact(named_graph("P2")).p == 1);
  CHECK(tpmd_exact(Graph(2, {})).p == 0);
}

TEST_CASE("exact search agrees with brute-force slot assignment") {
  for (int n = 2; n <= 4; ++n)
    for_each_labeled_graph(n, [](const Graph& g) {
      if (g.edge_count() > 5) return;
      CHECK(tpmd_exact(g).p == oracle::tpmd(g));
    });
  CHECK(oracle::tpmd(example()) == 2);
  CHECK(oracle::tpmd(named_graph("P3")) == 2);
}

TEST_CASE("witness stages are certified") {
  for (const Graph& g : connected_labeled_graphs(5)) {
    TpmdResult t = tpmd_exact(g);
    REQUIRE(check_twisted_decomposition(g, t.witness).valid);
    REQUIRE(static_cast<int>(t.certificates.size()) == t.p);
    for (int q = 1; q <= t.p; ++q)
      CHECK(twisted_certificate_violation(g, t.witness, q, t.certificates[q - 1]).empty());
  }
}

TEST_CASE("fast path agrees with the LP on every stage the search evaluates") {
  for (const Graph& g : connected_labeled_graphs(4)) {
    tpmd_exact(g, kTpmdLimits, [](const SignSystem& s, bool fast) {
      CHECK(solve_sign_system(s).has_value() == fast);
      CHECK(has_alternating_cycle(s) != fast);
    });
  }
}

TEST_CASE("lifting a pm-decomposition") {
  for (const char* name : {"P2", "K1,3", "C4", "P5"}) {
    Graph g = named_graph(name);
    PmdResult pm = pmd_exact(g);
    TwistedFromPmd lifted = tpmd_from_pmd(g, pm.witness);
    CHECK(lifted.decomposition.stages() == pm.p);
    CHECK(check_twisted_decomposition(g, lifted.decomposition).valid);
    for (int q = 1; q <= pm.p; ++q) {
      CHECK(lifted.decomposition.pairs[q - 1].even.empty());
      CHECK(twisted_certificate_violation(g, lifted.decomposition, q, lifted.certificates[q - 1]).empty());
      CHECK(twisted_mapping_feasible(g, lifted.decomposition, q).has_value());
    }
  }
  PmDecomposition bare;
  bare.parts = {Matching({{1, 2}})};
  bare.certificates = {std::nullopt};
  try {
    tpmd_from_pmd(named_graph("P2"), bare);
    FAIL("expected MissingCertificate");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingCertificate);
  }
}

TEST_CASE("size limit") {
  try {
    tpmd_exact(named_graph("K9"));
    FAIL("expected SizeLimit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeLimit);
  }
}
