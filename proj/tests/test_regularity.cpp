#include <doctest.h>

#include <string>

#include "lss/classifier.hpp"
#include "lss/enumerate.hpp"
#include "lss/error.hpp"
#include "lss/regularity.hpp"
#include "oracles.hpp"

using namespace lss;

namespace {

Graph double_star() { return Graph(6, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}}); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("generic complete intersection powers") {
  CHECK(reg_power_ci_generic(4, 2, 3) == 9);
  CHECK(reg_power_ci_generic(1, 2, 1) == 2);
  CHECK(reg_power_ci_generic(5, 2, 1) == 6);
}

TEST_CASE("exact values for trees and unicyclic graphs") {
  CHECK(reg_power_ci_graph(named_graph("P5"), 3, 2).value == 6);
  CHECK(reg_power_ci_graph(named_graph("C4"), 3, 1).value == 4);
  CHECK(reg_power_ci_graph(named_graph("P2"), 3, 1).value == 1);
  CHECK(code_of([] { reg_power_ci_graph(named_graph("K4"), 3, 1); }) == ErrorCode::NotApplicable);
  CHECK(code_of([] { reg_power_ci_graph(named_graph("K1,4"), 3, 1); }) == ErrorCode::NotApplicable);
  CHECK(code_of([] { reg_power_ci_graph(named_graph("P4"), 2, 1); }) == ErrorCode::NotApplicable);

  // Quotient of the ideal power: generic formula with degree-2 generators, minus one.
  for (int n = 2; n <= 8; ++n)
    for (const Graph& t : nonisomorphic_trees(n))
      for (int d = std::max(3, max_degree(t)); d <= max_degree(t) + 2; ++d)
        for (int s = 1; s <= 4; ++s) {
          auto r = reg_power_ci_graph(t, d, s);
          REQUIRE(r.value);
          CHECK(*r.value == 2 * s + n - 3);
          CHECK(*r.value == reg_power_ci_generic(t.edge_count(), 2, s) - 1);
        }
}

TEST_CASE("induced invariants match exhaustive search") {
  for (int n = 2; n <= 7; ++n)
    for (const Graph& g : nonisomorphic_graphs(n, true)) {
      if (n == 7 && g.edge_count() % 5 != 0) continue;
      for (int d = 3; d <= 4; ++d) {
        auto brute = oracle::induced_counts(g, d);
        CHECK(t_invariant(g, d) == brute.forest);
        CHECK(u_invariant(g, d) == brute.unicyclic);
      }
    }
  CHECK(t_invariant(named_graph("P5"), 3) == 4);
  CHECK(u_invariant(named_graph("C4"), 3) == 4);
  CHECK(u_invariant(named_graph("P4"), 3) == 0);
  CHECK(code_of([] { t_invariant(named_graph("P4"), 2); }) == ErrorCode::NotApplicable);
}

TEST_CASE("lower bound") {
  CHECK(reg_lower_bound(named_graph("C4"), 3, 2) == 6);
  for (int s = 1; s <= 3; ++s) CHECK(reg_lower_bound(named_graph("P5"), 3, s) == 2 * s + 5 - 3);
}

TEST_CASE("ACI tree bounds") {
  auto r = reg_power_aci_bounds(double_star(), 2, 3, std::nullopt);
  CHECK(r.lower == 8);
  CHECK_FALSE(r.upper);
  REQUIRE(r.symbolic_upper);
  CHECK(*r.symbolic_upper == "4 + reg(S/L_G(2))");

  auto pinned = reg_power_aci_bounds(double_star(), 2, 1, 4);
  CHECK(pinned.lower == 4);
  CHECK(pinned.upper == 4);
  CHECK(pinned.value == 4);

  CHECK(code_of([] { reg_power_aci_bounds(named_graph("P4"), 2, 1, std::nullopt); }) == ErrorCode::NotACI);
}

TEST_CASE("five forms") {
  // Triangle with two pendant edges at vertex 1: removing {1,2} leaves a tree.
  Graph g(5, {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {1, 5}});
  AciForm f = detect_aci_form(g, 3);
  CHECK(f.form == 1);
  auto r = reg_power_aci_bounds(g, 3, 1, 4);
  CHECK(r.lower == 4);
  CHECK(r.upper == 4);
  CHECK(r.value == 4);
  auto s2 = reg_power_aci_bounds(g, 3, 2, 3);
  CHECK(s2.lower == 6);
  CHECK(s2.upper == 2 + 4);
  auto symbolic = reg_power_aci_bounds(g, 3, 2, std::nullopt);
  CHECK(symbolic.symbolic_upper);
}

TEST_CASE("koszul inequality") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : nonisomorphic_graphs(n, false))
      for (int d = 1; d <= 4; ++d) CHECK(koszul_classify(g, d) == oracle::koszul(g.edge_count(), n, d));
  CHECK(koszul_classify(named_graph("K4"), 1));
  CHECK_FALSE(koszul_classify(named_graph("K6"), 2));
  for (int n = 4; n <= 10; ++n)
    for (int d = 1; d <= n; ++d)
      CHECK(koszul_classify(named_graph("K" + std::to_string(n)), d) == (d == 1 || 2 * d >= n - 1));
}

TEST_CASE("koszul families") {
  auto bi = koszul_family(Graph(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {3, 4}}), 2);
  CHECK(bi.sufficient_condition_met);
  CHECK(bi.koszul);
  auto k33 = koszul_family(named_graph("K3,3"), 2);
  CHECK(k33.sufficient_condition_met);
  CHECK(k33.koszul);
  for (int m = 1; m <= 6; ++m) {
    const int n = 2 * m;
    for (int d = 1; d <= n; ++d) {
      auto even = koszul_family(named_graph("K" + std::to_string(m) + "," + std::to_string(m)), d);
      CHECK(even.sufficient_condition_met == (4 * d >= n));
      CHECK(even.koszul == (4 * d >= n));
      const int n_odd = n + 1;
      auto odd = koszul_family(named_graph("K" + std::to_string(m) + "," + std::to_string(m + 1)), d);
      CHECK(odd.sufficient_condition_met == (2 * d >= n_odd - 1));
      if (odd.sufficient_condition_met) CHECK(odd.koszul);
    }
  }
  for (const Graph& t : nonisomorphic_trees(6))
    for (int d = 1; d <= 4; ++d) CHECK(koszul_family(t, d).koszul);
  CHECK(code_of([] { koszul_family(named_graph("K3,5"), 2); }) == ErrorCode::UnknownFamily);
}
