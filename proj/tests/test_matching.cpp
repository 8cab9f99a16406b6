#include <doctest.h>

#include <vector>

#include "lss/enumerate.hpp"
#include "lss/error.hpp"
#include "lss/matching.hpp"
#include "lss/simplex.hpp"
#include "oracles.hpp"

using namespace lss;

namespace {

Graph example() { return parse_graph("4\n1 2\n1 3\n1 4\n2 3\n2 4\n"); }

}  // namespace

TEST_CASE("alternating walks on small cases") {
  Graph c4 = named_graph("C4");
  Matching opposite({{1, 2}, {3, 4}});
  CHECK(has_alternating_closed_walk(c4, opposite));
  CHECK_FALSE(is_positive_matching(c4, opposite));
  CHECK_FALSE(find_weight_certificate(c4, opposite).has_value());

  CHECK_FALSE(has_alternating_closed_walk(example(), Matching({{1, 2}})));
  const Graph g = example();
  for (const auto& e : g.edges()) CHECK(is_positive_matching(g, Matching({e})));

  Graph residual(4, {{1, 3}, {2, 4}});
  CHECK(is_positive_matching(residual, Matching({{1, 3}, {2, 4}})));
}

TEST_CASE("matching validation") {
  Graph p3 = named_graph("P3");
  CHECK_THROWS_AS(is_positive_matching(p3, Matching({{1, 2}, {2, 3}})), Error);
  CHECK_THROWS_AS(is_positive_matching(p3, Matching({{1, 3}})), Error);
  try {
    require_matching(p3, Matching({{1, 2}, {2, 3}}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAMatching);
  }
}

TEST_CASE("certificates are exact") {
  Graph p2 = named_graph("P2");
  auto cert = find_weight_certificate(p2, Matching({{1, 2}}));
  REQUIRE(cert);
  CHECK(cert->weights[1] + cert->weights[2] > 0);
  CHECK(certifies(p2, Matching({{1, 2}}), *cert));

  WeightCertificate bad{{Rational(0), Rational(1), Rational(-1)}};
  CHECK_FALSE(certifies(p2, Matching({{1, 2}}), bad));
}

TEST_CASE("walk criterion matches brute-force walk enumeration") {
  for (int n = 2; n <= 5; ++n) {
    for_each_labeled_graph(n, [](const Graph& g) {
      std::vector<Edge> edges(g.edges().begin(), g.edges().end());
      for (const auto& m : oracle::all_matchings(edges)) {
        bool lib = has_alternating_closed_walk(g, Matching(m));
        bool brute = !oracle::positive_matching(g, m);
        CHECK(lib == brute);
      }
    });
  }
}

TEST_CASE("LP certificates exist exactly for positive matchings") {
  for (int n = 2; n <= 5; ++n) {
    for_each_labeled_graph(n, [](const Graph& g) {
      std::vector<Edge> edges(g.edges().begin(), g.edges().end());
      for (const auto& m : oracle::all_matchings(edges)) {
        auto cert = find_weight_certificate(g, Matching(m));
        CHECK(cert.has_value() == oracle::positive_matching(g, m));
        if (cert) CHECK(certifies(g, Matching(m), *cert));
      }
    });
  }
}

TEST_CASE("positivity survives removing unmatched edges") {
  for_each_labeled_graph(5, [](const Graph& g) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (const auto& m : oracle::all_matchings(edges)) {
      if (!is_positive_matching(g, Matching(m))) continue;
      for (const auto& e : edges) {
        if (Matching(m).contains(e)) continue;
        Graph smaller = oracle::remove(g, {e});
        CHECK(is_positive_matching(smaller, Matching(m)));
      }
    }
  });
}

TEST_CASE("sign systems") {
  SignSystem s;
  s.vertex_count = 4;
  s.positive = {{1, 2}, {3, 4}};
  s.negative = {{2, 3}, {1, 4}};
  CHECK(has_alternating_cycle(s));
  CHECK_FALSE(solve_sign_system(s).has_value());

  s.negative = {{2, 3}};
  CHECK_FALSE(has_alternating_cycle(s));
  auto w = solve_sign_system(s);
  REQUIRE(w);
  CHECK(first_violation(s, *w).empty());

  std::vector<Rational> zero(5, Rational(0));
  CHECK_FALSE(first_violation(s, zero).empty());
}

TEST_CASE("integer and rational simplex agree") {
  // max x + y  s.t.  x + 2y <= 4, 3x + y <= 6
  std::vector<std::vector<long long>> a{{1, 2}, {3, 1}};
  std::vector<long long> b{4, 6}, c{1, 1};
  auto fast = lp::maximize_integer<long long>(a, b, c);
  REQUIRE(fast);
  std::vector<std::vector<Rational>> ar{{1, 2}, {3, 1}};
  std::vector<Rational> br{4, 6}, cr{1, 1};
  auto exact = lp::maximize(ar, br, cr);
  CHECK(exact.value == Rational(14, 5));
  Rational sum = Rational(static_cast<long long>(fast->x[0] + fast->x[1])) /
                 Rational(static_cast<long long>(fast->denominator));
  CHECK(sum == exact.value);

  std::vector<std::vector<long long>> open{{1, -1}};
  std::vector<long long> one{1}, obj{0, 1};
  auto unbounded = lp::maximize_integer<long long>(open, one, obj);
  REQUIRE(unbounded);
  CHECK(unbounded->status == lp::Status::Unbounded);
}
