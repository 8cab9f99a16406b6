#include <doctest.h>

#include <vector>

#include "lss/enumerate.hpp"
#include "lss/error.hpp"
#include "lss/graph.hpp"

using namespace lss;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Parse;
}

Graph example() { return parse_graph("4\n1 2\n1 3\n1 4\n2 3\n2 4\n"); }

}  // namespace

TEST_CASE("parse the four-vertex example") {
  Graph g = example();
  CHECK(g.n() == 4);
  CHECK(g.edge_count() == 5);
  CHECK(max_degree(g) == 3);
  CHECK_FALSE(g.has_edge(3, 4));
}

TEST_CASE("parse edge cases") {
  Graph one = parse_graph("1");
  CHECK(one.n() == 1);
  CHECK(one.edge_count() == 0);

  CHECK(code_of([] { parse_graph("3\n2 1\n1 2\n"); }) == ErrorCode::InvalidEdge);
  CHECK(code_of([] { parse_graph("3\n1 1\n"); }) == ErrorCode::InvalidEdge);
  CHECK(code_of([] { parse_graph("3\n1 4\n"); }) == ErrorCode::InvalidEdge);
  CHECK(code_of([] { parse_graph("3\n1 x\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_graph(""); }) == ErrorCode::Parse);

  try {
    parse_graph("3\n1 2\n\n# note\n2 two\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(e.line() == 5);
  }

  Graph commented = parse_graph("# header\n3\n1 2 # first\n\n2 3\n");
  CHECK(commented == Graph(3, {{1, 2}, {2, 3}}));
}

TEST_CASE("serialize round trip") {
  for (int n = 1; n <= 4; ++n)
    for_each_labeled_graph(n, [](const Graph& g) { CHECK(parse_graph(serialize_graph(g)) == g); });
}

TEST_CASE("named families") {
  Graph star = named_graph("K1,3");
  CHECK(star.n() == 4);
  CHECK(star.degree(1) == 3);
  CHECK(named_graph("C3") == Graph(3, {{1, 2}, {2, 3}, {1, 3}}));
  CHECK(named_graph("c3") == named_graph("C3"));
  CHECK(named_graph("P3") == Graph(3, {{1, 2}, {2, 3}}));
  CHECK(named_graph("K4").edge_count() == 6);
  CHECK(max_degree(named_graph("K2,3")) == 3);
  CHECK(max_degree(named_graph("P2")) == 1);
  CHECK(code_of([] { named_graph("C2"); }) == ErrorCode::BadParameter);
  CHECK(code_of([] { named_graph("Q5"); }) == ErrorCode::UnknownFamily);
}

TEST_CASE("shape classification") {
  GraphShape c4 = classify_shape(named_graph("C4"));
  CHECK(c4.kind == ShapeKind::Unicyclic);
  CHECK(c4.connected);
  CHECK(c4.c3_free);
  CHECK(c4.cycle_count == 1);

  GraphShape ex = classify_shape(example());
  CHECK(ex.kind == ShapeKind::Other);
  CHECK(ex.cycle_count == 3);

  GraphShape triangles = classify_shape(Graph(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}}));
  CHECK(triangles.kind == ShapeKind::Bicyclic);
  CHECK_FALSE(triangles.connected);
  CHECK_FALSE(triangles.c3_free);

  // Theta graph: cyclomatic number 2 but three cycles.
  GraphShape theta = classify_shape(Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}}));
  CHECK(theta.kind == ShapeKind::Other);
  CHECK(count_cycles(named_graph("K4")) == 7);
  CHECK(count_cycles(named_graph("K5")) == 37);
}

TEST_CASE("cycle counts agree with the cyclomatic number on connected graphs") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : connected_labeled_graphs(n)) {
      int mu = cyclomatic_number(g);
      GraphShape s = classify_shape(g);
      if (mu == 0) CHECK(s.kind == ShapeKind::Tree);
      if (mu == 1) CHECK(s.kind == ShapeKind::Unicyclic);
      if (mu >= 3) CHECK(s.kind == ShapeKind::Other);
      CHECK(shape_kind(g) == s.kind);
    }
  }
}

TEST_CASE("induced subgraphs") {
  std::vector<Vertex> first3{1, 2, 3};
  CHECK(induced_subgraph(named_graph("C4"), first3).graph == named_graph("P3"));
  CHECK(induced_subgraph(example(), first3).graph == named_graph("C3"));
  InducedSubgraph none = induced_subgraph(example(), std::vector<Vertex>{});
  CHECK(none.graph.n() == 0);
  CHECK(none.graph.edge_count() == 0);

  InducedSubgraph part = induced_subgraph(example(), std::vector<Vertex>{2, 4});
  CHECK(part.original == std::vector<Vertex>{2, 4});
  CHECK(part.graph == Graph(2, {{1, 2}}));

  std::vector<Vertex> all{1, 2, 3, 4};
  CHECK(induced_subgraph(example(), all).graph == example());
  CHECK(code_of([] { induced_subgraph(named_graph("C4"), std::vector<Vertex>{5}); }) == ErrorCode::OutOfRange);
}

TEST_CASE("degree helpers") {
  CHECK(max_degree(Graph(3, {})) == 0);
  CHECK(component_count(Graph(3, {{1, 2}})) == 2);
  CHECK(cyclomatic_number(named_graph("K4")) == 3);
  CHECK(has_triangle(example()));
  CHECK_FALSE(has_triangle(named_graph("C4")));
  CHECK(cycle_edges(named_graph("K1,3")).empty());
  CHECK(cycle_edges(named_graph("C4")).size() == 4);
}
