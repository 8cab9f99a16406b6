#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lss/graph.hpp"
#include "lss/rational.hpp"

namespace lss {

// A set of pairwise vertex-disjoint edges of a host graph, kept sorted.
struct Matching {
  std::vector<Edge> edges;

  Matching() = default;
  explicit Matching(std::vector<Edge> e);

  bool empty() const { return edges.empty(); }
  bool contains(const Edge& e) const;
  bool covers(Vertex v) const;
  friend bool operator==(const Matching&, const Matching&) = default;
};

// Throws NotAMatching when edges overlap or are missing from g.
void require_matching(const Graph& g, const Matching& m);

// Vertex weights indexed by vertex id (slot 0 unused).
struct WeightCertificate {
  std::vector<Rational> weights;
};

// Sign constraints w(a) + w(b) > 0 on `positive` pairs and < 0 on
// `negative` pairs over vertices 1..vertex_count. When the positive pairs
// are disjoint this is exactly the positive-matching system of the graph
// whose edges are all listed pairs.
struct SignSystem {
  int vertex_count = 0;
  std::vector<Edge> positive;
  std::vector<Edge> negative;
};

// Combinatorial route: closed walk alternating between positive and
// negative pairs, restricted to vertices covered by positive pairs.
// Positive pairs must be pairwise disjoint.
bool has_alternating_cycle(const SignSystem& system);

// LP route: maximise a common slack t <= 1 over all constraints in exact
// arithmetic; the strict system is feasible iff the optimum is positive.
// Returns weights indexed by vertex (slot 0 unused).
std::optional<std::vector<Rational>> solve_sign_system(const SignSystem& system);

// Direct evaluation; empty string when all constraints hold, otherwise a
// description of the first violated one.
std::string first_violation(const SignSystem& system, std::span<const Rational> weights);

bool has_alternating_closed_walk(const Graph& g, const Matching& m);
bool is_positive_matching(const Graph& g, const Matching& m);
std::optional<WeightCertificate> find_weight_certificate(const Graph& g, const Matching& m);
bool certifies(const Graph& g, const Matching& m, const WeightCertificate& cert);

// The literal positive-matching system: m positive, every other edge of g negative.
SignSystem matching_system(const Graph& g, const Matching& m);

}  // namespace lss
