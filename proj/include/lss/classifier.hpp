#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lss/graph.hpp"

namespace lss {

enum class Property { Radical, CompleteIntersection, AlmostCompleteIntersection, Prime, TwistedRadicalCI };
enum class Status { Yes, No, Unknown };

std::string_view property_name(Property p);
std::string_view status_name(Status s);
// "ci", "aci", "radical", "prime", "twisted-ci". Throws BadParameter.
Property parse_property(std::string_view name);

struct VerdictWitness {
  std::optional<Edge> distinguished_edge;  // ACI: an edge e with Delta(G - e) <= d
  std::vector<Vertex> obstruction;         // non-adjacent degree-(d+1) vertices
  std::optional<int> pmd;                  // value (or upper bound) used by a pmd rule
  std::optional<int> tpmd;
  bool operator==(const VerdictWitness&) const = default;
};

struct Verdict {
  Property property = Property::CompleteIntersection;
  Status status = Status::Unknown;
  std::string citation;
  VerdictWitness witness;
};

Verdict classify_ci(const Graph& g, int d);
Verdict classify_aci(const Graph& g, int d);
Verdict classify_radical(const Graph& g, int d);
Verdict classify_prime(const Graph& g, int d);
// Throws SizeLimit when tpmd is needed and out of range.
Verdict classify_twisted_radical_ci(const Graph& g, int d);
Verdict classify(const Graph& g, int d, Property p);

// No vertex of degree >= d + 2, one or two of degree d + 1, adjacent when
// there are two. For Delta(G) > d this is equivalent to the existence of an
// edge e with Delta(G - e) <= d, returned when it exists.
std::optional<Edge> aci_degree_profile_edge(const Graph& g, int d);

// Grows seed by the lowest-numbered vertex of degree >= d in G - T until
// none is left.
std::vector<Vertex> build_obstruction_set(const Graph& g, int d, std::vector<Vertex> seed);

struct GeneratorsAndHeight {
  int generators = 0;
  int height = 0;
  Property classification = Property::CompleteIntersection;
  std::string citation;
};

// Throws NotClassified unless classify_ci or classify_aci answers Yes.
GeneratorsAndHeight generator_count_and_heights(const Graph& g, int d);

// Best available pmd information: exact within the search caps, otherwise
// the constructive bound for forests, unicyclic and bicyclic graphs.
struct PmdEstimate {
  int value = 0;
  bool exact = false;
};
std::optional<PmdEstimate> pmd_estimate(const Graph& g);

// Known exceptions matched up to isolated vertices and relabelling.
bool is_cycle_c4(const Graph& g);
bool is_complete_bipartite(const Graph& g, int a, int b);
// Part sizes (smaller first) when the non-isolated vertices form a complete bipartite graph.
std::optional<std::pair<int, int>> complete_bipartite_sides(const Graph& g);

}  // namespace lss
