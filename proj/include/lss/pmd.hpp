#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lss/graph.hpp"
#include "lss/limits.hpp"
#include "lss/matching.hpp"

namespace lss {

// Ordered parts; part k is a positive matching of the residual graph
// (V, E minus parts 1..k-1). certificates[k], when present, witnesses that.
struct PmDecomposition {
  std::vector<Matching> parts;
  std::vector<std::optional<WeightCertificate>> certificates;
};

struct PmdResult {
  int p = 0;
  PmDecomposition witness;
};

// Residual graph seen by part `index` (0-based).
Graph residual_graph(const Graph& g, const PmDecomposition& pm, std::size_t index);

// Independent re-verification with the walk criterion. On failure `why`
// receives the first violated condition.
bool is_pm_decomposition(const Graph& g, const PmDecomposition& pm, std::string* why = nullptr);

// Attaches LP certificates to every part (each part against its residual).
void attach_certificates(const Graph& g, PmDecomposition& pm);

// Exact pmd by depth-first search over successive maximal positive
// matchings with memoised residual failures. Deterministic: the witness is
// the first optimum met when each stage prefers including earlier edges.
PmdResult pmd_exact(const Graph& g, const SearchLimits& limits = kPmdLimits);

int pmd_lower_bound(const Graph& g);

// Max-degree-many matchings covering a forest, by colouring child edges
// away from the parent edge colour.
std::vector<Matching> forest_matching_decomposition(const Graph& g);

// Constructive peeling for forests, unicyclic and bicyclic graphs: one cycle
// edge plus a matching of bridges covering the max-degree vertices, then
// recurse. Throws UnsupportedShape for other graphs.
PmDecomposition peeling_decomposition(const Graph& g);

// Delta for forests, max{3, Delta} for unicyclic, max{4, Delta} for
// bicyclic graphs, after building and checking the peeling decomposition.
int pmd_upper_bound(const Graph& g);

}  // namespace lss
