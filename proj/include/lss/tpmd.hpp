#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lss/graph.hpp"
#include "lss/limits.hpp"
#include "lss/matching.hpp"
#include "lss/pmd.hpp"
#include "lss/rational.hpp"

namespace lss {

// One stage (M_{2q-1}, M_{2q}); `even` may be empty.
struct StagePair {
  Matching odd;
  Matching even;
  friend bool operator==(const StagePair&, const StagePair&) = default;
};

struct TwistedDecomposition {
  std::vector<StagePair> pairs;
  int stages() const { return static_cast<int>(pairs.size()); }
};

struct DecompositionCheck {
  bool valid = true;
  std::string violation;
  explicit operator bool() const { return valid; }
};

// Partition of E(G) into matchings with the compatibility rule: for every
// {i,j} (i<j) in an odd part, the paired even part holds no {k,i} with k<i
// and no {j,k} with j<k.
DecompositionCheck check_twisted_decomposition(const Graph& g, const TwistedDecomposition& td);

// Vertex i of layer 2q-1 or 2q.
struct LayeredVertex {
  Vertex vertex = 0;
  int layer = 0;
  friend auto operator<=>(const LayeredVertex&, const LayeredVertex&) = default;
};

struct HqGraph {
  int stage = 0;
  int n = 0;
  // (a, 2q-1) -- (b, 2q)
  std::vector<std::pair<LayeredVertex, LayeredVertex>> matched_edges;
};

// q is 1-based. Throws StageOutOfRange.
HqGraph build_hq(const Graph& g, const TwistedDecomposition& td, int q);

// Weights on the two layers of stage q, indexed by vertex (slot 0 unused).
struct TwistedWeightCertificate {
  int stage = 0;
  std::vector<Rational> odd;
  std::vector<Rational> even;
};

// Sign system of stage q over 2n vertices: i on layer 2q-1 is vertex i,
// i on layer 2q is vertex n + i. Matched H_q edges are positive with their
// mirror negative; edges of later stages are negative in both orientations.
SignSystem stage_system(int n, const Matching& odd, const Matching& even, const std::vector<Edge>& later);
SignSystem stage_system(const Graph& g, const TwistedDecomposition& td, int q);

// LP decision (normative). Throws StageOutOfRange.
std::optional<TwistedWeightCertificate> twisted_mapping_feasible(const Graph& g, const TwistedDecomposition& td,
                                                                 int q);
// Walk criterion on the doubled graph. Requires a valid decomposition.
bool twisted_stage_positive(const Graph& g, const TwistedDecomposition& td, int q);
// Empty when the certificate satisfies every strict inequality of stage q.
std::string twisted_certificate_violation(const Graph& g, const TwistedDecomposition& td, int q,
                                          const TwistedWeightCertificate& cert);

struct TpmdResult {
  int p = 0;
  TwistedDecomposition witness;
  std::vector<TwistedWeightCertificate> certificates;
  bool has_empty_odd_stage = false;
};

// Invoked for every complete stage evaluated by the search with the stage
// system and the fast-path verdict.
using StageObserver = std::function<void(const SignSystem&, bool feasible)>;

// Exact tpmd by iterative deepening from ceil(Delta/2) over stage pairs
// with memoised residual failures. Every witness stage is certified by LP.
TpmdResult tpmd_exact(const Graph& g, const SearchLimits& limits = kTpmdLimits,
                      const StageObserver& observer = nullptr);

struct TwistedFromPmd {
  TwistedDecomposition decomposition;
  std::vector<TwistedWeightCertificate> certificates;
};

// Stage q = (E_q, empty) with the certificate built from the positive
// matching weights w_q: w_q on the matched layer positions, -(max w_q + 1)
// everywhere else. Throws MissingCertificate.
TwistedFromPmd tpmd_from_pmd(const Graph& g, const PmDecomposition& pm);

}  // namespace lss
