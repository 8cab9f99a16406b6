#pragma once

#include <optional>
#include <string>

#include "lss/graph.hpp"
#include "lss/limits.hpp"

namespace lss {

// Graph-level reports describe reg(S / L_G(d)^s).
struct RegularityReport {
  int s = 1;
  std::optional<long long> value;
  long long lower = 0;
  std::optional<long long> upper;
  std::optional<std::string> symbolic_upper;
  std::string citation;
  int form = 0;  // structural form used by the ACI bounds, 0 for trees and exact values
};

// reg(I^s) = d s + (d - 1)(n - 1) for an ideal generated by a regular
// sequence of n forms of degree d. This is the regularity of the ideal power.
long long reg_power_ci_generic(long long num_gens, long long gen_degree, long long s);

// 2s + n - 3 for trees, 2s + n - 2 for connected unicyclic graphs, when
// Delta(G) <= d and d >= 3. Throws NotApplicable otherwise.
RegularityReport reg_power_ci_graph(const Graph& g, int d, int s);

// Largest edge count of an induced forest / induced unicyclic subgraph with
// max degree <= d. u is 0 when no such subgraph exists. Both throw
// NotApplicable for d <= 2 and SizeLimit above the enumeration cap.
int t_invariant(const Graph& g, int d, const SearchLimits& limits = kInducedSearchLimits);
int u_invariant(const Graph& g, int d, const SearchLimits& limits = kInducedSearchLimits);

// 2(s - 1) + max{t, u}.
long long reg_lower_bound(const Graph& g, int d, int s, const SearchLimits& limits = kInducedSearchLimits);

// Which of the five "edge added to complete-intersection pieces" shapes G
// has, with the removed edge. 0 when none.
struct AciForm {
  int form = 0;
  Edge edge;
  int min_d = 0;
};
AciForm detect_aci_form(const Graph& g, int d);

// ACI trees: [2s + n - 4, 2(s - 1) + reg_base]. The five forms:
// [2s + n - 3, 2(s - 1) + max{reg_base, n - 1}]. Upper bounds stay
// symbolic without reg_base. Throws NotACI, or NotApplicable when a form
// matches but d is below its threshold.
RegularityReport reg_power_aci_bounds(const Graph& g, int d, int s, std::optional<long long> reg_base);

// r <= n d or 4 r >= n^2 d^2 + 2 n d, with r = |E|; edgeless graphs are Koszul.
bool koszul_classify(const Graph& g, int d);

struct KoszulFamilyReport {
  std::string family;
  std::string citation;
  bool sufficient_condition_met = false;  // the family statement guarantees Koszul
  bool koszul = false;                     // koszul_classify
};

// Complete graphs, complete bipartite graphs with parts differing by at most
// one, trees, unicyclic and bicyclic graphs. Throws UnknownFamily.
KoszulFamilyReport koszul_family(const Graph& g, int d);

}  // namespace lss
