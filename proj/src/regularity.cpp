#include "lss/regularity.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>

#include "lss/classifier.hpp"
#include "lss/error.hpp"
#include "lss/rational.hpp"

namespace lss {

long long reg_power_ci_generic(long long num_gens, long long gen_degree, long long s) {
  if (num_gens < 1 || gen_degree < 1 || s < 1)
    throw Error(ErrorCode::BadParameter, "generator count, degree and power must be positive");
  return gen_degree * s + (gen_degree - 1) * (num_gens - 1);
}

RegularityReport reg_power_ci_graph(const Graph& g, int d, int s) {
  if (s < 1) throw Error(ErrorCode::BadParameter, "s must be at least 1");
  if (d < 3 || max_degree(g) > d)
    throw Error(ErrorCode::NotApplicable, "exact formula needs d >= 3 and Delta(G) <= d");
  ShapeKind kind = shape_kind(g);
  RegularityReport r;
  r.s = s;
  if (kind == ShapeKind::Tree) {
    r.value = 2LL * s + g.n() - 3;
    r.citation = "tree with Delta(G) <= d, d >= 3: complete intersection, reg(S/L^s) = 2s + n - 3";
  } else if (kind == ShapeKind::Unicyclic && is_connected(g)) {
    r.value = 2LL * s + g.n() - 2;
    r.citation = "connected unicyclic with Delta(G) <= d, d >= 3: complete intersection, reg(S/L^s) = 2s + n - 2";
  } else {
    throw Error(ErrorCode::NotApplicable, "exact formula covers trees and connected unicyclic graphs");
  }
  r.lower = *r.value;
  r.upper = r.value;
  return r;
}

namespace {

using Mask = std::uint32_t;

// Max edge count of an induced subgraph with degrees <= d and cyclomatic
// number <= max_mu (exactly max_mu when exact is set). Vertices are decided
// in order; degrees and cyclomatic number only grow as vertices are added,
// which drives the pruning.
int best_induced(const Graph& g, int d, int max_mu, bool exact, const SearchLimits& limits) {
  if (d <= 2) throw Error(ErrorCode::NotApplicable, "induced-subgraph invariants are defined for d >= 3");
  const int n = g.n();
  if (n > limits.max_n || n > 30)
    throw Error(ErrorCode::SizeLimit, "induced-subgraph search is capped at n <= " + std::to_string(limits.max_n));
  std::vector<Mask> adj(n + 1, 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= Mask{1} << (e.v - 1);
    adj[e.v] |= Mask{1} << (e.u - 1);
  }
  int best = 0;
  bool found = false;
  std::array<int, 32> deg{};

  std::function<void(int, Mask, int, int, std::array<int, 32>&)> rec =
      [&](int v, Mask chosen, int edges, int mu, std::array<int, 32>& uf) {
        const int size = __builtin_popcount(chosen);
        const int remaining = n - v + 1;
        // Edges = vertices - components + mu <= vertices - 1 + mu for nonempty sets.
        const int bound = size + remaining - 1 + max_mu;
        if (found && bound <= best) return;
        if (v > n) {
          if (exact && mu != max_mu) return;
          if (!found || edges > best) {
            best = edges;
            found = true;
          }
          return;
        }
        // Include v.
        Mask nb = adj[v] & chosen;
        int k = __builtin_popcount(nb);
        bool ok = k <= d;
        for (Mask t = nb; t && ok; t &= t - 1) ok = deg[__builtin_ctz(t) + 1] + 1 <= d;
        if (ok) {
          std::array<int, 32> next = uf;
          auto find = [&](int x) {
            while (next[x] != x) x = next[x] = next[next[x]];
            return x;
          };
          next[v] = v;
          int merges = 0;
          for (Mask t = nb; t; t &= t - 1) {
            int a = find(__builtin_ctz(t) + 1), b = find(v);
            if (a != b) {
              next[a] = b;
              ++merges;
            }
          }
          int new_mu = mu + k - merges;
          if (new_mu <= max_mu) {
            for (Mask t = nb; t; t &= t - 1) ++deg[__builtin_ctz(t) + 1];
            deg[v] = k;
            rec(v + 1, chosen | Mask{1} << (v - 1), edges + k, new_mu, next);
            for (Mask t = nb; t; t &= t - 1) --deg[__builtin_ctz(t) + 1];
            deg[v] = 0;
          }
        }
        rec(v + 1, chosen, edges, mu, uf);
      };
  std::array<int, 32> uf{};
  for (int i = 0; i < 32; ++i) uf[i] = i;
  rec(1, 0, 0, 0, uf);
  return found ? best : 0;
}

}  // namespace

int t_invariant(const Graph& g, int d, const SearchLimits& limits) { return best_induced(g, d, 0, false, limits); }

int u_invariant(const Graph& g, int d, const SearchLimits& limits) { return best_induced(g, d, 1, true, limits); }

long long reg_lower_bound(const Graph& g, int d, int s, const SearchLimits& limits) {
  if (s < 1) throw Error(ErrorCode::BadParameter, "s must be at least 1");
  return 2LL * (s - 1) + std::max(t_invariant(g, d, limits), u_invariant(g, d, limits));
}

AciForm detect_aci_form(const Graph& g, int d) {
  if (!is_connected(g)) return {};
  for (const auto& e : g.edges()) {
    Graph h = g.without_edges(std::span<const Edge>(&e, 1));
    if (max_degree(h) > d) continue;
    int mu = cyclomatic_number(h);
    if (is_connected(h)) {
      if (mu == 0) return {1, e, 3};
      if (mu == 1) return {3, e, 4};
      continue;
    }
    // Bridge: split into the two sides.
    std::vector<Vertex> side_a, side_b;
    std::vector<int> seen(g.n() + 1, 0);
    std::vector<Vertex> stack{e.u};
    seen[e.u] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (const auto& f : h.edges()) {
        if (!f.touches(v)) continue;
        Vertex w = f.u == v ? f.v : f.u;
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    for (Vertex v = 1; v <= g.n(); ++v) (seen[v] ? side_a : side_b).push_back(v);
    auto shape = [&](const std::vector<Vertex>& side) { return shape_kind(induced_subgraph(h, side).graph); };
    ShapeKind a = shape(side_a), b = shape(side_b);
    if (a > b) std::swap(a, b);
    if (a == ShapeKind::Tree && b == ShapeKind::Unicyclic) return {2, e, 3};
    if (a == ShapeKind::Unicyclic && b == ShapeKind::Unicyclic) return {4, e, 4};
    if (a == ShapeKind::Tree && b == ShapeKind::Bicyclic) return {5, e, 4};
  }
  return {};
}

RegularityReport reg_power_aci_bounds(const Graph& g, int d, int s, std::optional<long long> reg_base) {
  if (s < 1) throw Error(ErrorCode::BadParameter, "s must be at least 1");
  RegularityReport r;
  r.s = s;
  const long long n = g.n();
  const long long shift = 2LL * (s - 1);
  const std::string reg_name = "reg(S/L_G(" + std::to_string(d) + "))";
  auto prefix = [&] { return shift == 0 ? std::string() : std::to_string(shift) + " + "; };
  if (shape_kind(g) == ShapeKind::Tree) {
    if (classify_aci(g, d).status != Status::Yes)
      throw Error(ErrorCode::NotACI, "tree is not an almost complete intersection for this d");
    r.lower = 2LL * s + n - 4;
    if (reg_base)
      r.upper = shift + *reg_base;
    else
      r.symbolic_upper = prefix() + reg_name;
    r.citation = "almost complete intersection tree: 2s + n - 4 <= reg(S/L^s) <= 2(s-1) + reg(S/L)";
  } else {
    AciForm f = detect_aci_form(g, d);
    if (f.form == 0)
      throw Error(ErrorCode::NotACI, "graph is neither an almost complete intersection tree nor of an edge-added form");
    if (d < f.min_d)
      throw Error(ErrorCode::NotApplicable,
                  "form " + std::to_string(f.form) + " bounds need d >= " + std::to_string(f.min_d));
    r.form = f.form;
    r.lower = 2LL * s + n - 3;
    if (reg_base)
      r.upper = shift + std::max(*reg_base, n - 1);
    else
      r.symbolic_upper = prefix() + "max{" + reg_name + ", " + std::to_string(n - 1) + "}";
    r.citation = "edge added to complete-intersection pieces (form " + std::to_string(f.form) +
                 "): 2s + n - 3 <= reg(S/L^s) <= 2(s-1) + max{reg(S/L), n - 1}";
  }
  if (r.upper && *r.upper == r.lower) r.value = r.lower;
  return r;
}

bool koszul_classify(const Graph& g, int d) {
  if (d < 1) throw Error(ErrorCode::BadParameter, "d must be at least 1");
  if (g.edge_count() == 0) return true;
  const BigInt r = g.edge_count(), n = g.n(), dd = d;
  return r <= n * dd || 4 * r >= n * n * dd * dd + 2 * n * dd;
}

KoszulFamilyReport koszul_family(const Graph& g, int d) {
  KoszulFamilyReport k;
  k.koszul = koszul_classify(g, d);
  const int n = g.n();
  if (n >= 2 && g.edge_count() == n * (n - 1) / 2) {
    k.family = "complete K" + std::to_string(n);
    if (n <= 3) {
      k.sufficient_condition_met = true;
      k.citation = "complete graph with n <= 3: Koszul for all d";
    } else {
      k.sufficient_condition_met = d == 1 || 2 * d >= n - 1;
      k.citation = "complete graph, n >= 4: Koszul if d = 1 or d >= (n-1)/2";
    }
    return k;
  }
  if (auto sides = complete_bipartite_sides(g); sides && sides->first + sides->second == n &&
                                                sides->second - sides->first <= 1) {
    k.family = "complete bipartite K" + std::to_string(sides->first) + "," + std::to_string(sides->second);
    if (n % 2 == 0) {
      k.sufficient_condition_met = 4 * d >= n;
      k.citation = "complete bipartite, n even: Koszul for d >= n/4";
    } else {
      k.sufficient_condition_met = 2 * d >= n - 1;
      k.citation = "complete bipartite, n odd: Koszul for d >= (n-1)/2";
    }
    return k;
  }
  switch (shape_kind(g)) {
    case ShapeKind::Tree:
    case ShapeKind::Unicyclic:
      k.family = std::string(shape_kind_name(shape_kind(g)));
      k.sufficient_condition_met = true;
      k.citation = "tree or unicyclic graph: Koszul for all d";
      return k;
    case ShapeKind::Bicyclic:
      k.family = "bicyclic";
      k.sufficient_condition_met = d >= 2;
      k.citation = "bicyclic graph: Koszul for all d >= 2";
      return k;
    default: break;
  }
  throw Error(ErrorCode::UnknownFamily, "no Koszul family statement covers this graph");
}

}  // namespace lss
