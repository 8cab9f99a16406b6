#pragma once

// Brute-force reference implementations used only by the tests. They share
// nothing with the library beyond Graph/Edge and are written for clarity,
// not speed.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "lss/graph.hpp"
#include "lss/rational.hpp"

namespace oracle {

using lss::Edge;
using lss::Graph;
using lss::Vertex;

// Pairs over vertices 1..count; `positive` must be pairwise disjoint.
struct Pairs {
  int count = 0;
  std::vector<std::pair<int, int>> positive;
  std::vector<std::pair<int, int>> negative;
};

// Enumerates walks v0 -m- v1 -o- v2 -m- v3 ... and reports whether one
// returns to v0 over a non-matched pair, staying inside the matched
// vertices. A shortest closed walk of this form visits each start vertex at
// most once, so the depth bound is the number of matched vertices.
inline bool alternating_closed_walk(const Pairs& p) {
  std::vector<int> mate(p.count + 1, 0);
  for (auto [a, b] : p.positive) mate[a] = b, mate[b] = a;
  std::vector<std::vector<int>> other(p.count + 1);
  for (auto [a, b] : p.negative) {
    if (mate[a] && mate[b]) {
      other[a].push_back(b);
      other[b].push_back(a);
    }
  }
  const int depth = 2 * static_cast<int>(p.positive.size());
  std::function<bool(int, int, int)> walk = [&](int start, int at, int steps) {
    if (steps > depth) return false;
    int across = mate[at];
    for (int next : other[across]) {
      if (next == start) return true;
      if (walk(start, next, steps + 1)) return true;
    }
    return false;
  };
  for (int v = 1; v <= p.count; ++v)
    if (mate[v] && walk(v, v, 1)) return true;
  return false;
}

inline Pairs matching_pairs(const Graph& g, const std::vector<Edge>& m) {
  Pairs p;
  p.count = g.n();
  for (const auto& e : g.edges()) {
    bool in = std::find(m.begin(), m.end(), e) != m.end();
    (in ? p.positive : p.negative).emplace_back(e.u, e.v);
  }
  return p;
}

inline bool positive_matching(const Graph& g, const std::vector<Edge>& m) {
  return !alternating_closed_walk(matching_pairs(g, m));
}

inline bool is_matching(const std::vector<Edge>& m) {
  std::set<int> seen;
  for (const auto& e : m)
    if (!seen.insert(e.u).second || !seen.insert(e.v).second) return false;
  return true;
}

inline std::vector<std::vector<Edge>> all_matchings(const std::vector<Edge>& edges) {
  std::vector<std::vector<Edge>> out;
  const std::size_t m = edges.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
    std::vector<Edge> pick;
    for (std::size_t k = 0; k < m; ++k)
      if (mask >> k & 1) pick.push_back(edges[k]);
    if (is_matching(pick)) out.push_back(pick);
  }
  return out;
}

inline Graph remove(const Graph& g, const std::vector<Edge>& gone) {
  std::vector<Edge> keep;
  for (const auto& e : g.edges())
    if (std::find(gone.begin(), gone.end(), e) == gone.end()) keep.push_back(e);
  return Graph(g.n(), keep);
}

// Smallest number of successive positive matchings covering E(G).
inline int pmd(const Graph& g) {
  std::map<std::vector<Edge>, int> memo;
  std::function<int(const Graph&)> best = [&](const Graph& h) -> int {
    if (h.edge_count() == 0) return 0;
    std::vector<Edge> key(h.edges().begin(), h.edges().end());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int result = h.edge_count();
    for (const auto& m : all_matchings(key))
      if (positive_matching(h, m)) result = std::min(result, 1 + best(remove(h, m)));
    memo[key] = result;
    return result;
  };
  return best(g);
}

// Compatibility of a stage pair: for {i,j} (i<j) in the odd part, the even
// part holds no edge {k,i} with k<i and no edge {j,k} with j<k.
inline bool compatible(const std::vector<Edge>& odd, const std::vector<Edge>& even) {
  for (const auto& o : odd)
    for (const auto& e : even)
      if (e.v == o.u || e.u == o.v) return false;
  return true;
}

// Stage pairs over 2n vertices: vertex i on the odd layer is i, on the even
// layer n + i.
inline Pairs stage_pairs(int n, const std::vector<Edge>& odd, const std::vector<Edge>& even,
                         const std::vector<Edge>& later) {
  Pairs p;
  p.count = 2 * n;
  for (const auto& e : odd) {
    p.positive.emplace_back(e.u, n + e.v);
    p.negative.emplace_back(e.v, n + e.u);
  }
  for (const auto& e : even) {
    p.positive.emplace_back(e.v, n + e.u);
    p.negative.emplace_back(e.u, n + e.v);
  }
  for (const auto& e : later) {
    p.negative.emplace_back(e.u, n + e.v);
    p.negative.emplace_back(e.v, n + e.u);
  }
  return p;
}

// Smallest p admitting a twisted decomposition with feasible stages, by
// trying every assignment of edges to the 2p slots. Tiny graphs only.
inline int tpmd(const Graph& g, int max_p = 4) {
  const std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  const int m = static_cast<int>(edges.size());
  if (m == 0) return 0;
  for (int p = 1; p <= max_p; ++p) {
    std::vector<int> slot(m, 0);
    while (true) {
      std::vector<std::vector<Edge>> parts(2 * p);
      for (int k = 0; k < m; ++k) parts[slot[k]].push_back(edges[k]);
      bool ok = true;
      for (int q = 0; q < p && ok; ++q) {
        const auto& odd = parts[2 * q];
        const auto& even = parts[2 * q + 1];
        if (!is_matching(odd) || !is_matching(even) || !compatible(odd, even)) ok = false;
      }
      for (int q = 0; q < p && ok; ++q) {
        std::vector<Edge> later;
        for (int s = 2 * q + 2; s < 2 * p; ++s) later.insert(later.end(), parts[s].begin(), parts[s].end());
        if (alternating_closed_walk(stage_pairs(g.n(), parts[2 * q], parts[2 * q + 1], later))) ok = false;
      }
      if (ok) return p;
      int k = 0;
      while (k < m && ++slot[k] == 2 * p) slot[k++] = 0;
      if (k == m) break;
    }
  }
  return -1;
}

inline int degree_in(const std::vector<Edge>& edges, Vertex v) {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [v](const Edge& e) { return e.touches(v); }));
}

// Some edge e with max degree of G - e at most d.
inline bool aci_edge_exists(const Graph& g, int d) {
  for (const auto& e : g.edges()) {
    std::vector<Edge> rest;
    for (const auto& f : g.edges())
      if (!(f == e)) rest.push_back(f);
    bool fine = true;
    for (Vertex v = 1; v <= g.n() && fine; ++v) fine = degree_in(rest, v) <= d;
    if (fine) return true;
  }
  return false;
}

struct InducedCounts {
  int forest = 0;     // largest induced forest with max degree <= d
  int unicyclic = 0;  // largest induced graph with exactly one cycle, max degree <= d
};

// Exhaustive over vertex subsets. A subgraph has exactly one cycle iff it
// has exactly one component with |E| = |V| and no component with more.
inline InducedCounts induced_counts(const Graph& g, int d) {
  InducedCounts out;
  const int n = g.n();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Edge> es;
    for (const auto& e : g.edges())
      if ((mask >> (e.u - 1) & 1) && (mask >> (e.v - 1) & 1)) es.push_back(e);
    bool small = true;
    for (int v = 1; v <= n && small; ++v) small = degree_in(es, v) <= d;
    if (!small) continue;
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : es) parent[find(e.u)] = find(e.v);
    std::map<int, int> vertices, edges;
    for (int v = 1; v <= n; ++v)
      if (mask >> (v - 1) & 1) ++vertices[find(v)];
    for (const auto& e : es) ++edges[find(e.u)];
    int cyclic = 0;
    bool too_many = false;
    for (auto [root, count] : vertices) {
      int excess = edges[root] - (count - 1);
      if (excess == 1) ++cyclic;
      if (excess > 1) too_many = true;
    }
    const int size = static_cast<int>(es.size());
    if (cyclic == 0 && !too_many) out.forest = std::max(out.forest, size);
    if (cyclic == 1 && !too_many) out.unicyclic = std::max(out.unicyclic, size);
  }
  return out;
}

// r <= n d  or  r >= n^2 d^2 / 4 + n d / 2, in exact rationals.
inline bool koszul(long long r, long long n, long long d) {
  using lss::Rational;
  if (r == 0) return true;
  Rational rr(r), nd(n * d);
  return rr <= nd || rr >= nd * nd / 4 + nd / 2;
}

}  // namespace oracle
