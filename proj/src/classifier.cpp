#include "lss/classifier.hpp"

#include <algorithm>
#include <cctype>

#include "lss/error.hpp"
#include "lss/pmd.hpp"
#include "lss/tpmd.hpp"

namespace lss {

namespace {

constexpr std::string_view kCiDegreeBound = "not a complete intersection since d < Delta(G)";
constexpr std::string_view kForestCi = "forest: complete intersection iff d >= Delta(G)";
constexpr std::string_view kForestRadical = "forest: radical for every d";
constexpr std::string_view kForestPrime = "forest: prime iff d >= Delta(G) + 1";
constexpr std::string_view kUnicyclicCi = "unicyclic, d >= 3: complete intersection iff d >= Delta(G)";
constexpr std::string_view kBicyclicCi = "bicyclic, d >= 4: complete intersection iff d >= Delta(G)";
constexpr std::string_view kUnicyclicRadical = "unicyclic: radical complete intersection for d >= max{3, Delta(G)}";
constexpr std::string_view kBicyclicRadical = "bicyclic: radical complete intersection for d >= max{4, Delta(G)}";
constexpr std::string_view kPmdCi = "d >= pmd(G): radical complete intersection";
constexpr std::string_view kPmdPrime = "d >= pmd(G) + 1: prime";
constexpr std::string_view kC4Exception = "exception: L_{C4}(2) is not a complete intersection";
constexpr std::string_view kK23Exception =
    "exception: for K_{2,3}, mu(L_G(3)) > height(L_G(3)) = 5 (computer algebra), not a complete intersection";
constexpr std::string_view kAciDegreeBound = "not an almost complete intersection since d < Delta(G) - 1";
constexpr std::string_view kAciTree =
    "tree with Delta(G) > d: almost complete intersection iff G is an edge added between two trees of max degree <= d";
constexpr std::string_view kAciUnicyclic =
    "connected C3-free unicyclic, d >= 3, Delta(G) > d: almost complete intersection iff G - e is a tree, or a tree "
    "plus a unicyclic graph, of max degree <= d for some edge e";
constexpr std::string_view kAciBicyclic =
    "connected C3-free bicyclic, d >= 4, Delta(G) > d: almost complete intersection iff G - e is unicyclic, two "
    "unicyclic graphs, or a tree plus a bicyclic graph, of max degree <= d for some edge e";
constexpr std::string_view kAciUnion =
    "disjoint union of unicyclic graphs: almost complete intersection iff one component is and the others are "
    "complete intersections";
constexpr std::string_view kAciIsCi = "complete intersection, hence not an almost complete intersection";
constexpr std::string_view kAciTriangle =
    "open question: almost complete intersection status of unicyclic graphs containing C3 is unresolved";
constexpr std::string_view kTwistedDegree = "twisted ideal is not a complete intersection since 2d < Delta(G)";
constexpr std::string_view kTwistedTpmd = "d >= tpmd(G): twisted ideal is a radical complete intersection";
constexpr std::string_view kTwistedPmd = "d >= pmd(G) >= tpmd(G): twisted ideal is a radical complete intersection";

Verdict make(Property p, Status s, std::string_view citation = {}) {
  Verdict v;
  v.property = p;
  v.status = s;
  v.citation = std::string(citation);
  return v;
}

bool is_forest(ShapeKind k) { return k == ShapeKind::Forest || k == ShapeKind::Tree; }

Graph strip_isolated(const Graph& g) {
  std::vector<Vertex> keep;
  for (Vertex v = 1; v <= g.n(); ++v)
    if (g.degree(v) > 0) keep.push_back(v);
  return induced_subgraph(g, keep).graph;
}

}  // namespace

std::string_view property_name(Property p) {
  switch (p) {
    case Property::Radical: return "radical";
    case Property::CompleteIntersection: return "ci";
    case Property::AlmostCompleteIntersection: return "aci";
    case Property::Prime: return "prime";
    case Property::TwistedRadicalCI: return "twisted-ci";
  }
  return "?";
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Yes: return "Yes";
    case Status::No: return "No";
    case Status::Unknown: return "Unknown";
  }
  return "?";
}

Property parse_property(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (Property p : {Property::Radical, Property::CompleteIntersection, Property::AlmostCompleteIntersection,
                     Property::Prime, Property::TwistedRadicalCI})
    if (property_name(p) == lower) return p;
  throw Error(ErrorCode::BadParameter, "unknown property '" + std::string(name) + "'");
}

bool is_cycle_c4(const Graph& g) {
  Graph h = strip_isolated(g);
  if (h.n() != 4 || h.edge_count() != 4 || !is_connected(h)) return false;
  for (Vertex v = 1; v <= 4; ++v)
    if (h.degree(v) != 2) return false;
  return true;
}

std::optional<std::pair<int, int>> complete_bipartite_sides(const Graph& g) {
  Graph h = strip_isolated(g);
  if (h.edge_count() == 0 || !is_connected(h)) return std::nullopt;
  std::vector<int> side(h.n() + 1, -1);
  std::vector<Vertex> stack{1};
  side[1] = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (const auto& e : h.edges()) {
      if (!e.touches(v)) continue;
      Vertex w = e.u == v ? e.v : e.u;
      if (side[w] == side[v]) return std::nullopt;
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        stack.push_back(w);
      }
    }
  }
  int left = static_cast<int>(std::count(side.begin() + 1, side.end(), 0));
  int right = h.n() - left;
  if (h.edge_count() != left * right) return std::nullopt;
  return std::pair{std::min(left, right), std::max(left, right)};
}

bool is_complete_bipartite(const Graph& g, int a, int b) {
  auto sides = complete_bipartite_sides(g);
  return sides && *sides == std::pair{std::min(a, b), std::max(a, b)};
}

std::optional<PmdEstimate> pmd_estimate(const Graph& g) {
  if (g.n() <= kPmdLimits.max_n && g.edge_count() <= kPmdLimits.max_edges)
    return PmdEstimate{pmd_exact(g).p, true};
  ShapeKind k = shape_kind(g);
  if (k == ShapeKind::Other) return std::nullopt;
  return PmdEstimate{pmd_upper_bound(g), false};
}

Verdict classify_ci(const Graph& g, int d) {
  constexpr Property P = Property::CompleteIntersection;
  const int delta = max_degree(g);
  if (d < delta) return make(P, Status::No, kCiDegreeBound);
  ShapeKind kind = shape_kind(g);
  if (is_forest(kind)) return make(P, Status::Yes, kForestCi);
  if (kind == ShapeKind::Unicyclic && d >= 3) return make(P, Status::Yes, kUnicyclicCi);
  if (kind == ShapeKind::Bicyclic && d >= 4) return make(P, Status::Yes, kBicyclicCi);
  if (auto pmd = pmd_estimate(g); pmd && d >= pmd->value) {
    Verdict v = make(P, Status::Yes, kPmdCi);
    v.witness.pmd = pmd->value;
    return v;
  }
  if (d == 2 && is_cycle_c4(g)) return make(P, Status::No, kC4Exception);
  if (d == 3 && is_complete_bipartite(g, 2, 3)) return make(P, Status::No, kK23Exception);
  return make(P, Status::Unknown);
}

std::optional<Edge> aci_degree_profile_edge(const Graph& g, int d) {
  std::vector<Vertex> top;
  for (Vertex v = 1; v <= g.n(); ++v) {
    int k = g.degree(v);
    if (k >= d + 2) return std::nullopt;
    if (k == d + 1) top.push_back(v);
  }
  if (top.size() == 1) {
    for (const auto& e : g.edges())
      if (e.touches(top[0])) return e;
  }
  if (top.size() == 2 && g.has_edge(top[0], top[1])) return make_edge(top[0], top[1]);
  return std::nullopt;
}

namespace {

Verdict aci_by_profile(const Graph& g, int d, std::string_view citation) {
  constexpr Property P = Property::AlmostCompleteIntersection;
  if (auto e = aci_degree_profile_edge(g, d)) {
    Verdict v = make(P, Status::Yes, citation);
    v.witness.distinguished_edge = e;
    return v;
  }
  Verdict v = make(P, Status::No, citation);
  std::vector<Vertex> top;
  for (Vertex u = 1; u <= g.n(); ++u)
    if (g.degree(u) == d + 1) top.push_back(u);
  for (std::size_t a = 0; a < top.size() && v.witness.obstruction.empty(); ++a)
    for (std::size_t b = a + 1; b < top.size(); ++b)
      if (!g.has_edge(top[a], top[b])) {
        v.witness.obstruction = {top[a], top[b]};
        break;
      }
  return v;
}

// Connected components as relabelled induced subgraphs, skipping isolated vertices.
std::vector<Graph> nontrivial_components(const Graph& g) {
  std::vector<int> comp(g.n() + 1, -1);
  std::vector<Graph> out;
  for (Vertex s = 1; s <= g.n(); ++s) {
    if (comp[s] >= 0 || g.degree(s) == 0) continue;
    std::vector<Vertex> members{s}, stack{s};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (const auto& e : g.edges()) {
        if (!e.touches(v)) continue;
        Vertex w = e.u == v ? e.v : e.u;
        if (comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(induced_subgraph(g, members).graph);
  }
  return out;
}

}  // namespace

Verdict classify_aci(const Graph& g, int d) {
  constexpr Property P = Property::AlmostCompleteIntersection;
  const int delta = max_degree(g);
  if (d < delta - 1) return make(P, Status::No, kAciDegreeBound);
  ShapeKind kind = shape_kind(g);
  const bool connected = is_connected(strip_isolated(g));
  if (delta > d) {
    if (kind == ShapeKind::Tree || (is_forest(kind) && connected)) return aci_by_profile(g, d, kAciTree);
    if (kind == ShapeKind::Unicyclic && connected) {
      if (has_triangle(g)) return make(P, Status::Unknown, kAciTriangle);
      if (d >= 3) return aci_by_profile(g, d, kAciUnicyclic);
    }
    if (kind == ShapeKind::Bicyclic && connected && d >= 4 && !has_triangle(g))
      return aci_by_profile(g, d, kAciBicyclic);
    if (kind == ShapeKind::Unicyclic && !connected && d >= 3) {
      auto parts = nontrivial_components(g);
      bool all_unicyclic = std::all_of(parts.begin(), parts.end(),
                                       [](const Graph& c) { return cyclomatic_number(c) == 1; });
      if (all_unicyclic) {
        int aci = 0;
        bool decided = true;
        for (const auto& c : parts) {
          Verdict ci = classify_ci(c, d);
          if (ci.status == Status::Yes) continue;
          Verdict a = classify_aci(c, d);
          if (a.status == Status::Yes)
            ++aci;
          else if (a.status == Status::Unknown || ci.status == Status::Unknown)
            decided = false;
        }
        if (decided) return make(P, aci == 1 ? Status::Yes : Status::No, kAciUnion);
      }
    }
    return make(P, Status::Unknown);
  }
  if (classify_ci(g, d).status == Status::Yes) return make(P, Status::No, kAciIsCi);
  return make(P, Status::Unknown);
}

Verdict classify_radical(const Graph& g, int d) {
  constexpr Property P = Property::Radical;
  const int delta = max_degree(g);
  ShapeKind kind = shape_kind(g);
  if (is_forest(kind)) return make(P, Status::Yes, kForestRadical);
  if (kind == ShapeKind::Unicyclic && d >= std::max(3, delta)) return make(P, Status::Yes, kUnicyclicRadical);
  if (kind == ShapeKind::Bicyclic && d >= std::max(4, delta)) return make(P, Status::Yes, kBicyclicRadical);
  if (auto pmd = pmd_estimate(g); pmd && d >= pmd->value) {
    Verdict v = make(P, Status::Yes, kPmdCi);
    v.witness.pmd = pmd->value;
    return v;
  }
  return make(P, Status::Unknown);
}

Verdict classify_prime(const Graph& g, int d) {
  constexpr Property P = Property::Prime;
  if (is_forest(shape_kind(g))) return make(P, d >= max_degree(g) + 1 ? Status::Yes : Status::No, kForestPrime);
  if (auto pmd = pmd_estimate(g); pmd && d >= pmd->value + 1) {
    Verdict v = make(P, Status::Yes, kPmdPrime);
    v.witness.pmd = pmd->value;
    return v;
  }
  return make(P, Status::Unknown);
}

Verdict classify_twisted_radical_ci(const Graph& g, int d) {
  constexpr Property P = Property::TwistedRadicalCI;
  if (2 * d < max_degree(g)) return make(P, Status::No, kTwistedDegree);
  if (g.n() <= kTpmdLimits.max_n && g.edge_count() <= kTpmdLimits.max_edges) {
    int t = tpmd_exact(g).p;
    Verdict v = make(P, d >= t ? Status::Yes : Status::Unknown, d >= t ? kTwistedTpmd : std::string_view{});
    v.witness.tpmd = t;
    return v;
  }
  auto pmd = pmd_estimate(g);
  if (!pmd)
    throw Error(ErrorCode::SizeLimit, "tpmd search is capped at n <= " + std::to_string(kTpmdLimits.max_n) +
                                          ", |E| <= " + std::to_string(kTpmdLimits.max_edges));
  if (d >= pmd->value) {
    Verdict v = make(P, Status::Yes, kTwistedPmd);
    v.witness.pmd = pmd->value;
    return v;
  }
  return make(P, Status::Unknown);
}

Verdict classify(const Graph& g, int d, Property p) {
  if (d < 1) throw Error(ErrorCode::BadParameter, "d must be at least 1");
  switch (p) {
    case Property::Radical: return classify_radical(g, d);
    case Property::CompleteIntersection: return classify_ci(g, d);
    case Property::AlmostCompleteIntersection: return classify_aci(g, d);
    case Property::Prime: return classify_prime(g, d);
    case Property::TwistedRadicalCI: return classify_twisted_radical_ci(g, d);
  }
  return make(p, Status::Unknown);
}

std::vector<Vertex> build_obstruction_set(const Graph& g, int d, std::vector<Vertex> seed) {
  std::vector<bool> in_t(g.n() + 1, false);
  for (Vertex v : seed) {
    if (v < 1 || v > g.n()) throw Error(ErrorCode::OutOfRange, "seed vertex " + std::to_string(v) + " out of range");
    in_t[v] = true;
  }
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  for (;;) {
    Vertex pick = 0;
    for (Vertex u = 1; u <= g.n() && !pick; ++u) {
      if (in_t[u]) continue;
      int deg = 0;
      for (const auto& e : g.edges())
        if (e.touches(u) && !in_t[e.u == u ? e.v : e.u]) ++deg;
      if (deg >= d) pick = u;
    }
    if (!pick) return seed;
    in_t[pick] = true;
    seed.push_back(pick);
  }
}

GeneratorsAndHeight generator_count_and_heights(const Graph& g, int d) {
  Verdict ci = classify_ci(g, d);
  if (ci.status == Status::Yes) return {g.edge_count(), g.edge_count(), Property::CompleteIntersection, ci.citation};
  Verdict aci = classify_aci(g, d);
  if (aci.status == Status::Yes)
    return {g.edge_count(), g.edge_count() - 1, Property::AlmostCompleteIntersection, aci.citation};
  throw Error(ErrorCode::NotClassified, "neither complete nor almost complete intersection is established");
}

}  // namespace lss
