#include "lss/pmd.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "lss/error.hpp"

namespace lss {

Graph residual_graph(const Graph& g, const PmDecomposition& pm, std::size_t index) {
  std::vector<Edge> removed;
  for (std::size_t k = 0; k < index && k < pm.parts.size(); ++k)
    removed.insert(removed.end(), pm.parts[k].edges.begin(), pm.parts[k].edges.end());
  return g.without_edges(removed);
}

bool is_pm_decomposition(const Graph& g, const PmDecomposition& pm, std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  std::vector<Edge> all;
  for (const auto& part : pm.parts) all.insert(all.end(), part.edges.begin(), part.edges.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return fail("parts are not disjoint");
  if (!std::equal(all.begin(), all.end(), g.edges().begin(), g.edges().end()))
    return fail("parts do not cover the edge set exactly");
  for (std::size_t k = 0; k < pm.parts.size(); ++k) {
    Graph residual = residual_graph(g, pm, k);
    try {
      if (!is_positive_matching(residual, pm.parts[k]))
        return fail("part " + std::to_string(k + 1) + " is not positive in its residual graph");
    } catch (const Error& e) {
      return fail("part " + std::to_string(k + 1) + ": " + e.what());
    }
  }
  return true;
}

void attach_certificates(const Graph& g, PmDecomposition& pm) {
  pm.certificates.clear();
  for (std::size_t k = 0; k < pm.parts.size(); ++k)
    pm.certificates.push_back(find_weight_certificate(residual_graph(g, pm, k), pm.parts[k]));
}

int pmd_lower_bound(const Graph& g) { return max_degree(g); }

namespace {

using Mask = std::uint64_t;

class PmdSearch {
 public:
  explicit PmdSearch(const Graph& g) : g_(g), m_(g.edge_count()), incident_(g.n() + 1, 0) {
    for (int k = 0; k < m_; ++k) {
      incident_[g.edges()[k].u] |= Mask{1} << k;
      incident_[g.edges()[k].v] |= Mask{1} << k;
    }
  }

  std::vector<Mask> run() {
    Mask all = m_ == 64 ? ~Mask{0} : (Mask{1} << m_) - 1;
    for (int k = std::max(1, max_deg(all));; ++k) {
      std::vector<Mask> parts;
      if (all == 0 || solve(all, k, parts)) {
        std::reverse(parts.begin(), parts.end());
        return parts;
      }
    }
  }

 private:
  int max_deg(Mask r) const {
    int best = 0;
    for (int v = 1; v <= g_.n(); ++v) best = std::max(best, __builtin_popcountll(r & incident_[v]));
    return best;
  }

  // Walk criterion on residual r with matching m.
  bool positive(Mask r, Mask m) const {
    int mate[65] = {};
    for (Mask b = m; b; b &= b - 1) {
      const Edge& e = g_.edges()[__builtin_ctzll(b)];
      mate[e.u] = e.v;
      mate[e.v] = e.u;
    }
    Mask succ[65] = {};
    Mask alive = 0;
    for (Mask b = r & ~m; b; b &= b - 1) {
      const Edge& e = g_.edges()[__builtin_ctzll(b)];
      if (!mate[e.u] || !mate[e.v]) continue;
      succ[e.u] |= Mask{1} << (mate[e.v] - 1);
      succ[e.v] |= Mask{1} << (mate[e.u] - 1);
      alive |= Mask{1} << (e.u - 1) | Mask{1} << (e.v - 1);
    }
    bool changed = true;
    while (changed && alive) {
      changed = false;
      for (Mask rest = alive; rest; rest &= rest - 1) {
        int x = __builtin_ctzll(rest) + 1;
        if ((succ[x] & alive) == 0) {
          alive &= ~(Mask{1} << (x - 1));
          changed = true;
        }
      }
    }
    return alive == 0;
  }

  Mask vertices_of(Mask m) const {
    Mask v = 0;
    for (Mask b = m; b; b &= b - 1) {
      const Edge& e = g_.edges()[__builtin_ctzll(b)];
      v |= Mask{1} << (e.u - 1) | Mask{1} << (e.v - 1);
    }
    return v;
  }

  // Calls visit(m) for every inclusion-maximal positive matching of r, in
  // include-first order; stops early when visit returns true.
  bool for_each_maximal(Mask r, const std::function<bool(Mask)>& visit) const {
    std::vector<int> order;
    for (Mask b = r; b; b &= b - 1) order.push_back(__builtin_ctzll(b));
    std::function<bool(std::size_t, Mask, Mask)> rec = [&](std::size_t pos, Mask m, Mask covered) -> bool {
      if (pos == order.size()) {
        for (int k : order) {
          Mask bit = Mask{1} << k;
          if (m & bit) continue;
          const Edge& e = g_.edges()[k];
          if (covered >> (e.u - 1) & 1 || covered >> (e.v - 1) & 1) continue;
          if (positive(r, m | bit)) return false;
        }
        return visit(m);
      }
      int k = order[pos];
      const Edge& e = g_.edges()[k];
      Mask ends = Mask{1} << (e.u - 1) | Mask{1} << (e.v - 1);
      if (!(covered & ends) && positive(r, m | Mask{1} << k))
        if (rec(pos + 1, m | Mask{1} << k, covered | ends)) return true;
      return rec(pos + 1, m, covered);
    };
    return rec(0, 0, 0);
  }

  bool solve(Mask r, int k, std::vector<Mask>& parts) {
    if (r == 0) return true;
    if (k == 0 || max_deg(r) > k) return false;
    if (auto it = failed_.find(r); it != failed_.end() && it->second >= k) return false;
    bool found = for_each_maximal(r, [&](Mask m) {
      if (!solve(r & ~m, k - 1, parts)) return false;
      parts.push_back(m);
      return true;
    });
    if (!found) {
      int& slot = failed_[r];
      slot = std::max(slot, k);
    }
    return found;
  }

  const Graph& g_;
  int m_;
  std::vector<Mask> incident_;
  std::unordered_map<Mask, int> failed_;
};

std::vector<Edge> edges_of(const Graph& g, Mask m) {
  std::vector<Edge> out;
  for (Mask b = m; b; b &= b - 1) out.push_back(g.edges()[__builtin_ctzll(b)]);
  return out;
}

}  // namespace

PmdResult pmd_exact(const Graph& g, const SearchLimits& limits) {
  if (g.n() > limits.max_n || g.edge_count() > limits.max_edges || g.n() > 64 || g.edge_count() > 64)
    throw Error(ErrorCode::SizeLimit, "exact pmd search is capped at n <= " + std::to_string(limits.max_n) +
                                          ", |E| <= " + std::to_string(limits.max_edges));
  PmdSearch search(g);
  PmdResult result;
  for (Mask part : search.run()) result.witness.parts.emplace_back(edges_of(g, part));
  result.p = static_cast<int>(result.witness.parts.size());
  attach_certificates(g, result.witness);
  return result;
}

std::vector<Matching> forest_matching_decomposition(const Graph& g) {
  if (cyclomatic_number(g) != 0) throw Error(ErrorCode::UnsupportedShape, "graph is not a forest");
  std::vector<std::vector<Vertex>> adj(g.n() + 1);
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> parent_color(g.n() + 1, -1);
  std::vector<char> seen(g.n() + 1, 0);
  std::vector<std::vector<Edge>> classes;
  for (Vertex root = 1; root <= g.n(); ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      int color = 0;
      for (Vertex w : adj[v]) {
        if (seen[w]) continue;
        if (color == parent_color[v]) ++color;
        if (static_cast<int>(classes.size()) <= color) classes.resize(color + 1);
        classes[color].push_back(make_edge(v, w));
        parent_color[w] = color;
        seen[w] = 1;
        queue.push_back(w);
        ++color;
      }
    }
  }
  std::vector<Matching> parts;
  for (auto& c : classes) parts.emplace_back(std::move(c));
  return parts;
}

namespace {

// Matching of `candidates` avoiding `blocked` vertices and covering every target.
std::optional<std::vector<Edge>> cover_targets(const std::vector<Edge>& candidates, std::vector<Vertex> targets,
                                               std::vector<char> blocked) {
  std::vector<Edge> chosen;
  std::function<bool(std::size_t)> rec = [&](std::size_t idx) -> bool {
    while (idx < targets.size() && blocked[targets[idx]]) ++idx;
    if (idx == targets.size()) return true;
    Vertex t = targets[idx];
    for (const auto& e : candidates) {
      if (!e.touches(t) || blocked[e.u] || blocked[e.v]) continue;
      blocked[e.u] = blocked[e.v] = 1;
      chosen.push_back(e);
      if (rec(idx + 1)) return true;
      chosen.pop_back();
      blocked[e.u] = blocked[e.v] = 0;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return chosen;
}

PmDecomposition peel_with_cycle_edge(const Graph& g, int cover_threshold) {
  const int delta = max_degree(g);
  auto on_cycle = cycle_edges(g);
  std::vector<Edge> bridges;
  for (const auto& e : g.edges())
    if (std::find(on_cycle.begin(), on_cycle.end(), e) == on_cycle.end()) bridges.push_back(e);
  auto deg = g.degrees();
  for (const auto& first : on_cycle) {
    std::vector<Edge> part{first};
    if (delta >= cover_threshold) {
      std::vector<Vertex> targets;
      for (Vertex v = 1; v <= g.n(); ++v)
        if (deg[v] == delta) targets.push_back(v);
      std::vector<char> blocked(g.n() + 1, 0);
      blocked[first.u] = blocked[first.v] = 1;
      auto cover = cover_targets(bridges, targets, blocked);
      if (!cover) continue;
      part.insert(part.end(), cover->begin(), cover->end());
    }
    PmDecomposition rest = peeling_decomposition(g.without_edges(part));
    PmDecomposition out;
    out.parts.emplace_back(std::move(part));
    out.parts.insert(out.parts.end(), rest.parts.begin(), rest.parts.end());
    return out;
  }
  throw std::logic_error("peeling found no admissible first matching");
}

}  // namespace

PmDecomposition peeling_decomposition(const Graph& g) {
  switch (shape_kind(g)) {
    case ShapeKind::Forest:
    case ShapeKind::Tree: return {forest_matching_decomposition(g), {}};
    case ShapeKind::Unicyclic: return peel_with_cycle_edge(g, 3);
    case ShapeKind::Bicyclic: return peel_with_cycle_edge(g, 4);
    case ShapeKind::Other: break;
  }
  throw Error(ErrorCode::UnsupportedShape, "peeling bound applies to forests, unicyclic and bicyclic graphs only");
}

int pmd_upper_bound(const Graph& g) {
  const int delta = max_degree(g);
  int bound = 0;
  switch (shape_kind(g)) {
    case ShapeKind::Forest:
    case ShapeKind::Tree: bound = delta; break;
    case ShapeKind::Unicyclic: bound = std::max(3, delta); break;
    case ShapeKind::Bicyclic: bound = std::max(4, delta); break;
    case ShapeKind::Other:
      throw Error(ErrorCode::UnsupportedShape, "pmd upper bound applies to forests, unicyclic and bicyclic graphs only");
  }
  PmDecomposition pm = peeling_decomposition(g);
  std::string why;
  if (!is_pm_decomposition(g, pm, &why)) throw std::logic_error("peeling produced an invalid decomposition: " + why);
  if (static_cast<int>(pm.parts.size()) > bound) throw std::logic_error("peeling exceeded its bound");
  return bound;
}

}  // namespace lss
