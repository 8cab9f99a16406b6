#include "lss/matching.hpp"

#include <algorithm>
#include <cstdint>

#include "lss/error.hpp"
#include "lss/simplex.hpp"

namespace lss {

Matching::Matching(std::vector<Edge> e) : edges(std::move(e)) {
  for (auto& x : edges) x = make_edge(x.u, x.v);
  std::sort(edges.begin(), edges.end());
}

bool Matching::contains(const Edge& e) const {
  return std::binary_search(edges.begin(), edges.end(), make_edge(e.u, e.v));
}

bool Matching::covers(Vertex v) const {
  return std::any_of(edges.begin(), edges.end(), [v](const Edge& e) { return e.touches(v); });
}

void require_matching(const Graph& g, const Matching& m) {
  for (std::size_t a = 0; a < m.edges.size(); ++a) {
    if (!g.has_edge(m.edges[a].u, m.edges[a].v))
      throw Error(ErrorCode::NotAMatching, "edge {" + std::to_string(m.edges[a].u) + "," +
                                               std::to_string(m.edges[a].v) + "} is not in the graph");
    for (std::size_t b = a + 1; b < m.edges.size(); ++b)
      if (m.edges[a].shares_vertex(m.edges[b]))
        throw Error(ErrorCode::NotAMatching, "matching edges share a vertex");
  }
}

namespace {

bool cycle_small(const SignSystem& s) {
  // Nodes are vertices; x -> mate(y) for every negative pair {x, y} with both
  // ends covered. A directed cycle is an alternating closed walk.
  const int n = s.vertex_count;
  std::vector<int> mate(n + 1, 0);
  for (const auto& e : s.positive) {
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  std::vector<std::uint64_t> succ(n + 1, 0);
  std::uint64_t alive = 0;
  for (const auto& e : s.negative) {
    if (!mate[e.u] || !mate[e.v]) continue;
    succ[e.u] |= std::uint64_t{1} << (mate[e.v] - 1);
    succ[e.v] |= std::uint64_t{1} << (mate[e.u] - 1);
    alive |= std::uint64_t{1} << (e.u - 1);
    alive |= std::uint64_t{1} << (e.v - 1);
  }
  // Peel nodes with no live successor; a nonempty remainder contains a cycle.
  bool changed = true;
  while (changed && alive) {
    changed = false;
    for (std::uint64_t rest = alive; rest; rest &= rest - 1) {
      int x = __builtin_ctzll(rest) + 1;
      if ((succ[x] & alive) == 0) {
        alive &= ~(std::uint64_t{1} << (x - 1));
        changed = true;
      }
    }
  }
  return alive != 0;
}

bool cycle_large(const SignSystem& s) {
  const int n = s.vertex_count;
  std::vector<int> mate(n + 1, 0);
  for (const auto& e : s.positive) {
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  std::vector<std::vector<int>> succ(n + 1);
  for (const auto& e : s.negative) {
    if (!mate[e.u] || !mate[e.v]) continue;
    succ[e.u].push_back(mate[e.v]);
    succ[e.v].push_back(mate[e.u]);
  }
  std::vector<int> indeg(n + 1, 0);
  for (int x = 1; x <= n; ++x)
    for (int y : succ[x]) ++indeg[y];
  std::vector<int> queue;
  for (int x = 1; x <= n; ++x)
    if (indeg[x] == 0) queue.push_back(x);
  std::size_t removed = 0;
  while (removed < queue.size()) {
    int x = queue[removed++];
    for (int y : succ[x])
      if (--indeg[y] == 0) queue.push_back(y);
  }
  return static_cast<int>(queue.size()) < n;
}

}  // namespace

bool has_alternating_cycle(const SignSystem& system) {
  return system.vertex_count <= 64 ? cycle_small(system) : cycle_large(system);
}

namespace {

// Columns: w+ and w- for every vertex that appears, then the slack t.
// Rows: -(w_u + w_v) + t <= 0 for positive pairs, (w_u + w_v) + t <= 0 for
// negative ones, and t <= 1. Feasible iff the optimum t is positive.
struct LpData {
  std::vector<int> column;
  std::vector<std::vector<long long>> a;
  std::vector<long long> b;
  std::vector<long long> c;
};

LpData build_lp(const SignSystem& system) {
  LpData lp;
  lp.column.assign(system.vertex_count + 1, -1);
  int used = 0;
  auto touch = [&](Vertex v) {
    if (lp.column[v] < 0) lp.column[v] = used++;
  };
  for (const auto& e : system.positive) touch(e.u), touch(e.v);
  for (const auto& e : system.negative) touch(e.u), touch(e.v);

  const std::size_t cols = 2 * static_cast<std::size_t>(used) + 1;
  const std::size_t slack = cols - 1;
  auto add_row = [&](const Edge& e, int sign) {
    std::vector<long long> row(cols, 0);
    for (Vertex v : {e.u, e.v}) {
      row[2 * lp.column[v]] -= sign;
      row[2 * lp.column[v] + 1] += sign;
    }
    row[slack] = 1;
    lp.a.push_back(std::move(row));
    lp.b.push_back(0);
  };
  for (const auto& e : system.positive) add_row(e, +1);
  for (const auto& e : system.negative) add_row(e, -1);
  std::vector<long long> cap(cols, 0);
  cap[slack] = 1;
  lp.a.push_back(std::move(cap));
  lp.b.push_back(1);
  lp.c.assign(cols, 0);
  lp.c[slack] = 1;
  return lp;
}

Rational to_rational(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 m = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt r = BigInt(static_cast<std::uint64_t>(m >> 64));
  r <<= 64;
  r += BigInt(static_cast<std::uint64_t>(m));
  return Rational(neg ? BigInt(-r) : r);
}

std::optional<std::vector<Rational>> solve_exact(const SignSystem& system, const LpData& lp) {
  std::vector<std::vector<Rational>> a;
  for (const auto& row : lp.a) a.emplace_back(row.begin(), row.end());
  std::vector<Rational> b(lp.b.begin(), lp.b.end()), c(lp.c.begin(), lp.c.end());
  auto sol = lp::maximize(a, b, c);
  if (sol.status != lp::Status::Optimal || sol.value <= 0) return std::nullopt;
  std::vector<Rational> w(system.vertex_count + 1);
  for (Vertex v = 1; v <= system.vertex_count; ++v)
    if (lp.column[v] >= 0) w[v] = sol.x[2 * lp.column[v]] - sol.x[2 * lp.column[v] + 1];
  return w;
}

template <class Int>
std::optional<std::optional<std::vector<Rational>>> solve_integer(const SignSystem& system, const LpData& lp) {
  auto sol = lp::maximize_integer<Int>(lp.a, lp.b, lp.c);
  if (!sol) return std::nullopt;
  if (sol->status != lp::Status::Optimal || sol->x.back() <= 0) return std::optional<std::vector<Rational>>{};
  std::vector<Rational> w(system.vertex_count + 1);
  const Rational den = to_rational(sol->denominator);
  for (Vertex v = 1; v <= system.vertex_count; ++v)
    if (lp.column[v] >= 0) w[v] = to_rational(sol->x[2 * lp.column[v]] - sol->x[2 * lp.column[v] + 1]) / den;
  return std::optional<std::vector<Rational>>(std::move(w));
}

}  // namespace

std::optional<std::vector<Rational>> solve_sign_system(const SignSystem& system) {
  LpData lp = build_lp(system);
  if (auto r = solve_integer<long long>(system, lp)) return *r;
  if (auto r = solve_integer<__int128>(system, lp)) return *r;
  return solve_exact(system, lp);
}

std::string first_violation(const SignSystem& system, std::span<const Rational> weights) {
  if (static_cast<int>(weights.size()) < system.vertex_count + 1) return "certificate has too few weights";
  auto pair_text = [](const Edge& e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; };
  for (const auto& e : system.positive) {
    Rational s = weights[e.u] + weights[e.v];
    if (!(s > 0)) return "positive pair " + pair_text(e) + " has sum " + to_string(s);
  }
  for (const auto& e : system.negative) {
    Rational s = weights[e.u] + weights[e.v];
    if (!(s < 0)) return "negative pair " + pair_text(e) + " has sum " + to_string(s);
  }
  return {};
}

SignSystem matching_system(const Graph& g, const Matching& m) {
  SignSystem s;
  s.vertex_count = g.n();
  for (const auto& e : g.edges()) (m.contains(e) ? s.positive : s.negative).push_back(e);
  return s;
}

bool has_alternating_closed_walk(const Graph& g, const Matching& m) {
  require_matching(g, m);
  SignSystem s;
  s.vertex_count = g.n();
  s.positive = m.edges;
  for (const auto& e : g.edges())
    if (!m.contains(e) && m.covers(e.u) && m.covers(e.v)) s.negative.push_back(e);
  return has_alternating_cycle(s);
}

bool is_positive_matching(const Graph& g, const Matching& m) { return !has_alternating_closed_walk(g, m); }

std::optional<WeightCertificate> find_weight_certificate(const Graph& g, const Matching& m) {
  require_matching(g, m);
  auto w = solve_sign_system(matching_system(g, m));
  if (!w) return std::nullopt;
  return WeightCertificate{std::move(*w)};
}

bool certifies(const Graph& g, const Matching& m, const WeightCertificate& cert) {
  return first_violation(matching_system(g, m), cert.weights).empty();
}

}  // namespace lss
