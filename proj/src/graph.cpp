#include "lss/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>

#include "lss/error.hpp"

namespace lss {

Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw Error(ErrorCode::BadParameter, "vertex count must be nonnegative");
  for (auto& e : edges_) {
    if (e.u == e.v) throw Error(ErrorCode::InvalidEdge, "loop at vertex " + std::to_string(e.u));
    e = make_edge(e.u, e.v);
    if (e.u < 1 || e.v > n_)
      throw Error(ErrorCode::InvalidEdge, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                              "} outside 1.." + std::to_string(n_));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw Error(ErrorCode::InvalidEdge,
                "duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a == b) return false;
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(a, b));
}

std::optional<int> Graph::edge_index(const Edge& e) const {
  auto key = make_edge(e.u, e.v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

int Graph::degree(Vertex v) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.touches(v); }));
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n_ + 1, 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

Graph Graph::edge_subgraph(std::uint64_t mask) const {
  std::vector<Edge> kept;
  for (std::size_t k = 0; k < edges_.size(); ++k)
    if (mask >> k & 1U) kept.push_back(edges_[k]);
  Graph h;
  h.n_ = n_;
  h.edges_ = std::move(kept);
  return h;
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  std::vector<Edge> kept;
  for (const auto& e : edges_)
    if (std::find(removed.begin(), removed.end(), e) == removed.end()) kept.push_back(e);
  Graph h;
  h.n_ = n_;
  h.edges_ = std::move(kept);
  return h;
}

std::string_view shape_kind_name(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Forest: return "Forest";
    case ShapeKind::Tree: return "Tree";
    case ShapeKind::Unicyclic: return "Unicyclic";
    case ShapeKind::Bicyclic: return "Bicyclic";
    case ShapeKind::Other: return "Other";
  }
  return "Other";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> to_int(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::vector<std::vector<Vertex>> adjacency(const Graph& g) {
  std::vector<std::vector<Vertex>> adj(g.n() + 1);
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<int> n;
  std::vector<Edge> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto tokens = split_ws(line);
    if (!n) {
      auto value = tokens.size() == 1 ? to_int(tokens[0]) : std::nullopt;
      if (!value || *value < 0 || *value > 100000)
        throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected vertex count", line_no);
      n = static_cast<int>(*value);
      continue;
    }
    if (tokens.size() != 2)
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected 'i j'", line_no);
    auto a = to_int(tokens[0]);
    auto b = to_int(tokens[1]);
    if (!a || !b) throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": non-integer vertex", line_no);
    if (*a == *b)
      throw Error(ErrorCode::InvalidEdge, "line " + std::to_string(line_no) + ": loop", line_no);
    if (*a < 1 || *b < 1 || *a > *n || *b > *n)
      throw Error(ErrorCode::InvalidEdge, "line " + std::to_string(line_no) + ": vertex out of range", line_no);
    Edge e = make_edge(static_cast<Vertex>(*a), static_cast<Vertex>(*b));
    if (std::find(edges.begin(), edges.end(), e) != edges.end())
      throw Error(ErrorCode::InvalidEdge, "line " + std::to_string(line_no) + ": duplicate edge", line_no);
    edges.push_back(e);
  }
  if (!n) throw Error(ErrorCode::Parse, "missing vertex count", line_no);
  return Graph(*n, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.n()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Graph named_graph(std::string_view spec) {
  std::string s(trim(spec));
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (s.size() < 2) throw Error(ErrorCode::UnknownFamily, "unknown graph family '" + std::string(spec) + "'");
  char family = s[0];
  std::string params = s.substr(1);
  std::vector<long long> values;
  std::size_t start = 0;
  while (true) {
    auto comma = params.find(',', start);
    auto piece = params.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    auto v = to_int(piece);
    if (!v) throw Error(ErrorCode::UnknownFamily, "unknown graph family '" + std::string(spec) + "'");
    values.push_back(*v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  auto bad = [&](const std::string& why) { return Error(ErrorCode::BadParameter, std::string(spec) + ": " + why); };
  for (auto v : values)
    if (v < 1 || v > 1000) throw bad("parameters must lie in 1..1000");

  std::vector<Edge> edges;
  if (family == 'K' && values.size() == 1) {
    int n = static_cast<int>(values[0]);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
    return Graph(n, edges);
  }
  if (family == 'K' && values.size() == 2) {
    int m = static_cast<int>(values[0]);
    int k = static_cast<int>(values[1]);
    for (int i = 1; i <= m; ++i)
      for (int j = m + 1; j <= m + k; ++j) edges.push_back({i, j});
    return Graph(m + k, edges);
  }
  if (family == 'C' && values.size() == 1) {
    int n = static_cast<int>(values[0]);
    if (n < 3) throw bad("cycles need at least 3 vertices");
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({1, n});
    return Graph(n, edges);
  }
  if (family == 'P' && values.size() == 1) {
    int n = static_cast<int>(values[0]);
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, edges);
  }
  throw Error(ErrorCode::UnknownFamily, "unknown graph family '" + std::string(spec) + "'");
}

int max_degree(const Graph& g) {
  auto deg = g.degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

int component_count(const Graph& g) {
  std::vector<int> parent(g.n() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int components = g.n();
  for (const auto& e : g.edges()) {
    int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

int cyclomatic_number(const Graph& g) { return g.edge_count() - g.n() + component_count(g); }

bool has_triangle(const Graph& g) {
  for (const auto& e : g.edges())
    for (Vertex w = e.v + 1; w <= g.n(); ++w)
      if (g.has_edge(e.u, w) && g.has_edge(e.v, w)) return true;
  return false;
}

std::uint64_t count_cycles(const Graph& g, const SearchLimits& limits) {
  if (g.n() > limits.max_n)
    throw Error(ErrorCode::SizeLimit, "cycle enumeration capped at n = " + std::to_string(limits.max_n));
  int mu = cyclomatic_number(g);
  if (mu <= 1) return static_cast<std::uint64_t>(mu);

  // Each cycle is found twice from its smallest vertex (once per direction).
  auto adj = adjacency(g);
  std::vector<char> on_path(g.n() + 1, 0);
  std::uint64_t closed = 0;
  std::uint64_t budget = 200'000'000;
  std::function<void(Vertex, Vertex, int)> extend = [&](Vertex start, Vertex at, int length) {
    if (budget-- == 0) throw Error(ErrorCode::SizeLimit, "cycle enumeration budget exhausted");
    for (Vertex next : adj[at]) {
      if (next == start && length >= 3) {
        ++closed;
      } else if (next > start && !on_path[next]) {
        on_path[next] = 1;
        extend(start, next, length + 1);
        on_path[next] = 0;
      }
    }
  };
  for (Vertex s = 1; s <= g.n(); ++s) {
    on_path[s] = 1;
    extend(s, s, 1);
    on_path[s] = 0;
  }
  return closed / 2;
}

ShapeKind shape_kind(const Graph& g) {
  int mu = cyclomatic_number(g);
  if (mu == 0) return is_connected(g) ? ShapeKind::Tree : ShapeKind::Forest;
  if (mu == 1) return ShapeKind::Unicyclic;
  if (mu == 2) return count_cycles(g, {g.n(), g.edge_count()}) == 2 ? ShapeKind::Bicyclic : ShapeKind::Other;
  // Cycle space of dimension >= 3 holds at least three distinct cycles.
  return ShapeKind::Other;
}

GraphShape classify_shape(const Graph& g, const SearchLimits& limits) {
  GraphShape shape;
  shape.cycle_count = count_cycles(g, limits);
  shape.connected = is_connected(g);
  shape.c3_free = !has_triangle(g);
  switch (shape.cycle_count) {
    case 0: shape.kind = shape.connected ? ShapeKind::Tree : ShapeKind::Forest; break;
    case 1: shape.kind = ShapeKind::Unicyclic; break;
    case 2: shape.kind = ShapeKind::Bicyclic; break;
    default: shape.kind = ShapeKind::Other; break;
  }
  return shape;
}

std::vector<Edge> cycle_edges(const Graph& g) {
  // An edge lies on a cycle iff removing it keeps its endpoints connected.
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    Graph h = g.without_edges(std::span<const Edge>(&e, 1));
    if (component_count(h) == component_count(g)) out.push_back(e);
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> kept(vertices.begin(), vertices.end());
  for (Vertex v : kept)
    if (v < 1 || v > g.n()) throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " not in graph");
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  std::vector<Vertex> relabel(g.n() + 1, 0);
  for (std::size_t k = 0; k < kept.size(); ++k) relabel[kept[k]] = static_cast<Vertex>(k + 1);
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (relabel[e.u] && relabel[e.v]) edges.push_back({relabel[e.u], relabel[e.v]});
  return {Graph(static_cast<int>(kept.size()), std::move(edges)), std::move(kept)};
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Edge> removed;
  for (const auto& e : g.edges())
    if (std::find(vertices.begin(), vertices.end(), e.u) != vertices.end() ||
        std::find(vertices.begin(), vertices.end(), e.v) != vertices.end())
      removed.push_back(e);
  return g.without_edges(removed);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string graph_digest(const Graph& g) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(serialize_graph(g))));
  return buf;
}

}  // namespace lss
