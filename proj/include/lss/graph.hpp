#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lss/limits.hpp"

namespace lss {

using Vertex = int;

// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
  bool touches(Vertex w) const { return u == w || v == w; }
  bool shares_vertex(const Edge& o) const { return touches(o.u) || touches(o.v); }
};

Edge make_edge(Vertex a, Vertex b);

// Simple undirected graph on 1..n with a strictly sorted, duplicate-free
// edge list. Two graphs compare equal iff they have the same n and edges.
class Graph {
 public:
  Graph() = default;
  // Throws InvalidEdge on loops, duplicates or out-of-range endpoints.
  // Edge endpoints may be given in either order.
  Graph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  std::span<const Edge> edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_edge(Vertex a, Vertex b) const;
  std::optional<int> edge_index(const Edge& e) const;
  int degree(Vertex v) const;
  std::vector<int> degrees() const;  // indexed by vertex, slot 0 unused

  // Subgraph on the same vertex set keeping edges whose bit is set.
  Graph edge_subgraph(std::uint64_t mask) const;
  Graph without_edges(std::span<const Edge> removed) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

enum class ShapeKind { Forest, Tree, Unicyclic, Bicyclic, Other };
std::string_view shape_kind_name(ShapeKind kind);

struct GraphShape {
  ShapeKind kind = ShapeKind::Forest;
  bool connected = true;
  std::uint64_t cycle_count = 0;
  bool c3_free = true;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // original[k - 1] is the source id of vertex k
};

Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);
Graph named_graph(std::string_view spec);

int max_degree(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g);
// |E| - |V| + #components
int cyclomatic_number(const Graph& g);
bool has_triangle(const Graph& g);

// Exhaustive count of distinct cycle subgraphs. Throws SizeLimit when n
// exceeds the cap or the walk budget runs out.
std::uint64_t count_cycles(const Graph& g, const SearchLimits& limits = kCycleEnumerationLimits);
GraphShape classify_shape(const Graph& g, const SearchLimits& limits = kCycleEnumerationLimits);
// Shape kind without the full cycle count; cheap for dense graphs.
ShapeKind shape_kind(const Graph& g);
// Edges lying on at least one cycle (non-bridges).
std::vector<Edge> cycle_edges(const Graph& g);

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
// G minus a vertex set, keeping the original labels (removed vertices become isolated).
Graph delete_vertices(const Graph& g, std::span<const Vertex> vertices);

std::uint64_t fnv1a64(std::string_view bytes);
std::string graph_digest(const Graph& g);

}  // namespace lss
