#include "lss/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lss/error.hpp"

namespace lss {

namespace {

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b) pairs.push_back({a, b});
  return pairs;
}

// AHU encoding of a rooted tree.
std::string rooted_code(const std::vector<std::vector<Vertex>>& adj, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : adj[v])
    if (w != parent) kids.push_back(rooted_code(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

std::string tree_code(const Graph& t) {
  const int n = t.n();
  if (n <= 2) return std::to_string(n);
  std::vector<std::vector<Vertex>> adj(n + 1);
  for (const auto& e : t.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  // Centres by repeated leaf stripping.
  std::vector<int> deg(n + 1);
  std::vector<Vertex> layer;
  for (Vertex v = 1; v <= n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] <= 1) layer.push_back(v);
  }
  int left = n;
  while (left > 2) {
    left -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex w : adj[v])
        if (--deg[w] == 1) next.push_back(w);
    layer = next;
  }
  std::string best;
  for (Vertex c : layer) {
    std::string code = rooted_code(adj, c, 0);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& visit) {
  auto pairs = all_pairs(n);
  if (pairs.size() > 28) throw Error(ErrorCode::SizeLimit, "labelled enumeration is capped at n <= 8");
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) edges.push_back(pairs[k]);
    visit(Graph(n, std::move(edges)));
  }
}

std::vector<Graph> connected_labeled_graphs(int n) {
  std::vector<Graph> out;
  for_each_labeled_graph(n, [&](const Graph& g) {
    if (is_connected(g)) out.push_back(g);
  });
  return out;
}

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.n();
  if (n > 8) throw Error(ErrorCode::SizeLimit, "canonical form is capped at n <= 8");
  std::vector<std::vector<int>> index(n, std::vector<int>(n, 0));
  int k = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) index[a][b] = index[b][a] = k++;

  // Positions are handed out by decreasing degree; only vertices of equal
  // degree are permuted among themselves.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<std::pair<int, int>> cells;  // [begin, end) in order
  for (int a = 0; a < n;) {
    int b = a;
    while (b < n && g.degree(order[b]) == g.degree(order[a])) ++b;
    cells.emplace_back(a, b);
    a = b;
  }
  std::vector<int> position(n + 1);
  std::uint64_t best = ~std::uint64_t{0};
  auto rec = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      std::uint64_t code = 0;
      for (const auto& e : g.edges()) code |= std::uint64_t{1} << index[position[e.u]][position[e.v]];
      best = std::min(best, code);
      return;
    }
    auto [lo, hi] = cells[cell];
    std::vector<int> members(order.begin() + lo, order.begin() + hi);
    std::sort(members.begin(), members.end());
    do {
      for (int t = lo; t < hi; ++t) position[members[t - lo]] = t;
      self(self, cell + 1);
    } while (std::next_permutation(members.begin(), members.end()));
  };
  rec(rec, 0);
  return best;
}

std::vector<Graph> nonisomorphic_graphs(int n, bool connected_only) {
  if (n > 8) throw Error(ErrorCode::SizeLimit, "isomorphism classes are capped at n <= 8");
  std::vector<Graph> all;
  if (n <= 0) return all;
  if (n == 1) {
    all.emplace_back(1, std::vector<Edge>{});
  } else {
    // Every class on n vertices arises from one on n - 1 by adding vertex n.
    std::set<std::uint64_t> seen;
    for (const Graph& h : nonisomorphic_graphs(n - 1, false)) {
      for (std::uint32_t nbrs = 0; nbrs < (1u << (n - 1)); ++nbrs) {
        std::vector<Edge> edges(h.edges().begin(), h.edges().end());
        for (int v = 1; v < n; ++v)
          if (nbrs >> (v - 1) & 1) edges.push_back({v, n});
        Graph g(n, std::move(edges));
        if (seen.insert(canonical_code(g)).second) all.push_back(std::move(g));
      }
    }
  }
  if (!connected_only) return all;
  std::vector<Graph> out;
  for (auto& g : all)
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

Graph tree_from_pruefer(int n, const std::vector<int>& code) {
  if (n < 2) return Graph(std::max(n, 0), {});
  std::vector<int> degree(n + 1, 1);
  for (int x : code) ++degree[x];
  std::vector<Edge> edges;
  for (int x : code) {
    for (Vertex leaf = 1; leaf <= n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.push_back(make_edge(leaf, x));
        --degree[leaf];
        --degree[x];
        break;
      }
    }
  }
  Vertex a = 0, b = 0;
  for (Vertex v = 1; v <= n; ++v)
    if (degree[v] == 1) (a ? b : a) = v;
  edges.push_back(make_edge(a, b));
  return Graph(n, std::move(edges));
}

std::vector<Graph> nonisomorphic_trees(int n) {
  if (n < 1) return {};
  if (n > 9) throw Error(ErrorCode::SizeLimit, "tree enumeration is capped at n <= 9");
  std::set<std::string> seen;
  std::vector<Graph> out;
  std::vector<int> code(std::max(0, n - 2), 1);
  for (;;) {
    Graph t = tree_from_pruefer(n, code);
    if (seen.insert(tree_code(t)).second) out.push_back(t);
    int pos = static_cast<int>(code.size()) - 1;
    while (pos >= 0 && code[pos] == n) code[pos--] = 1;
    if (pos < 0) break;
    ++code[pos];
  }
  return out;
}

Graph random_tree(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(1, std::max(1, n));
  std::vector<int> code(std::max(0, n - 2));
  for (int& x : code) x = pick(rng);
  return tree_from_pruefer(n, code);
}

std::vector<Graph> nonisomorphic_forests(int n) {
  if (n < 1) return {};
  std::vector<std::vector<Graph>> trees(n + 1);
  for (int k = 1; k <= n; ++k) trees[k] = nonisomorphic_trees(k);
  std::vector<Graph> out;
  std::vector<Edge> edges;
  // Components are chosen in non-increasing (size, index) order so each
  // multiset of trees is produced once.
  auto rec = [&](auto&& self, int used, int max_size, std::size_t max_index) -> void {
    if (used == n) {
      out.emplace_back(n, edges);
      return;
    }
    for (int k = std::min(max_size, n - used); k >= 1; --k) {
      std::size_t limit = k == max_size ? max_index : trees[k].size() - 1;
      for (std::size_t t = 0; t <= limit; ++t) {
        const std::size_t mark = edges.size();
        for (const auto& e : trees[k][t].edges()) edges.push_back({e.u + used, e.v + used});
        self(self, used + k, k, t);
        edges.resize(mark);
      }
    }
  };
  rec(rec, 0, n, trees[n].size() - 1);
  return out;
}

std::vector<Graph> unicyclic_from_trees(int n) {
  std::vector<Graph> out;
  for (const auto& t : nonisomorphic_trees(n)) {
    for (const auto& e : all_pairs(n)) {
      if (t.has_edge(e.u, e.v)) continue;
      std::vector<Edge> edges(t.edges().begin(), t.edges().end());
      edges.push_back(e);
      out.emplace_back(n, std::move(edges));
    }
  }
  return out;
}

}  // namespace lss
