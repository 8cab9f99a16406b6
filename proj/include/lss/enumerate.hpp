#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lss/graph.hpp"

namespace lss {

// Every labelled simple graph on 1..n, in order of the edge bitmask over
// the pairs (1,2), (1,3), ..., (n-1,n).
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& visit);
std::vector<Graph> connected_labeled_graphs(int n);

// Least edge-mask over the relabellings that list vertices by decreasing
// degree, an isomorphism invariant; n <= 8.
std::uint64_t canonical_code(const Graph& g);
// One representative per isomorphism class, built by extending the classes
// on n - 1 vertices; n <= 8.
std::vector<Graph> nonisomorphic_graphs(int n, bool connected_only);

Graph tree_from_pruefer(int n, const std::vector<int>& code);
// One labelled tree per isomorphism class.
std::vector<Graph> nonisomorphic_trees(int n);
// One forest per isomorphism class, as disjoint unions of trees.
std::vector<Graph> nonisomorphic_forests(int n);
Graph random_tree(int n, std::mt19937_64& rng);
// Trees of every shape with one extra edge; covers every connected
// unicyclic graph on n vertices up to isomorphism (with repetitions).
std::vector<Graph> unicyclic_from_trees(int n);

}  // namespace lss
