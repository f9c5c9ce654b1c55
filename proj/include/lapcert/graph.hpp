#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lapcert/vertex_set.hpp"

namespace lapcert {

// Immutable simple undirected graph on vertices 0..n-1. Adjacency is kept
// both as sorted neighbor lists and as per-vertex bitsets; the bitsets make
// e(X,Y) and neighborhood unions word-parallel. Safe to share across threads
// once built.
class Graph {
 public:
  Graph() = default;
  // Throws Error(domain) on loops and Error(param) on duplicate edges.
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  long long edge_count() const { return static_cast<long long>(edges_.size()); }

  int degree(int v) const { return static_cast<int>(neighbors_[v].size()); }
  int min_degree() const;
  int max_degree() const;
  long long volume() const { return 2 * edge_count(); }

  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  const std::vector<int>& neighbors(int v) const { return neighbors_[v]; }
  const VertexSet& neighbor_set(int v) const { return adj_[v]; }

  // Edges as (u, v) with u < v, lexicographically sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool is_regular() const;
  bool is_complete() const { return edge_count() == static_cast<long long>(n_) * (n_ - 1) / 2; }
  bool is_connected() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<VertexSet> adj_;
};

struct SubsetStats {
  long long vol_x = 0;
  long long vol_y = 0;
  long long e_xy = 0;  // ordered adjacent pairs (x,y); an edge inside X∩Y counts twice
  long long vol_intersection = 0;
  int intersection_size = 0;
};

SubsetStats subset_stats(const Graph& g, const VertexSet& x, const VertexSet& y);

struct BoundarySets {
  VertexSet frontier;  // N(X): vertices outside X with a neighbor in X
  VertexSet far_side;  // X⁺ = V \ (X ∪ N(X))
};

// Requires X nonempty and proper; X, N(X), X⁺ partition V.
BoundarySets boundary_sets(const Graph& g, const VertexSet& x);

// Maximal connected vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

}  // namespace lapcert
