#include "lapcert/graph.hpp"

#include <algorithm>
#include <string>

#include "lapcert/error.hpp"

namespace lapcert {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::parse: return "parse";
    case ErrorCode::param: return "param";
    case ErrorCode::domain: return "domain";
    case ErrorCode::numeric: return "numeric";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::cap: return "cap";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 0) throw Error(ErrorCode::param, "vertex count must be nonnegative");
  neighbors_.resize(n);
  adj_.assign(n, VertexSet(n));
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(ErrorCode::param, "edge endpoint " + std::to_string(u >= n || u < 0 ? u : v) +
                                        " out of range for n=" + std::to_string(n));
    if (u == v) throw Error(ErrorCode::domain, "loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (adj_[u].contains(v))
      throw Error(ErrorCode::param,
                  "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    adj_[u].insert(v);
    adj_[v].insert(u);
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto [u, v] : edges_) {
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return n_ == 0 ? 0 : d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::is_regular() const {
  for (int v = 1; v < n_; ++v)
    if (degree(v) != degree(0)) return false;
  return true;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<int> stack{0};
  VertexSet seen(n_);
  seen.insert(0);
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : neighbors_[u])
      if (!seen.contains(w)) {
        seen.insert(w);
        ++count;
        stack.push_back(w);
      }
  }
  return count == n_;
}

SubsetStats subset_stats(const Graph& g, const VertexSet& x, const VertexSet& y) {
  SubsetStats s;
  for (int v : x.members()) s.vol_x += g.degree(v);
  for (int v : y.members()) s.vol_y += g.degree(v);
  for (int v : x.members()) s.e_xy += (g.neighbor_set(v) & y).size();
  VertexSet inter = x & y;
  s.intersection_size = inter.size();
  for (int v : inter.members()) s.vol_intersection += g.degree(v);
  return s;
}

BoundarySets boundary_sets(const Graph& g, const VertexSet& x) {
  int n = g.vertex_count();
  if (x.empty() || x.size() == n)
    throw Error(ErrorCode::domain, "boundary_sets needs a nonempty proper subset");
  VertexSet reach(n);
  for (int v : x.members()) reach = reach | g.neighbor_set(v);
  BoundarySets b{reach - x, VertexSet(n)};
  b.far_side = (x | b.frontier).complement();
  return b;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<VertexSet> out;
  VertexSet seen(n);
  for (int s = 0; s < n; ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp(n);
    std::vector<int> stack{s};
    seen.insert(s);
    comp.insert(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u))
        if (!seen.contains(w)) {
          seen.insert(w);
          comp.insert(w);
          stack.push_back(w);
        }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace lapcert
