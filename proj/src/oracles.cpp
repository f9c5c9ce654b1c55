#include "lapcert/oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>

#include "lapcert/error.hpp"
#include "lapcert/rng.hpp"

namespace lapcert {

namespace {

// ---------------------------------------------------------------- max-flow

class Dinic {
 public:
  explicit Dinic(int n) : arcs_(n), level_(n), iter_(n) {}

  void add_edge(int u, int v, int cap, int rev_cap = 0) {
    arcs_[u].push_back({v, static_cast<int>(arcs_[v].size()), cap});
    arcs_[v].push_back({u, static_cast<int>(arcs_[u].size()) - 1, rev_cap});
  }

  // Stops once the flow reaches `limit`: callers only need min(flow, limit).
  int max_flow(int s, int t, int limit = std::numeric_limits<int>::max()) {
    int flow = 0;
    while (flow < limit && bfs(s, t)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      while (flow < limit) {
        int f = dfs(s, t, std::numeric_limits<int>::max());
        if (f == 0) break;
        flow += f;
      }
    }
    return flow;
  }

 private:
  struct Arc {
    int to, rev, cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const Arc& a : arcs_[v]) {
        if (a.cap > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[v] + 1;
          q.push(a.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  int dfs(int v, int t, int f) {
    if (v == t) return f;
    for (int& i = iter_[v]; i < static_cast<int>(arcs_[v].size()); ++i) {
      Arc& a = arcs_[v][i];
      if (a.cap > 0 && level_[v] < level_[a.to]) {
        int d = dfs(a.to, t, std::min(f, a.cap));
        if (d > 0) {
          a.cap -= d;
          arcs_[a.to][a.rev].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  std::vector<std::vector<Arc>> arcs_;
  std::vector<int> level_, iter_;
};

// Max number of internally vertex-disjoint s-t paths, s and t non-adjacent.
int vertex_flow(const Graph& g, int s, int t, int limit) {
  const int n = g.vertex_count();
  Dinic net(2 * n);
  for (int v = 0; v < n; ++v) net.add_edge(2 * v, 2 * v + 1, 1);
  for (const auto& [u, v] : g.edges()) {
    net.add_edge(2 * u + 1, 2 * v, n);
    net.add_edge(2 * v + 1, 2 * u, n);
  }
  return net.max_flow(2 * s + 1, 2 * t, limit);
}

int edge_flow(const Graph& g, int s, int t, int limit) {
  Dinic net(g.vertex_count());
  for (const auto& [u, v] : g.edges()) net.add_edge(u, v, 1, 1);
  return net.max_flow(s, t, limit);
}

}  // namespace

int kappa_exact(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 0;
  if (!g.is_connected()) return 0;
  if (g.is_complete()) return n - 1;
  // Menger over a min-degree vertex s: flows to every non-neighbor of s plus
  // flows between non-adjacent pairs of neighbors of s cover some minimum
  // separator.
  int s = 0;
  for (int v = 1; v < n; ++v)
    if (g.degree(v) < g.degree(s)) s = v;
  int best = n - 1;
  for (int t = 0; t < n; ++t) {
    if (t == s || g.adjacent(s, t)) continue;
    best = std::min(best, vertex_flow(g, s, t, best));
  }
  const auto& nbrs = g.neighbors(s);
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
      if (!g.adjacent(nbrs[i], nbrs[j]))
        best = std::min(best, vertex_flow(g, nbrs[i], nbrs[j], best));
  return best;
}

int kappa_prime_exact(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 0;
  if (!g.is_connected()) return 0;
  int best = g.min_degree();  // cutting around a min-degree vertex
  for (int t = 1; t < n; ++t) best = std::min(best, edge_flow(g, 0, t, best));
  return best;
}

// ------------------------------------------------- maximum independent set

namespace {

struct MisSearch {
  std::array<std::uint64_t, 64> adj{};
  int best = 0;

  // Greedy clique cover of the candidate set; its size bounds alpha from above.
  int cover_bound(std::uint64_t cand) const {
    int cliques = 0;
    while (cand) {
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      std::uint64_t common = adj[v] & cand;
      while (common) {
        int u = std::countr_zero(common);
        cand &= ~(std::uint64_t{1} << u);
        common &= adj[u] & ~(std::uint64_t{1} << u);
      }
      ++cliques;
    }
    return cliques;
  }

  void run(std::uint64_t cand, int size) {
    if (cand == 0) {
      best = std::max(best, size);
      return;
    }
    if (size + cover_bound(cand) <= best) return;
    // Pick a min-degree vertex v; every maximal independent set meets N[v].
    int pivot = -1, pivot_deg = 65;
    for (std::uint64_t rest = cand; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      int d = std::popcount(adj[v] & cand);
      if (d < pivot_deg) {
        pivot = v;
        pivot_deg = d;
      }
    }
    std::uint64_t branch = (adj[pivot] & cand) | (std::uint64_t{1} << pivot);
    std::uint64_t excluded = 0;
    while (branch) {
      int u = std::countr_zero(branch);
      branch &= branch - 1;
      std::uint64_t bit = std::uint64_t{1} << u;
      run(cand & ~excluded & ~adj[u] & ~bit, size + 1);
      excluded |= bit;
    }
  }
};

}  // namespace

std::optional<int> alpha_exact(const Graph& g, const OracleCaps& caps) {
  const int n = g.vertex_count();
  if (n > caps.alpha_max_n || n > 64) return std::nullopt;
  if (n == 0) return 0;
  MisSearch mis;
  for (const auto& [u, v] : g.edges()) {
    mis.adj[u] |= std::uint64_t{1} << v;
    mis.adj[v] |= std::uint64_t{1} << u;
  }
  std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  mis.run(all, 0);
  return mis.best;
}

// ------------------------------------------------------------- chromatic

namespace {

struct ColorSearch {
  const Graph& g;
  int n, k;
  std::vector<int> color;        // -1 = uncolored
  std::vector<std::uint64_t> neighbor_colors;
  int colored = 0, used_max = 0;

  explicit ColorSearch(const Graph& graph, int colors)
      : g(graph),
        n(graph.vertex_count()),
        k(colors),
        color(n, -1),
        neighbor_colors(n, 0) {}

  bool run() {
    if (colored == n) return true;
    // Saturation order: most distinct neighbor colors, then highest degree.
    int v = -1, sat = -1;
    for (int u = 0; u < n; ++u) {
      if (color[u] >= 0) continue;
      int s = std::popcount(neighbor_colors[u]);
      if (s > sat || (s == sat && g.degree(u) > g.degree(v))) {
        v = u;
        sat = s;
      }
    }
    int limit = std::min(k, used_max + 1);
    for (int c = 0; c < limit; ++c) {
      if (neighbor_colors[v] & (std::uint64_t{1} << c)) continue;
      color[v] = c;
      ++colored;
      int prev_used = used_max;
      used_max = std::max(used_max, c + 1);
      std::vector<int> touched;
      for (int w : g.neighbors(v)) {
        if (!(neighbor_colors[w] & (std::uint64_t{1} << c))) {
          neighbor_colors[w] |= std::uint64_t{1} << c;
          touched.push_back(w);
        }
      }
      if (run()) return true;
      for (int w : touched) neighbor_colors[w] &= ~(std::uint64_t{1} << c);
      used_max = prev_used;
      --colored;
      color[v] = -1;
    }
    return false;
  }
};

int greedy_clique_size(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  int start = 0;
  for (int v = 1; v < n; ++v)
    if (g.degree(v) > g.degree(start)) start = v;
  VertexSet common = g.neighbor_set(start);
  int size = 1;
  while (common.size() > 0) {
    int pick = -1;
    for (int v : common.members()) {
      if (pick < 0 || g.degree(v) > g.degree(pick)) pick = v;
    }
    ++size;
    common = common & g.neighbor_set(pick);
  }
  return size;
}

}  // namespace

std::optional<int> chi_exact(const Graph& g, const OracleCaps& caps) {
  const int n = g.vertex_count();
  if (n > caps.chi_max_n) return std::nullopt;
  if (n == 0) return 0;
  if (g.edge_count() == 0) return 1;
  for (int k = std::max(2, greedy_clique_size(g)); k <= n; ++k) {
    ColorSearch search(g, k);
    if (search.run()) return k;
  }
  return n;  // unreachable: n colors always suffice
}

// ----------------------------------------------------------- hamiltonicity

namespace {

struct CapHit {};

struct HamBacktrack {
  const Graph& g;
  int n;
  long long budget;
  std::vector<int> path;
  std::vector<char> used;

  HamBacktrack(const Graph& graph, long long nodes)
      : g(graph), n(graph.vertex_count()), budget(nodes), used(n, 0) {}

  bool reachable_all_unvisited(int from) const {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{from};
    seen[from] = 1;
    int hits = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (seen[w] || (used[w] && w != from)) continue;
        seen[w] = 1;
        ++hits;
        stack.push_back(w);
      }
    }
    return hits == n - static_cast<int>(path.size());
  }

  bool extend() {
    int v = path.back();
    if (static_cast<int>(path.size()) == n) return g.adjacent(v, path[0]);
    if (--budget < 0) throw CapHit{};
    // Every unvisited vertex needs two usable endpoints among unvisited
    // vertices and the two path ends.
    for (int u = 0; u < n; ++u) {
      if (used[u]) continue;
      int free = 0;
      for (int w : g.neighbors(u))
        if (!used[w] || w == v || w == path[0]) ++free;
      if (free < 2) return false;
    }
    if (!reachable_all_unvisited(v)) return false;
    for (int w : g.neighbors(v)) {
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      if (extend()) return true;
      path.pop_back();
      used[w] = 0;
    }
    return false;
  }
};

std::vector<int> normalize_cycle(std::vector<int> cycle) {
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  if (cycle.size() > 2 && cycle[1] > cycle.back())
    std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

HamiltonianResult posa_heuristic(const Graph& g, long long budget) {
  const int n = g.vertex_count();
  Rng rng(mix_seed(0x704f5341u, static_cast<std::uint64_t>(n)));
  std::vector<int> path;
  std::vector<char> in_path(n, 0);
  const int restarts = 24;
  long long per_restart = std::max<long long>(budget / restarts, 1000);
  for (int r = 0; r < restarts; ++r) {
    path.assign(1, static_cast<int>(rng.next_below(n)));
    std::fill(in_path.begin(), in_path.end(), 0);
    in_path[path[0]] = 1;
    for (long long step = 0; step < per_restart; ++step) {
      int end = path.back();
      const auto& nbrs = g.neighbors(end);
      std::vector<int> fresh;
      for (int w : nbrs)
        if (!in_path[w]) fresh.push_back(w);
      if (!fresh.empty()) {
        int w = fresh[rng.next_below(fresh.size())];
        in_path[w] = 1;
        path.push_back(w);
        continue;
      }
      if (static_cast<int>(path.size()) == n && g.adjacent(end, path[0])) {
        HamiltonianResult res;
        res.status = HamStatus::yes;
        res.cycle = normalize_cycle(path);
        return res;
      }
      // Rotate: reverse the suffix after a random path neighbor of the end.
      std::vector<int> pivots;
      for (int w : nbrs)
        if (in_path[w] && w != end &&
            (path.size() < 2 || w != path[path.size() - 2]))
          pivots.push_back(w);
      if (pivots.empty()) break;
      int u = pivots[rng.next_below(pivots.size())];
      auto it = std::find(path.begin(), path.end(), u);
      std::reverse(it + 1, path.end());
    }
  }
  return {};
}

}  // namespace

HamiltonianResult hamiltonian_exact(const Graph& g, const OracleCaps& caps) {
  const int n = g.vertex_count();
  HamiltonianResult res;
  if (n < 3 || !g.is_connected() || g.min_degree() < 2) {
    res.status = HamStatus::no;
    return res;
  }
  if (n <= caps.ham_exact_max_n) {
    HamBacktrack bt(g, caps.ham_node_budget);
    bt.path.push_back(0);
    bt.used[0] = 1;
    try {
      res.status = bt.extend() ? HamStatus::yes : HamStatus::no;
      if (res.status == HamStatus::yes) res.cycle = normalize_cycle(bt.path);
      return res;
    } catch (const CapHit&) {
      // fall through to the heuristic
    }
  }
  return posa_heuristic(g, caps.ham_node_budget);
}

// ----------------------------------------------- subset-enumeration ratios

std::optional<double> gamma_exact(const Graph& g, const OracleCaps& caps) {
  const int n = g.vertex_count();
  if (n > caps.subset_enum_max_n) return std::nullopt;
  if (n < 2) return std::numeric_limits<double>::infinity();
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }
  const std::uint32_t all = (n == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t x = 1; x < all; ++x) {
    std::uint32_t reach = 0;
    for (std::uint32_t rest = x; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      reach |= adj[v];
    }
    std::uint32_t frontier = reach & ~x;
    std::uint32_t far = all & ~x & ~frontier;
    int far_count = std::popcount(far);
    if (far_count == 0) continue;
    double ratio = static_cast<double>(std::popcount(frontier)) /
                   (static_cast<double>(std::popcount(x)) * far_count);
    best = std::min(best, ratio);
  }
  return best;
}

std::optional<double> beta_exact(const Graph& g, const OracleCaps& caps) {
  const int n = g.vertex_count();
  if (n > caps.subset_enum_max_n) return std::nullopt;
  if (n < 2) return std::nullopt;
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }
  const std::uint32_t all = (n == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t u = 1; u < all; ++u) {
    long long cross = 0;
    for (std::uint32_t rest = u; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      cross += std::popcount(adj[v] & ~u);
    }
    int size = std::popcount(u);
    double ratio = static_cast<double>(cross) /
                   (static_cast<double>(size) * (n - size));
    best = std::min(best, ratio);
  }
  return best;
}

// ------------------------------------------------------------- forwarding

Routing Routing::from_paths(const Graph& g, std::vector<std::vector<int>> paths) {
  Routing r;
  r.n = g.vertex_count();
  r.paths = std::move(paths);
  r.vertex_load.assign(r.n, 0);
  r.edge_load.assign(g.edge_count(), 0);
  std::vector<std::vector<int>> edge_index(r.n, std::vector<int>(r.n, -1));
  for (int i = 0; i < static_cast<int>(g.edges().size()); ++i) {
    const auto& [u, v] = g.edges()[i];
    edge_index[u][v] = edge_index[v][u] = i;
  }
  for (const auto& p : r.paths) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (i > 0) ++r.vertex_load[p[i]];
      ++r.edge_load[edge_index[p[i]][p[i + 1]]];
    }
  }
  return r;
}

void Routing::validate(const Graph& g) const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::domain, "invalid routing: " + what);
  };
  if (n != g.vertex_count()) fail("vertex count mismatch");
  if (static_cast<int>(paths.size()) != n * n) fail("path table size");
  std::vector<long long> vload(n, 0), eload(g.edge_count(), 0);
  std::vector<std::vector<int>> edge_index(n, std::vector<int>(n, -1));
  for (int i = 0; i < static_cast<int>(g.edges().size()); ++i) {
    const auto& [u, v] = g.edges()[i];
    edge_index[u][v] = edge_index[v][u] = i;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const auto& p = paths[u * n + v];
      if (u == v) {
        if (!p.empty()) fail("diagonal entry not empty");
        continue;
      }
      if (p.size() < 2 || p.front() != u || p.back() != v) fail("endpoint mismatch");
      std::vector<char> seen(n, 0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || p[i] >= n || seen[p[i]]) fail("path not simple");
        seen[p[i]] = 1;
        if (i > 0 && i + 1 < p.size()) ++vload[p[i]];
        if (i + 1 < p.size()) {
          if (edge_index[p[i]][p[i + 1]] < 0) fail("missing edge");
          ++eload[edge_index[p[i]][p[i + 1]]];
        }
      }
    }
  }
  if (vload != vertex_load) fail("vertex loads inconsistent");
  if (eload != edge_load) fail("edge loads inconsistent");
}

long long Routing::max_vertex_load() const {
  return vertex_load.empty() ? 0 : *std::max_element(vertex_load.begin(), vertex_load.end());
}

long long Routing::max_edge_load() const {
  return edge_load.empty() ? 0 : *std::max_element(edge_load.begin(), edge_load.end());
}

namespace {

struct PathCand {
  std::vector<int> path;
  std::vector<int> contrib;  // loaded slot indices (interior vertices or edges)
};

struct PairTask {
  int u, v;
  std::vector<PathCand> cands;
  int min_contrib = 0;
};

struct ForwardingSearch {
  std::vector<PairTask> tasks;
  std::vector<int> order;       // task indices, most constrained first
  std::vector<long long> suffix_min;
  std::vector<long long> load;
  std::vector<int> chosen;
  long long total = 0, threshold = 0, slots = 0, budget = 0;
  bool budget_hit = false;

  bool feasible(int pos) {
    if (--budget < 0) {
      budget_hit = true;
      return false;
    }
    if (pos == static_cast<int>(order.size())) return true;
    if (total + suffix_min[pos] > threshold * slots) return false;
    PairTask& task = tasks[order[pos]];
    for (int c = 0; c < static_cast<int>(task.cands.size()); ++c) {
      const auto& contrib = task.cands[c].contrib;
      bool ok = true;
      for (int slot : contrib)
        if (load[slot] + 1 > threshold) {
          ok = false;
          break;
        }
      if (!ok) continue;
      for (int slot : contrib) ++load[slot];
      total += static_cast<long long>(contrib.size());
      chosen[order[pos]] = c;
      if (feasible(pos + 1)) return true;
      if (budget_hit) return false;
      for (int slot : contrib) --load[slot];
      total -= static_cast<long long>(contrib.size());
    }
    return false;
  }
};

// Minimize the max slot load over one-candidate-per-task assignments.
// Returns the best value; fills `assignment` and sets `proven` when the value
// is certified optimal despite any candidate truncation or budget cut.
long long solve_min_max_load(std::vector<PairTask> tasks, long long slot_count,
                             long long budget, bool truncated,
                             std::vector<int>& assignment, bool& proven) {
  ForwardingSearch s;
  s.tasks = std::move(tasks);
  s.slots = std::max<long long>(slot_count, 1);
  s.budget = budget;
  const int t = static_cast<int>(s.tasks.size());
  s.order.resize(t);
  std::iota(s.order.begin(), s.order.end(), 0);
  std::sort(s.order.begin(), s.order.end(), [&](int a, int b) {
    if (s.tasks[a].cands.size() != s.tasks[b].cands.size())
      return s.tasks[a].cands.size() < s.tasks[b].cands.size();
    return a < b;
  });
  s.suffix_min.assign(t + 1, 0);
  for (int i = t - 1; i >= 0; --i)
    s.suffix_min[i] = s.suffix_min[i + 1] + s.tasks[s.order[i]].min_contrib;
  long long lb = (s.suffix_min[0] + s.slots - 1) / s.slots;

  // Greedy pass: pick the candidate that keeps the running max lowest.
  s.load.assign(slot_count, 0);
  std::vector<int> greedy(t, 0);
  long long greedy_max = 0;
  for (int idx : s.order) {
    const PairTask& task = s.tasks[idx];
    int best_c = 0;
    long long best_peak = std::numeric_limits<long long>::max();
    for (int c = 0; c < static_cast<int>(task.cands.size()); ++c) {
      long long peak = 0;
      for (int slot : task.cands[c].contrib)
        peak = std::max(peak, s.load[slot] + 1);
      if (peak < best_peak ||
          (peak == best_peak &&
           task.cands[c].contrib.size() < task.cands[best_c].contrib.size())) {
        best_peak = peak;
        best_c = c;
      }
    }
    greedy[idx] = best_c;
    for (int slot : task.cands[best_c].contrib) ++s.load[slot];
    greedy_max = std::max(greedy_max, best_peak);
  }
  long long best = greedy_max;
  assignment = greedy;
  if (t == 0) {
    proven = true;
    return 0;
  }
  if (greedy_max <= lb) {
    proven = true;
    return greedy_max;
  }

  s.chosen.assign(t, 0);
  bool settled = false;
  for (long long th = lb; th < greedy_max; ++th) {
    s.load.assign(slot_count, 0);
    s.total = 0;
    s.threshold = th;
    if (s.feasible(0)) {
      best = th;
      assignment = s.chosen;
      settled = true;
      break;
    }
    if (s.budget_hit) break;
  }
  if (!settled && !s.budget_hit) settled = true;  // greedy value proven optimal
  proven = (best == lb) || (settled && !truncated);
  return best;
}

}  // namespace

ForwardingResult forwarding_exact(const Graph& g, const OracleCaps& caps) {
  const int n = g.vertex_count();
  if (n > caps.forwarding_max_n)
    throw Error(ErrorCode::cap,
                "forwarding search capped at n=" + std::to_string(caps.forwarding_max_n));
  if (n >= 2 && !g.is_connected())
    throw Error(ErrorCode::domain, "forwarding indices need a connected graph");
  ForwardingResult res;
  if (n < 2) {
    res.xi_exact = res.pi_exact = true;
    res.xi_routing.n = res.pi_routing.n = n;
    res.xi_routing.paths.assign(static_cast<std::size_t>(n) * n, {});
    res.pi_routing.paths.assign(static_cast<std::size_t>(n) * n, {});
    res.xi_routing.vertex_load.assign(n, 0);
    res.pi_routing.vertex_load.assign(n, 0);
    return res;
  }

  std::vector<std::vector<int>> edge_index(n, std::vector<int>(n, -1));
  for (int i = 0; i < static_cast<int>(g.edges().size()); ++i) {
    const auto& [u, v] = g.edges()[i];
    edge_index[u][v] = edge_index[v][u] = i;
  }

  // All simple u->v paths in neighbor order, shortest kept under the cap.
  bool truncated = false;
  auto enumerate = [&](int u, int v) {
    std::vector<std::vector<int>> found;
    std::vector<int> path{u};
    std::vector<char> used(n, 0);
    used[u] = 1;
    auto dfs = [&](auto&& self, int at) -> void {
      if (at == v) {
        found.push_back(path);
        return;
      }
      for (int w : g.neighbors(at)) {
        if (used[w]) continue;
        used[w] = 1;
        path.push_back(w);
        self(self, w);
        path.pop_back();
        used[w] = 0;
      }
    };
    dfs(dfs, u);
    std::stable_sort(found.begin(), found.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    if (static_cast<int>(found.size()) > caps.forwarding_max_paths_per_pair) {
      found.resize(caps.forwarding_max_paths_per_pair);
      truncated = true;
    }
    return found;
  };

  std::vector<PairTask> vertex_tasks, edge_tasks;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      auto paths = enumerate(u, v);
      if (paths.empty())
        throw Error(ErrorCode::domain, "forwarding indices need a connected graph");
      PairTask vt{u, v, {}, 0}, et{u, v, {}, 0};
      for (auto& p : paths) {
        PathCand vc{p, {}}, ec{p, {}};
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
          if (i > 0) vc.contrib.push_back(p[i]);
          ec.contrib.push_back(edge_index[p[i]][p[i + 1]]);
        }
        // Adjacent pairs always route over their edge for the vertex index:
        // zero interior load beats any detour.
        if (!(g.adjacent(u, v) && p.size() > 2)) vt.cands.push_back(std::move(vc));
        et.cands.push_back(std::move(ec));
      }
      vt.min_contrib = static_cast<int>(vt.cands.front().contrib.size());
      et.min_contrib = static_cast<int>(et.cands.front().contrib.size());
      vertex_tasks.push_back(std::move(vt));
      edge_tasks.push_back(std::move(et));
    }
  }

  auto assemble = [&](const std::vector<PairTask>& tasks,
                      const std::vector<int>& assignment) {
    std::vector<std::vector<int>> paths(static_cast<std::size_t>(n) * n);
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      const PairTask& task = tasks[i];
      paths[static_cast<std::size_t>(task.u) * n + task.v] =
          task.cands[assignment[i]].path;
    }
    return Routing::from_paths(g, std::move(paths));
  };

  std::vector<int> assignment;
  bool proven = false;
  res.xi = solve_min_max_load(vertex_tasks, n, caps.forwarding_node_budget,
                              truncated, assignment, proven);
  res.xi_exact = proven;
  res.xi_routing = assemble(vertex_tasks, assignment);
  res.pi = solve_min_max_load(edge_tasks, g.edge_count(), caps.forwarding_node_budget,
                              truncated, assignment, proven);
  res.pi_exact = proven;
  res.pi_routing = assemble(edge_tasks, assignment);
  return res;
}

// ------------------------------------------------------------ aggregation

ExactInvariants compute_exact_invariants(const Graph& g, const OracleCaps& caps) {
  const int n = g.vertex_count();
  ExactInvariants inv;
  inv.kappa = kappa_exact(g);
  inv.kappa_prime = kappa_prime_exact(g);
  inv.alpha = alpha_exact(g, caps);
  if (!inv.alpha) inv.capped.push_back("alpha");
  inv.chi = chi_exact(g, caps);
  if (!inv.chi) inv.capped.push_back("chi");
  HamiltonianResult ham = hamiltonian_exact(g, caps);
  inv.hamiltonian = ham.status;
  inv.ham_cycle = std::move(ham.cycle);
  if (inv.hamiltonian == HamStatus::unknown) inv.capped.push_back("hamiltonian");
  inv.gamma = gamma_exact(g, caps);
  if (!inv.gamma) inv.capped.push_back("gamma");
  inv.beta = beta_exact(g, caps);
  if (!inv.beta && n >= 2) inv.capped.push_back("beta");
  if (n >= 2 && g.is_connected()) {
    if (n <= caps.forwarding_max_n) {
      ForwardingResult fw = forwarding_exact(g, caps);
      inv.xi = fw.xi;
      inv.pi = fw.pi;
      inv.xi_exact = fw.xi_exact;
      inv.pi_exact = fw.pi_exact;
      if (!fw.xi_exact) inv.capped.push_back("xi");
      if (!fw.pi_exact) inv.capped.push_back("pi");
    } else {
      inv.capped.push_back("xi");
      inv.capped.push_back("pi");
    }
  }
  return inv;
}

ExactInvariants family_closed_forms(const FamilySpec& spec) {
  auto fail = [&] {
    throw Error(ErrorCode::domain,
                "no closed-form invariants for " + spec.to_string());
  };
  ExactInvariants inv;
  switch (spec.family) {
    case Family::path: {
      if (spec.int_params.size() != 1 || spec.int_params[0] < 2) fail();
      long long n = spec.int_params[0];
      inv.kappa = 1;
      inv.kappa_prime = 1;
      inv.alpha = static_cast<int>((n + 1) / 2);
      inv.chi = 2;
      inv.hamiltonian = HamStatus::no;
      inv.xi = 2 * (n / 2) * ((n + 1) / 2 - 1);
      inv.pi = 2 * (n / 2) * ((n + 1) / 2);
      inv.xi_exact = inv.pi_exact = true;
      break;
    }
    case Family::cycle: {
      if (spec.int_params.size() != 1 || spec.int_params[0] < 3) fail();
      long long n = spec.int_params[0];
      inv.kappa = 2;
      inv.kappa_prime = 2;
      inv.alpha = static_cast<int>(n / 2);
      inv.chi = (n % 2 == 0) ? 2 : 3;
      inv.hamiltonian = HamStatus::yes;
      for (long long v = 0; v < n; ++v) inv.ham_cycle.push_back(static_cast<int>(v));
      break;
    }
    case Family::complete: {
      if (spec.int_params.size() != 1 || spec.int_params[0] < 2) fail();
      long long n = spec.int_params[0];
      inv.kappa = static_cast<int>(n - 1);
      inv.kappa_prime = static_cast<int>(n - 1);
      inv.alpha = 1;
      inv.chi = static_cast<int>(n);
      inv.hamiltonian = (n >= 3) ? HamStatus::yes : HamStatus::no;
      if (n >= 3)
        for (long long v = 0; v < n; ++v) inv.ham_cycle.push_back(static_cast<int>(v));
      inv.xi = 0;  // direct routing uses no interior vertices
      inv.pi = 2;  // each edge carries exactly its two ordered endpoint pairs
      inv.xi_exact = inv.pi_exact = true;
      break;
    }
    case Family::complete_multipartite: {
      if (spec.int_params.size() < 2) fail();
      long long n = 0, largest = 0;
      for (long long s : spec.int_params) {
        if (s < 1) fail();
        n += s;
        largest = std::max(largest, s);
      }
      inv.kappa = static_cast<int>(n - largest);
      inv.kappa_prime = static_cast<int>(n - largest);
      inv.alpha = static_cast<int>(largest);
      inv.chi = static_cast<int>(spec.int_params.size());
      inv.hamiltonian =
          (n >= 3 && 2 * largest <= n) ? HamStatus::yes : HamStatus::no;
      if (inv.hamiltonian == HamStatus::yes) {
        // Lay the parts out largest-first, filling even cycle slots before odd
        // ones.  Because no part exceeds n/2, neighbouring slots (including the
        // wrap-around) always come from different parts.
        std::vector<int> parts(spec.int_params.size());
        std::iota(parts.begin(), parts.end(), 0);
        std::stable_sort(parts.begin(), parts.end(), [&](int a, int b) {
          return spec.int_params[static_cast<std::size_t>(a)] >
                 spec.int_params[static_cast<std::size_t>(b)];
        });
        std::vector<int> next_id(spec.int_params.size(), 0);
        for (std::size_t k = 1; k < next_id.size(); ++k)
          next_id[k] = next_id[k - 1] + static_cast<int>(spec.int_params[k - 1]);
        std::vector<int> slot_part;
        for (int k : parts)
          slot_part.insert(slot_part.end(),
                           static_cast<std::size_t>(spec.int_params[static_cast<std::size_t>(k)]),
                           k);
        inv.ham_cycle.assign(static_cast<std::size_t>(n), 0);
        std::size_t slot = 0;
        for (long long pos = 0; pos < n; pos += 2)
          inv.ham_cycle[static_cast<std::size_t>(pos)] =
              next_id[static_cast<std::size_t>(slot_part[slot++])]++;
        for (long long pos = 1; pos < n; pos += 2)
          inv.ham_cycle[static_cast<std::size_t>(pos)] =
              next_id[static_cast<std::size_t>(slot_part[slot++])]++;
      }
      break;
    }
    case Family::petersen: {
      inv.kappa = 3;
      inv.kappa_prime = 3;
      inv.alpha = 4;
      inv.chi = 3;
      inv.hamiltonian = HamStatus::no;
      break;
    }
    default:
      fail();
  }
  return inv;
}

}  // namespace lapcert
