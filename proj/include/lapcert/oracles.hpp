#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lapcert/families.hpp"
#include "lapcert/graph.hpp"

namespace lapcert {

// Exact-computation size caps and deterministic work budgets. Budgets stand
// in for wall-clock timeouts so that seeded runs stay byte-identical.
struct OracleCaps {
  int alpha_max_n = 64;
  int chi_max_n = 32;
  int ham_exact_max_n = 32;  // beyond this only the rotation-extension heuristic runs
  long long ham_node_budget = 50'000'000;
  int subset_enum_max_n = 22;  // gamma / beta enumeration
  int forwarding_max_n = 7;
  int forwarding_max_paths_per_pair = 5000;
  long long forwarding_node_budget = 20'000'000;
};

// Minimum vertex cut via vertex-splitting max-flow over the pairs Menger
// requires; n-1 for complete graphs, 0 if disconnected.
int kappa_exact(const Graph& g);

// Minimum edge cut via s-t max-flows with s fixed; 0 if disconnected.
int kappa_prime_exact(const Graph& g);

// Branch-and-bound maximum independent set (greedy clique-cover bound).
// nullopt when n exceeds the cap.
std::optional<int> alpha_exact(const Graph& g, const OracleCaps& caps = {});

// Iterative k-colorability with saturation-order backtracking.
std::optional<int> chi_exact(const Graph& g, const OracleCaps& caps = {});

enum class HamStatus { yes, no, unknown };

struct HamiltonianResult {
  HamStatus status = HamStatus::unknown;
  std::vector<int> cycle;  // witness when status == yes
};

// Exact backtracking (degree/connectivity pruning) within the cap; larger
// graphs fall back to rotation-extension and report found/unknown.
HamiltonianResult hamiltonian_exact(const Graph& g, const OracleCaps& caps = {});

// Vertex expanding factor: min |N(X)| / (|X||X+|) over nonempty proper X
// with |X+| >= 1; +infinity when no X qualifies. Enumerates all subsets.
std::optional<double> gamma_exact(const Graph& g, const OracleCaps& caps = {});

// Cut-ratio minimum: min e(U, V\U) / (|U|(n-|U|)) over nonempty proper U.
std::optional<double> beta_exact(const Graph& g, const OracleCaps& caps = {});

// One simple path per ordered vertex pair, with per-vertex interior counts
// and per-edge traversal counts.
struct Routing {
  int n = 0;
  std::vector<std::vector<int>> paths;  // index u*n+v; empty on the diagonal
  std::vector<long long> vertex_load;   // interior-vertex counts
  std::vector<long long> edge_load;     // indexed like Graph::edges()

  static Routing from_paths(const Graph& g, std::vector<std::vector<int>> paths);
  void validate(const Graph& g) const;  // throws Error(domain) on any inconsistency
  long long max_vertex_load() const;
  long long max_edge_load() const;
};

struct ForwardingResult {
  long long xi = 0;
  long long pi = 0;
  bool xi_exact = false;  // false: value is only a best-found upper bound
  bool pi_exact = false;
  Routing xi_routing;
  Routing pi_routing;
};

// Enumerates all simple paths per ordered pair (up to the candidate cap),
// then minimizes the max vertex load and, independently, the max edge load
// by threshold branch-and-bound. Exact whenever no cap was hit or the
// result meets the distance-sum lower bound. Throws Error(domain) when g is
// disconnected and Error(cap) when n exceeds the forwarding cap.
ForwardingResult forwarding_exact(const Graph& g, const OracleCaps& caps = {});

struct ExactInvariants {
  std::optional<int> kappa;
  std::optional<int> kappa_prime;
  std::optional<int> alpha;
  std::optional<int> chi;
  HamStatus hamiltonian = HamStatus::unknown;
  std::vector<int> ham_cycle;
  std::optional<double> gamma;  // +infinity encodes "no qualifying subset"
  std::optional<double> beta;
  std::optional<long long> xi;
  std::optional<long long> pi;
  bool xi_exact = false;
  bool pi_exact = false;
  std::vector<std::string> capped;  // fields skipped or degraded for size
};

ExactInvariants compute_exact_invariants(const Graph& g, const OracleCaps& caps = {});

// Analytic invariants for families where closed forms are known
// (path, cycle, complete, complete_multipartite, petersen). Forwarding
// indices are filled only where the closed form is established: paths and
// complete graphs. Throws Error(domain) for unsupported specs.
ExactInvariants family_closed_forms(const FamilySpec& spec);

}  // namespace lapcert
