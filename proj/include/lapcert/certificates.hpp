#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lapcert/graph.hpp"
#include "lapcert/spectral.hpp"

namespace lapcert {

enum class CertId {
  discrepancy_bound_check,
  pair_deviation_check,
  kappa_lb_spectral,
  kappa_lb_fiedler,
  kappa_lb_regular,
  edge_conn_equality,
  alpha_ub_theta,
  alpha_ub_sigma,
  hamiltonian_cert_theta,
  hamiltonian_cert_sigma,
  chromatic_lb,
  gamma_lb,
  xi_lb,
  beta_ub,
  pi_lb,
};
inline constexpr int kCertIdCount = 15;

const char* cert_id_name(CertId id);

enum class CertKind {
  lower_bound,
  upper_bound,
  equality_claim,
  sufficient_condition,
  inequality_check,
};

const char* cert_kind_name(CertKind k);

// Additive slack used for every inequality decision; certificates also carry
// the raw sides so reports and tests can tighten.
inline constexpr double kSlack = 1e-9;

// The constant c = 2 + 2*sqrt(3) in the vertex-connectivity bound; c^2 = 16 + 8*sqrt(3).
double kappa_bound_const();     // c
double kappa_bound_const_sq();  // c^2, ~29.8564065

// One evaluated spectral claim. `applicable` is the conjunction of the
// recorded preconditions; exactly one of `value` (numeric bounds, claims)
// and `truth` (checks, sufficient conditions) is set when applicable.
struct Certificate {
  CertId id{};
  CertKind kind{};
  bool applicable = false;
  std::vector<std::pair<std::string, bool>> preconditions;
  std::optional<double> value;
  std::optional<bool> truth;
  bool vacuous = false;  // lower bound clamped to 0, or a condition that fired trivially
  std::vector<std::pair<std::string, double>> details;  // raw sides, margins, advisories
  std::string anchor;

  std::optional<double> detail(const std::string& key) const;
};

// Unconditional two-subset discrepancy inequality.
Certificate discrepancy_bound_check(const Graph& g, const SpectralSummary& sum,
                                    const VertexSet& x, const VertexSet& y);
// Unconditional single-subset edge-count deviation inequality.
Certificate pair_deviation_check(const Graph& g, const SpectralSummary& sum, const VertexSet& u);

Certificate kappa_lb_spectral(const Graph& g, const SpectralSummary& sum);
Certificate kappa_lb_fiedler(const Graph& g, const SpectralSummary& sum);
Certificate kappa_lb_regular(const Graph& g, const SpectralSummary& sum);
Certificate edge_conn_equality(const Graph& g, const SpectralSummary& sum);
Certificate alpha_ub_theta(const Graph& g, const SpectralSummary& sum);
Certificate alpha_ub_sigma(const Graph& g, const SpectralSummary& sum);
Certificate hamiltonian_cert_theta(const Graph& g, const SpectralSummary& sum);
Certificate hamiltonian_cert_sigma(const Graph& g, const SpectralSummary& sum);
Certificate chromatic_lb(const Graph& g, const SpectralSummary& sum);
Certificate gamma_lb(const Graph& g, const SpectralSummary& sum);
Certificate xi_lb(const Graph& g, const SpectralSummary& sum);
Certificate beta_ub(const Graph& g, const SpectralSummary& sum);
Certificate pi_lb(const Graph& g, const SpectralSummary& sum);

struct EvalOptions {
  int subset_samples = 200;      // sampled (X,Y) pairs / U sets per graph
  std::uint64_t seed = 0;
  double theta_scale = 1.0;      // validation hook; anything but 1.0 corrupts theta
};

struct EvalResult {
  Spectrum spectrum;
  SpectralSummary summary;                 // theta already scaled if the hook is active
  std::vector<Certificate> certificates;   // all 15, canonical id order
};

// Computes the spectrum once and evaluates every certificate. The two
// subset-parameterized checks are aggregated over a seeded sample; their
// details carry sample count, violation count and worst margin.
EvalResult evaluate_all(const Graph& g, const EvalOptions& opts = {});

}  // namespace lapcert
