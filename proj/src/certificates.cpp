#include "lapcert/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lapcert/error.hpp"
#include "lapcert/rng.hpp"

namespace lapcert {

const char* cert_id_name(CertId id) {
  switch (id) {
    case CertId::discrepancy_bound_check: return "discrepancy_bound_check";
    case CertId::pair_deviation_check: return "pair_deviation_check";
    case CertId::kappa_lb_spectral: return "kappa_lb_spectral";
    case CertId::kappa_lb_fiedler: return "kappa_lb_fiedler";
    case CertId::kappa_lb_regular: return "kappa_lb_regular";
    case CertId::edge_conn_equality: return "edge_conn_equality";
    case CertId::alpha_ub_theta: return "alpha_ub_theta";
    case CertId::alpha_ub_sigma: return "alpha_ub_sigma";
    case CertId::hamiltonian_cert_theta: return "hamiltonian_cert_theta";
    case CertId::hamiltonian_cert_sigma: return "hamiltonian_cert_sigma";
    case CertId::chromatic_lb: return "chromatic_lb";
    case CertId::gamma_lb: return "gamma_lb";
    case CertId::xi_lb: return "xi_lb";
    case CertId::beta_ub: return "beta_ub";
    case CertId::pi_lb: return "pi_lb";
  }
  return "?";
}

const char* cert_kind_name(CertKind k) {
  switch (k) {
    case CertKind::lower_bound: return "lower_bound";
    case CertKind::upper_bound: return "upper_bound";
    case CertKind::equality_claim: return "equality_claim";
    case CertKind::sufficient_condition: return "sufficient_condition";
    case CertKind::inequality_check: return "inequality_check";
  }
  return "?";
}

double kappa_bound_const() { return 2.0 + 2.0 * std::sqrt(3.0); }
double kappa_bound_const_sq() { return 16.0 + 8.0 * std::sqrt(3.0); }

std::optional<double> Certificate::detail(const std::string& key) const {
  for (const auto& [k, v] : details)
    if (k == key) return v;
  return std::nullopt;
}

namespace {

struct Builder {
  Certificate c;

  Builder(CertId id, CertKind kind, std::string anchor) {
    c.id = id;
    c.kind = kind;
    c.anchor = std::move(anchor);
    c.applicable = true;
  }
  Builder& pre(std::string name, bool ok) {
    c.preconditions.emplace_back(std::move(name), ok);
    c.applicable = c.applicable && ok;
    return *this;
  }
  Builder& detail(std::string name, double v) {
    c.details.emplace_back(std::move(name), v);
    return *this;
  }
  Certificate bound(double raw) {  // clamp negative lower bounds to 0, flag vacuous
    if (c.applicable) {
      detail("raw", raw);
      c.value = std::max(0.0, raw);
      c.vacuous = raw <= 0.0;
    }
    return std::move(c);
  }
  Certificate exact(double v) {
    if (c.applicable) c.value = v;
    return std::move(c);
  }
  Certificate verdict(bool t) {
    if (c.applicable) c.truth = t;
    return std::move(c);
  }
  Certificate inapplicable() { return std::move(c); }
};

}  // namespace

Certificate discrepancy_bound_check(const Graph& g, const SpectralSummary& sum,
                                    const VertexSet& x, const VertexSet& y) {
  Builder b(CertId::discrepancy_bound_check, CertKind::inequality_check,
            "|e(X,Y) - (d/n)|X||Y| + d|X^Y| - vol(X^Y)| <= "
            "(theta/n) sqrt(|X|(n-|X|)|Y|(n-|Y|))");
  const double n = sum.n, d = sum.average_degree;
  SubsetStats st = subset_stats(g, x, y);
  const double sx = x.size(), sy = y.size();
  double lhs = std::abs(static_cast<double>(st.e_xy) - d / n * sx * sy +
                        d * st.intersection_size - static_cast<double>(st.vol_intersection));
  double rhs = sum.theta / n * std::sqrt(sx * (n - sx) * sy * (n - sy));
  b.detail("lhs", lhs).detail("rhs", rhs).detail("margin", rhs - lhs);
  return b.verdict(lhs <= rhs + kSlack);
}

Certificate pair_deviation_check(const Graph& g, const SpectralSummary& sum, const VertexSet& u) {
  Builder b(CertId::pair_deviation_check, CertKind::inequality_check,
            "|2 e(U) - d|U|(|U|-1)/n| <= (2 theta/n)|U|(n - |U|/2)");
  const double n = sum.n, d = sum.average_degree;
  SubsetStats st = subset_stats(g, u, u);
  const double su = u.size();
  double inner_edges = static_cast<double>(st.e_xy) / 2.0;  // unordered edges inside U
  double lhs = std::abs(2.0 * inner_edges - d * su * (su - 1.0) / n);
  double rhs = 2.0 * sum.theta / n * su * (n - su / 2.0);
  b.detail("lhs", lhs).detail("rhs", rhs).detail("margin", rhs - lhs);
  return b.verdict(lhs <= rhs + kSlack);
}

Certificate kappa_lb_spectral(const Graph& g, const SpectralSummary& sum) {
  (void)g;
  Builder b(CertId::kappa_lb_spectral, CertKind::lower_bound,
            "kappa >= delta - c^2 theta^2/delta, c = 2 + 2 sqrt(3)");
  b.pre("connected", sum.connected)
      .pre("delta >= 1", sum.min_degree >= 1)
      .pre("delta <= n/2", sum.min_degree <= sum.n / 2.0);
  if (!b.c.applicable) return b.inapplicable();
  double delta = sum.min_degree;
  return b.bound(delta - kappa_bound_const_sq() * sum.theta * sum.theta / delta);
}

Certificate kappa_lb_fiedler(const Graph& g, const SpectralSummary& sum) {
  (void)g;
  Builder b(CertId::kappa_lb_fiedler, CertKind::lower_bound,
            "kappa >= sigma_1 for connected non-complete graphs");
  b.pre("connected", sum.connected).pre("not complete", !sum.complete);
  if (!b.c.applicable) return b.inapplicable();
  return b.exact(sum.sigma1);
}

Certificate kappa_lb_regular(const Graph& g, const SpectralSummary& sum) {
  (void)g;
  Builder b(CertId::kappa_lb_regular, CertKind::lower_bound,
            "kappa >= d - 36 lambda^2/d for connected d-regular graphs, d <= n/2");
  b.pre("regular", sum.regular)
      .pre("connected", sum.connected)
      .pre("d >= 1", sum.average_degree >= 1.0)
      .pre("d <= n/2", sum.average_degree <= sum.n / 2.0);
  if (!b.c.applicable) return b.inapplicable();
  double d = sum.average_degree;
  double lambda = sum.theta;  // eigenvalues of A are d - sigma_i, so lambda == theta
  b.detail("lambda", lambda);
  return b.bound(d - 36.0 * lambda * lambda / d);
}

Certificate edge_conn_equality(const Graph& g, const SpectralSummary& sum) {
  (void)g;
  Builder b(CertId::edge_conn_equality, CertKind::equality_claim,
            "kappa' = delta when 2 <= sigma_1 and sigma_max <= 2d - 2");
  b.pre("n >= 2", sum.n >= 2)
      .pre("sigma_1 >= 2", sum.sigma1 >= 2.0 - kSlack)
      .pre("sigma_max <= 2d-2", sum.sigma_max <= 2.0 * sum.average_degree - 2.0 + kSlack);
  if (!b.c.applicable) return b.inapplicable();
  return b.exact(static_cast<double>(sum.min_degree));
}

Certificate alpha_ub_theta(const Graph& g, const SpectralSummary& sum) {
  (void)g;
  Builder b(CertId::alpha_ub_theta, CertKind::upper_bound,
            "alpha <= (2 n theta + d)/(d + theta)");
  b.pre("d + theta > 0", sum.average_degree + sum.theta > 0.0);
  if (!b.c.applicable) return b.inapplicable();
  double d = sum.average_degree, th = sum.theta;
  return b.exact((2.0 * sum.n * th + d) / (d + th));
}

Certificate alpha_ub_sigma(const Graph& g, const SpectralSummary& sum) {
  (void)g;
  Builder b(CertId::alpha_ub_sigma, CertKind::upper_bound,
            "alpha <= n (sigma_max - delta)/sigma_max");
  b.pre("sigma_max > 0", sum.sigma_max > 0.0);
  if (!b.c.applicable) return b.inapplicable();
  return b.exact(sum.n * (sum.sigma_max - sum.min_degree) / sum.sigma_max);
}

Certificate hamiltonian_cert_theta(const Graph& g, const SpectralSummary& sum) {
  (void)g;
  Builder b(CertId::hamiltonian_cert_theta, CertKind::sufficient_condition,
            "delta - c^2 theta^2/delta >= (2 n theta + d)/(d + theta) implies Hamiltonian");
  b.pre("connected", sum.connected).pre("n >= 3", sum.n >= 3);
  if (!b.c.applicable) return b.inapplicable();
  double d = sum.average_degree, th = sum.theta, delta = sum.min_degree;
  double lhs = delta - kappa_bound_const_sq() * th * th / delta;
  double rhs = (2.0 * sum.n * th + d) / (d + th);
  b.detail("lhs", lhs).detail("rhs", rhs);
  // Advisory only: the connectivity bound this rides on assumes delta <= n/2,
  // but the condition is evaluated literally.
  b.detail("advisory_delta_le_half_n", sum.min_degree <= sum.n / 2.0 ? 1.0 : 0.0);
  return b.verdict(lhs >= rhs - kSlack);
}

Certificate hamiltonian_cert_sigma(const Graph& g, const SpectralSummary& sum) {
  (void)g;
  Builder b(CertId::hamiltonian_cert_sigma, CertKind::sufficient_condition,
            "sigma_1 >= n (sigma_max - delta)/sigma_max implies Hamiltonian");
  b.pre("connected", sum.connected).pre("n >= 3", sum.n >= 3);
  if (!b.c.applicable) return b.inapplicable();
  double rhs = sum.n * (sum.sigma_max - sum.min_degree) / sum.sigma_max;
  b.detail("lhs", sum.sigma1).detail("rhs", rhs);
  return b.verdict(sum.sigma1 >= rhs - kSlack);
}

Certificate chromatic_lb(const Graph& g, const SpectralSummary& sum) {
  (void)g;
  Builder b(CertId::chromatic_lb, CertKind::lower_bound,
            "chi >= sigma_max/(sigma_max - delta)");
  b.pre("has edges", sum.m >= 1);
  if (!b.c.applicable) return b.inapplicable();
  // sigma_max >= Delta + 1 > delta whenever the graph has an edge.
  double v = sum.sigma_max / (sum.sigma_max - sum.min_degree);
  b.detail("ceil", std::ceil(v - kSlack));
  return b.exact(v);
}

Certificate gamma_lb(const Graph& g, const SpectralSummary& sum) {
  (void)g;
  Builder b(CertId::gamma_lb, CertKind::lower_bound,
            "gamma >= (d^2 - theta^2)/(n theta^2)");
  b.pre("theta > 0", sum.theta > 0.0);
  if (!b.c.applicable) return b.inapplicable();
  double d = sum.average_degree, th = sum.theta;
  return b.bound((d * d - th * th) / (sum.n * th * th));
}

Certificate xi_lb(const Graph& g, const SpectralSummary& sum) {
  (void)g;
  Builder b(CertId::xi_lb, CertKind::lower_bound,
            "xi >= sqrt((1 - 2 sigma_1)/sigma_1) when sigma_1 <= 1/2");
  b.pre("connected", sum.connected)
      .pre("n >= 2", sum.n >= 2)
      .pre("sigma_1 <= 1/2", sum.sigma1 <= 0.5 + kSlack);
  if (!b.c.applicable) return b.inapplicable();
  return b.exact(std::sqrt(std::max(0.0, 1.0 - 2.0 * sum.sigma1) / sum.sigma1));
}

Certificate beta_ub(const Graph& g, const SpectralSummary& sum) {
  (void)g;
  Builder b(CertId::beta_ub, CertKind::upper_bound, "beta <= (d + theta)/n");
  b.pre("n >= 2", sum.n >= 2).pre("has edges", sum.m >= 1);
  if (!b.c.applicable) return b.inapplicable();
  return b.exact((sum.average_degree + sum.theta) / sum.n);
}

Certificate pi_lb(const Graph& g, const SpectralSummary& sum) {
  (void)g;
  Builder b(CertId::pi_lb, CertKind::lower_bound, "pi >= 2n/(d + theta)");
  b.pre("connected", sum.connected).pre("n >= 2", sum.n >= 2);
  if (!b.c.applicable) return b.inapplicable();
  return b.exact(2.0 * sum.n / (sum.average_degree + sum.theta));
}

namespace {

// Aggregate a subset-parameterized check over `samples` seeded draws.
template <typename Check>
Certificate sample_subsets(const Graph& g, const SpectralSummary& sum, int samples,
                           std::uint64_t seed, Check check) {
  Rng rng(seed);
  Certificate agg;
  bool first = true;
  int violations = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (int k = 0; k < samples; ++k) {
    Certificate one = check(rng);
    if (first) {
      agg = one;
      agg.details.clear();
      first = false;
    }
    if (!one.truth.value_or(true)) ++violations;
    if (auto m = one.detail("margin")) worst = std::min(worst, *m);
  }
  if (first) {  // zero samples: nothing checked, trivially holds
    agg = check(rng);
    agg.details.clear();
    worst = 0.0;
  }
  agg.truth = violations == 0;
  agg.details.emplace_back("samples", samples);
  agg.details.emplace_back("violations", violations);
  agg.details.emplace_back("worst_margin", worst);
  (void)g;
  (void)sum;
  return agg;
}

}  // namespace

EvalResult evaluate_all(const Graph& g, const EvalOptions& opts) {
  EvalResult r;
  r.spectrum = spectrum_of(g);
  r.summary = spectral_summary(g, r.spectrum);
  r.summary.theta *= opts.theta_scale;

  const Graph& gr = g;
  const SpectralSummary& s = r.summary;
  int n = g.vertex_count();

  r.certificates.push_back(sample_subsets(
      gr, s, opts.subset_samples, mix_seed(opts.seed, 1), [&](Rng& rng) {
        VertexSet x = rng.next_subset(n), y = rng.next_subset(n);
        return discrepancy_bound_check(gr, s, x, y);
      }));
  r.certificates.push_back(sample_subsets(
      gr, s, opts.subset_samples, mix_seed(opts.seed, 2),
      [&](Rng& rng) { return pair_deviation_check(gr, s, rng.next_subset(n)); }));
  r.certificates.push_back(kappa_lb_spectral(gr, s));
  r.certificates.push_back(kappa_lb_fiedler(gr, s));
  r.certificates.push_back(kappa_lb_regular(gr, s));
  r.certificates.push_back(edge_conn_equality(gr, s));
  r.certificates.push_back(alpha_ub_theta(gr, s));
  r.certificates.push_back(alpha_ub_sigma(gr, s));
  r.certificates.push_back(hamiltonian_cert_theta(gr, s));
  r.certificates.push_back(hamiltonian_cert_sigma(gr, s));
  r.certificates.push_back(chromatic_lb(gr, s));
  r.certificates.push_back(gamma_lb(gr, s));
  r.certificates.push_back(xi_lb(gr, s));
  r.certificates.push_back(beta_ub(gr, s));
  r.certificates.push_back(pi_lb(gr, s));
  return r;
}

}  // namespace lapcert
