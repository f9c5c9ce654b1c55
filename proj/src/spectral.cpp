#include "lapcert/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lapcert/error.hpp"

namespace lapcert {

SymMatrix laplacian(const Graph& g) {
  int n = g.vertex_count();
  SymMatrix m{n, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0)};
  for (int v = 0; v < n; ++v) m.at(v, v) = g.degree(v);
  for (auto [u, v] : g.edges()) {
    m.at(u, v) = -1.0;
    m.at(v, u) = -1.0;
  }
  return m;
}

namespace {

double frobenius(const SymMatrix& m) {
  double s = 0.0;
  for (double x : m.a) s += x * x;
  return std::sqrt(s);
}

double off_diagonal_norm(const SymMatrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j) s += 2.0 * m.at(i, j) * m.at(i, j);
  return std::sqrt(s);
}

}  // namespace

Spectrum eigenvalues_symmetric(const SymMatrix& m, double rel_tol) {
  const int n = m.n;
  double norm = frobenius(m);
  double sym_slack = std::max(rel_tol * norm, 1e-14 * norm);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(m.at(i, j) - m.at(j, i)) > sym_slack)
        throw Error(ErrorCode::domain, "eigenvalues_symmetric: matrix is not symmetric at (" +
                                           std::to_string(i) + "," + std::to_string(j) + ")");

  SymMatrix a = m;
  Spectrum out;
  out.tol = rel_tol * norm;
  const double stop = rel_tol * norm;
  const int max_sweeps = 100;

  if (norm > 0.0) {
    int sweep = 0;
    while (off_diagonal_norm(a) > stop) {
      if (++sweep > max_sweeps)
        throw Error(ErrorCode::numeric,
                    "Jacobi did not converge in " + std::to_string(max_sweeps) +
                        " sweeps; off-diagonal residual " + std::to_string(off_diagonal_norm(a)));
      for (int p = 0; p < n - 1; ++p)
        for (int q = p + 1; q < n; ++q) {
          double apq = a.at(p, q);
          if (apq == 0.0) continue;
          // Stable rotation: t = sign(tau)/(|tau| + sqrt(1+tau^2)).
          double tau = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
          double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
          double c = 1.0 / std::sqrt(1.0 + t * t);
          double s = t * c;
          double app = a.at(p, p), aqq = a.at(q, q);
          a.at(p, p) = app - t * apq;
          a.at(q, q) = aqq + t * apq;
          a.at(p, q) = a.at(q, p) = 0.0;
          for (int k = 0; k < n; ++k) {
            if (k == p || k == q) continue;
            double akp = a.at(k, p), akq = a.at(k, q);
            a.at(k, p) = a.at(p, k) = c * akp - s * akq;
            a.at(k, q) = a.at(q, k) = s * akp + c * akq;
          }
        }
    }
  }
  out.values.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.values[static_cast<std::size_t>(i)] = a.at(i, i);
  std::sort(out.values.begin(), out.values.end());
  return out;
}

Spectrum spectrum_of(const Graph& g, double rel_tol) {
  return eigenvalues_symmetric(laplacian(g), rel_tol);
}

SpectralSummary spectral_summary(const Graph& g, const Spectrum& s) {
  int n = g.vertex_count();
  if (n == 0) throw Error(ErrorCode::domain, "spectral_summary needs n >= 1");
  SpectralSummary sum;
  sum.n = n;
  sum.m = g.edge_count();
  sum.average_degree = static_cast<double>(g.volume()) / n;
  sum.min_degree = g.min_degree();
  sum.max_degree = g.max_degree();
  sum.sigma1 = n >= 2 ? s.values[1] : 0.0;
  sum.sigma_max = s.values.back();
  sum.theta = 0.0;
  for (int i = 1; i < n; ++i)
    sum.theta = std::max(sum.theta, std::abs(sum.average_degree - s.values[static_cast<std::size_t>(i)]));
  sum.connected = g.is_connected();
  sum.regular = g.is_regular();
  sum.complete = g.is_complete();
  sum.tol = s.tol;
  return sum;
}

Spectrum closed_form_spectrum(const FamilySpec& spec) {
  constexpr double pi = 3.14159265358979323846;
  Spectrum out;
  switch (spec.family) {
    case Family::path: {
      long long n = spec.int_params.at(0);
      for (long long k = 0; k < n; ++k) {
        double s = std::sin(static_cast<double>(k) * pi / (2.0 * static_cast<double>(n)));
        out.values.push_back(4.0 * s * s);
      }
      break;
    }
    case Family::cycle: {
      long long n = spec.int_params.at(0);
      for (long long k = 0; k < n; ++k)
        out.values.push_back(2.0 - 2.0 * std::cos(2.0 * pi * static_cast<double>(k) /
                                                  static_cast<double>(n)));
      break;
    }
    case Family::complete: {
      long long n = spec.int_params.at(0);
      out.values.assign(static_cast<std::size_t>(n), static_cast<double>(n));
      out.values[0] = 0.0;
      break;
    }
    case Family::complete_multipartite: {
      long long s = spec.int_params.at(0);
      long long r = static_cast<long long>(spec.int_params.size());
      for (auto part : spec.int_params)
        if (part != s)
          throw Error(ErrorCode::domain,
                      "closed_form_spectrum supports only equal multipartite parts");
      out.values.push_back(0.0);
      out.values.insert(out.values.end(), static_cast<std::size_t>(r * (s - 1)),
                        static_cast<double>(r * s - s));
      out.values.insert(out.values.end(), static_cast<std::size_t>(r - 1),
                        static_cast<double>(r * s));
      break;
    }
    default:
      throw Error(ErrorCode::domain, std::string("no closed-form spectrum for family ") +
                                         family_name(spec.family));
  }
  std::sort(out.values.begin(), out.values.end());
  out.tol = 0.0;
  return out;
}

}  // namespace lapcert
