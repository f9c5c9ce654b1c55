#pragma once

#include <vector>

#include "lapcert/families.hpp"
#include "lapcert/graph.hpp"

namespace lapcert {

// Dense symmetric matrix in row-major order.
struct SymMatrix {
  int n = 0;
  std::vector<double> a;  // n*n entries

  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

SymMatrix laplacian(const Graph& g);

struct Spectrum {
  std::vector<double> values;  // ascending
  double tol = 0.0;            // absolute tolerance the values were computed to
};

// Cyclic Jacobi. Stops once the off-diagonal Frobenius norm drops below
// rel_tol * ||m||_F; each eigenvalue is then within ~10*rel_tol*||m|| of
// exact. Throws Error(domain) if m is not symmetric and Error(numeric) if
// the sweep cap is hit before convergence.
Spectrum eigenvalues_symmetric(const SymMatrix& m, double rel_tol = 1e-12);

Spectrum spectrum_of(const Graph& g, double rel_tol = 1e-12);

struct SpectralSummary {
  int n = 0;
  long long m = 0;
  double average_degree = 0.0;  // vol(G)/n
  int min_degree = 0;
  int max_degree = 0;
  double sigma1 = 0.0;     // second-smallest eigenvalue (algebraic connectivity)
  double sigma_max = 0.0;  // largest eigenvalue
  double theta = 0.0;      // max over i>=1 of |average_degree - sigma_i|
  bool connected = false;
  bool regular = false;
  bool complete = false;
  double tol = 0.0;
};

// Throws Error(domain) for n = 0. theta is the exact maximum deviation over
// indices 1..n-1, the tightest value every certificate here is monotone in.
SpectralSummary spectral_summary(const Graph& g, const Spectrum& s);

// Analytic spectra for the families with known closed forms:
//   path n       -> { 4 sin^2(k pi / 2n) }
//   cycle n      -> { 2 - 2 cos(2 pi k / n) }
//   complete n   -> { 0, n^(n-1) }
//   K_{s,..,s}   -> { 0, (rs-s)^(r(s-1)), (rs)^(r-1) }   (r equal parts)
// Throws Error(domain) for other families or unequal parts.
Spectrum closed_form_spectrum(const FamilySpec& spec);

}  // namespace lapcert
