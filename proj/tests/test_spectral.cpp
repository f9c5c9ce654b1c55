#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "lapcert/error.hpp"
#include "lapcert/families.hpp"
#include "lapcert/rng.hpp"
#include "lapcert/spectral.hpp"

using namespace lapcert;

namespace {

Graph gen(const std::string& text) { return generate_family(parse_family_spec(text)); }

void check_spectrum(const Graph& g, const std::vector<double>& expected, double tol = 1e-9) {
  Spectrum s = spectrum_of(g);
  REQUIRE(s.values.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(std::abs(s.values[i] - expected[i]) <= tol);
}

Graph random_graph(int n, double p, Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_bernoulli(p)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("laplacian layout") {
  SymMatrix l = laplacian(gen("path:3"));
  CHECK(l.n == 3);
  CHECK(l.at(0, 0) == 1.0);
  CHECK(l.at(1, 1) == 2.0);
  CHECK(l.at(0, 1) == -1.0);
  CHECK(l.at(0, 2) == 0.0);
  for (int i = 0; i < 3; ++i) {
    double row = 0;
    for (int j = 0; j < 3; ++j) row += l.at(i, j);
    CHECK(row == 0.0);
  }
}

TEST_CASE("eigensolver basics") {
  SymMatrix diag{3, {5, 0, 0, 0, -1, 0, 0, 0, 2}};
  Spectrum s = eigenvalues_symmetric(diag);
  CHECK(s.values[0] == doctest::Approx(-1).epsilon(1e-12));
  CHECK(s.values[1] == doctest::Approx(2).epsilon(1e-12));
  CHECK(s.values[2] == doctest::Approx(5).epsilon(1e-12));

  SymMatrix asym{2, {0, 1, 2, 0}};
  CHECK_THROWS_AS(eigenvalues_symmetric(asym), Error);

  CHECK(eigenvalues_symmetric(SymMatrix{0, {}}).values.empty());
  CHECK(eigenvalues_symmetric(SymMatrix{1, {7}}).values == std::vector<double>{7});
}

TEST_CASE("known Laplacian spectra") {
  check_spectrum(gen("path:4"), {0.0, 2.0 - std::sqrt(2.0), 2.0, 2.0 + std::sqrt(2.0)});
  double phi_lo = (5.0 - std::sqrt(5.0)) / 2.0, phi_hi = (5.0 + std::sqrt(5.0)) / 2.0;
  check_spectrum(gen("cycle:5"), {0.0, phi_lo, phi_lo, phi_hi, phi_hi});
  check_spectrum(gen("complete:5"), {0.0, 5.0, 5.0, 5.0, 5.0});
  check_spectrum(gen("petersen"), {0, 2, 2, 2, 2, 2, 5, 5, 5, 5});
  check_spectrum(gen("complete_multipartite:2,2,2"), {0, 4, 4, 4, 6, 6});
  check_spectrum(gen("complete_multipartite:3,3"), {0, 3, 3, 3, 3, 6});
  check_spectrum(Graph(1, {}), {0.0});
}

TEST_CASE("closed forms match the solver up to n=64") {
  for (const char* text : {"path:4", "path:17", "path:64", "cycle:3", "cycle:10",
                           "cycle:64", "complete:2", "complete:41", "complete:64",
                           "complete_multipartite:2,2,2", "complete_multipartite:8,8",
                           "complete_multipartite:4,4,4,4"}) {
    FamilySpec spec = parse_family_spec(text);
    Spectrum closed = closed_form_spectrum(spec);
    Spectrum solved = spectrum_of(generate_family(spec));
    REQUIRE(closed.values.size() == solved.values.size());
    for (std::size_t i = 0; i < closed.values.size(); ++i)
      CHECK(std::abs(closed.values[i] - solved.values[i]) <= 1e-9);
  }
}

TEST_CASE("closed forms reject unsupported specs") {
  CHECK_THROWS_AS(closed_form_spectrum(parse_family_spec("gnp:10,0.5,1")), Error);
  CHECK_THROWS_AS(closed_form_spectrum(parse_family_spec("petersen")), Error);
  // unequal part sizes have no single closed form here
  CHECK_THROWS_AS(closed_form_spectrum(parse_family_spec("complete_multipartite:1,2")), Error);
}

TEST_CASE("spectrum invariants on random graphs") {
  Rng rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + static_cast<int>(rng.next_below(14));
    Graph g = random_graph(n, 0.35, rng);
    Spectrum s = spectrum_of(g);
    double trace = 0;
    for (double v : s.values) trace += v;
    CHECK(std::abs(trace - static_cast<double>(g.volume())) <= 1e-8);
    CHECK(s.values.front() >= -1e-9);  // positive semi-definite
    int zeros = 0;
    for (double v : s.values)
      if (std::abs(v) <= 1e-8) ++zeros;
    CHECK(zeros == static_cast<int>(connected_components(g).size()));
    // relabeling leaves the spectrum unchanged
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    rng.shuffle(perm);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    Spectrum t = spectrum_of(Graph(n, edges));
    for (int i = 0; i < n; ++i) CHECK(std::abs(s.values[i] - t.values[i]) <= 1e-9);
  }
}

TEST_CASE("summary fields") {
  Graph p4 = gen("path:4");
  SpectralSummary s = spectral_summary(p4, spectrum_of(p4));
  CHECK(s.n == 4);
  CHECK(s.m == 3);
  CHECK(s.average_degree == doctest::Approx(1.5));
  CHECK(s.min_degree == 1);
  CHECK(s.max_degree == 2);
  CHECK(s.sigma1 == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-10));
  CHECK(s.sigma_max == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-10));
  CHECK(s.theta == doctest::Approx(std::sqrt(2.0) + 0.5).epsilon(1e-10));
  CHECK(s.connected);
  CHECK_FALSE(s.regular);
  CHECK_FALSE(s.complete);

  Graph c5 = gen("cycle:5");
  SpectralSummary sc = spectral_summary(c5, spectrum_of(c5));
  CHECK(sc.theta == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-10));

  // deviation maximum skips sigma_0 = 0
  Graph k4 = gen("complete:4");
  SpectralSummary sk = spectral_summary(k4, spectrum_of(k4));
  CHECK(sk.theta == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(sk.regular);
  CHECK(sk.complete);

  Graph paley13 = gen("paley:13");
  SpectralSummary sp = spectral_summary(paley13, spectrum_of(paley13));
  CHECK(sp.theta == doctest::Approx((1.0 + std::sqrt(13.0)) / 2.0).epsilon(1e-10));

  Graph split(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(spectral_summary(split, spectrum_of(split)).connected);

  CHECK_THROWS_AS(spectral_summary(Graph(0, {}), spectrum_of(Graph(0, {}))), Error);
}

TEST_CASE("path sigma_1 matches the sine closed form") {
  for (int n = 4; n <= 64; ++n) {
    Graph p = gen("path:" + std::to_string(n));
    Spectrum s = spectrum_of(p);
    double expected = 4.0 * std::pow(std::sin(M_PI / (2.0 * n)), 2);
    CHECK(std::abs(s.values[1] - expected) <= 1e-9);
  }
}
