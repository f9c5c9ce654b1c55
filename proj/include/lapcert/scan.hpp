#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lapcert/certificates.hpp"
#include "lapcert/graph.hpp"
#include "lapcert/oracles.hpp"
#include "lapcert/spectral.hpp"

namespace lapcert {

// A corpus source: one graph-per-line graph6 file, a single edge-list file,
// or a family spec whose integer parameters may carry one "a..b" range.
struct ScanConfig {
  std::vector<std::string> sources;
  int subset_samples = 200;
  std::uint64_t seed = 0;
  OracleCaps caps;
  std::string format = "json";  // json | csv
  std::string out;              // empty: render only, no file written
  double tolerance = 1e-9;
  double theta_scale = 1.0;     // negative-control hook; 1.0 in normal runs
  bool strict_graph6 = false;   // lenient by default: real corpora have sloppy padding
  int workers = 0;              // 0: LAPCERT_WORKERS env var, else 1
};

enum class Verdict { confirmed, vacuous, inapplicable, skipped, violation };
inline constexpr int kVerdictCount = 5;
const char* verdict_name(Verdict v);

struct CertReport {
  Certificate cert;
  Verdict verdict = Verdict::skipped;
  std::optional<double> oracle_value;
  std::optional<double> ratio;  // certificate value / oracle value
  bool equality = false;        // ratio within 1e-6 of 1
  std::string note;
};

struct ReportRow {
  std::string graph_id;
  int n = 0;
  long long m = 0;
  SpectralSummary summary;
  ExactInvariants exact;
  std::vector<CertReport> certs;
};

struct ScanReport {
  ScanConfig config;  // echoed into the report; size caps and seed affect content
  std::vector<ReportRow> rows;
  std::array<std::array<long long, kVerdictCount>, kCertIdCount> verdict_counts{};
  long long violation_count = 0;
  std::uint64_t content_hash = 0;
};

// Judge one certificate against the exact invariants. Bounds compare in
// their forbidden direction only; sufficient conditions that did not fire
// are vacuous; missing oracle values yield skipped. Heuristic (non-exact)
// forwarding values can only falsify a lower bound, never confirm it.
CertReport compare_certificate(const Certificate& cert, const ExactInvariants& exact,
                               double tolerance);

// Expand one source string into (graph id, graph) pairs.
std::vector<std::pair<std::string, Graph>> load_source(const std::string& source,
                                                       bool strict_graph6);

// Run the full pipeline over every source graph. Rows are sorted by graph
// id regardless of worker completion order; violations never abort the
// scan. Writes the rendered report to config.out when set.
ScanReport scan(const ScanConfig& config);

// json: versioned schema, stable field order, %.12g floats, content hash
// excluding the timestamp. csv: one line per graph x certificate.
std::string report_render(const ScanReport& report, const std::string& format);

// Hash of the canonical report body (rows + summary, no timestamp).
std::uint64_t report_content_hash(const ScanReport& report);

std::uint64_t fnv1a64(const std::string& bytes);

// Config as JSON text for the shared-library entry point; unknown keys are
// rejected. Keys: sources (required), samples, seed, tolerance, theta_scale,
// format, out, workers, strict_graph6, caps{...}.
ScanConfig parse_scan_config_json(const std::string& text);

}  // namespace lapcert
