#include "lapcert/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "lapcert/error.hpp"
#include "lapcert/graph_io.hpp"
#include "lapcert/rng.hpp"

namespace lapcert {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::confirmed: return "confirmed";
    case Verdict::vacuous: return "vacuous";
    case Verdict::inapplicable: return "inapplicable";
    case Verdict::skipped: return "skipped";
    case Verdict::violation: return "VIOLATION";
  }
  return "?";
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// ------------------------------------------------------------- judging

namespace {

enum class Direction { lower, upper, equal, check, sufficient };

std::optional<double> to_double(const std::optional<int>& v) {
  if (!v) return std::nullopt;
  return static_cast<double>(*v);
}

std::optional<double> to_double(const std::optional<long long>& v) {
  if (!v) return std::nullopt;
  return static_cast<double>(*v);
}

}  // namespace

CertReport compare_certificate(const Certificate& cert, const ExactInvariants& exact,
                               double tolerance) {
  CertReport rep;
  rep.cert = cert;
  if (!cert.applicable) {
    rep.verdict = Verdict::inapplicable;
    return rep;
  }

  Direction dir = Direction::check;
  std::optional<double> oracle;
  bool heuristic = false;  // oracle is only a best-found upper bound
  switch (cert.id) {
    case CertId::discrepancy_bound_check:
    case CertId::pair_deviation_check:
      dir = Direction::check;
      break;
    case CertId::kappa_lb_spectral:
    case CertId::kappa_lb_fiedler:
    case CertId::kappa_lb_regular:
      dir = Direction::lower;
      oracle = to_double(exact.kappa);
      break;
    case CertId::edge_conn_equality:
      dir = Direction::equal;
      oracle = to_double(exact.kappa_prime);
      break;
    case CertId::alpha_ub_theta:
    case CertId::alpha_ub_sigma:
      dir = Direction::upper;
      oracle = to_double(exact.alpha);
      break;
    case CertId::hamiltonian_cert_theta:
    case CertId::hamiltonian_cert_sigma:
      dir = Direction::sufficient;
      break;
    case CertId::chromatic_lb:
      dir = Direction::lower;
      oracle = to_double(exact.chi);
      break;
    case CertId::gamma_lb:
      dir = Direction::lower;
      oracle = exact.gamma;
      break;
    case CertId::xi_lb:
      dir = Direction::lower;
      oracle = to_double(exact.xi);
      heuristic = exact.xi.has_value() && !exact.xi_exact;
      break;
    case CertId::beta_ub:
      dir = Direction::upper;
      oracle = exact.beta;
      break;
    case CertId::pi_lb:
      dir = Direction::lower;
      oracle = to_double(exact.pi);
      heuristic = exact.pi.has_value() && !exact.pi_exact;
      break;
  }
  rep.oracle_value = oracle;

  if (dir == Direction::check) {
    rep.verdict = (cert.truth && *cert.truth) ? Verdict::confirmed : Verdict::violation;
    return rep;
  }
  if (dir == Direction::sufficient) {
    if (!cert.truth || !*cert.truth) {
      rep.verdict = Verdict::vacuous;
      rep.note = "condition did not fire";
      return rep;
    }
    switch (exact.hamiltonian) {
      case HamStatus::yes: rep.verdict = Verdict::confirmed; break;
      case HamStatus::no: rep.verdict = Verdict::violation; break;
      case HamStatus::unknown:
        rep.verdict = Verdict::skipped;
        rep.note = "hamiltonicity undecided within budget";
        break;
    }
    return rep;
  }

  if (!oracle) {
    rep.verdict = Verdict::skipped;
    rep.note = "oracle capped";
    return rep;
  }
  const double v = cert.value.value_or(0.0);
  bool ok = false;
  switch (dir) {
    case Direction::lower:
      if (heuristic) {
        // Only the falsifying direction is conclusive against an upper bound.
        if (v > *oracle + tolerance) {
          rep.verdict = Verdict::violation;
          rep.note = "exceeds an achieved routing";
        } else {
          rep.verdict = Verdict::skipped;
          rep.note = "oracle heuristic; bound not conclusively confirmed";
        }
        return rep;
      }
      ok = std::isinf(*oracle) || v <= *oracle + tolerance;
      break;
    case Direction::upper:
      ok = v >= *oracle - tolerance;
      break;
    case Direction::equal:
      ok = std::fabs(v - *oracle) <= tolerance;
      break;
    default:
      break;
  }
  if (!ok) {
    rep.verdict = Verdict::violation;
  } else {
    rep.verdict = cert.vacuous ? Verdict::vacuous : Verdict::confirmed;
  }
  if (cert.value && std::isfinite(*oracle) && std::fabs(*oracle) > 0.0) {
    rep.ratio = *cert.value / *oracle;
    rep.equality = std::fabs(*rep.ratio - 1.0) <= 1e-6;
  }
  return rep;
}

// ------------------------------------------------------------- sources

namespace {

// "4..12" -> [4, 12]; anything else declines.
bool parse_range_field(const std::string& field, long long& lo, long long& hi) {
  auto dots = field.find("..");
  if (dots == std::string::npos) return false;
  std::string a = field.substr(0, dots), b = field.substr(dots + 2);
  if (a.empty() || b.empty()) return false;
  for (char c : a + b)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  lo = std::stoll(a);
  hi = std::stoll(b);
  return true;
}

// Expand one "a..b" integer-parameter range into concrete spec texts.
std::vector<std::string> expand_family_ranges(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) return {text};
  std::string head = text.substr(0, colon + 1);
  std::string params = text.substr(colon + 1);
  std::vector<std::string> fields;
  std::stringstream ss(params);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  int range_at = -1;
  long long lo = 0, hi = 0;
  for (int i = 0; i < static_cast<int>(fields.size()); ++i) {
    long long a, b;
    if (parse_range_field(fields[i], a, b)) {
      if (range_at >= 0)
        throw Error(ErrorCode::param, "at most one parameter range per source: " + text);
      range_at = i;
      lo = a;
      hi = b;
    }
  }
  if (range_at < 0) return {text};
  if (lo > hi)
    throw Error(ErrorCode::param, "empty parameter range in source: " + text);
  std::vector<std::string> out;
  for (long long v = lo; v <= hi; ++v) {
    std::string inst = head;
    for (int i = 0; i < static_cast<int>(fields.size()); ++i) {
      if (i) inst += ',';
      inst += (i == range_at) ? std::to_string(v) : fields[i];
    }
    out.push_back(inst);
  }
  return out;
}

bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool sniff_graph6(const std::string& content) {
  std::stringstream ss(content);
  std::string line;
  while (std::getline(ss, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind(">>graph6<<", 0) == 0) return true;
    // An edge list opens with "n m": two decimal tokens.
    std::stringstream ls(line);
    long long a, b;
    std::string extra;
    if (ls >> a >> b && !(ls >> extra)) return false;
    return true;
  }
  return true;
}

}  // namespace

std::vector<std::pair<std::string, Graph>> load_source(const std::string& source,
                                                       bool strict_graph6) {
  std::vector<std::pair<std::string, Graph>> out;
  if (looks_like_family_spec(source)) {
    for (const std::string& inst : expand_family_ranges(source)) {
      FamilySpec spec = parse_family_spec(inst);
      out.emplace_back(spec.to_string(), generate_family(spec));
    }
    return out;
  }
  std::ifstream in(source, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open source: " + source);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  bool g6 = has_suffix(source, ".g6") || has_suffix(source, ".graph6");
  if (!g6 && !(has_suffix(source, ".el") || has_suffix(source, ".edges") ||
               has_suffix(source, ".txt")))
    g6 = sniff_graph6(content);
  if (g6) {
    std::stringstream ss(content);
    std::string line;
    int line_no = 0, index = 0;
    while (std::getline(ss, line)) {
      ++line_no;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      if (line == ">>graph6<<") continue;  // bare header; an inline payload still parses below
      try {
        Graph g = parse_graph6(line, strict_graph6);
        out.emplace_back(source + "#" + std::to_string(index++), std::move(g));
      } catch (const Error& e) {
        throw Error(e.code(), source + ":" + std::to_string(line_no) + ": " + e.what());
      }
    }
  } else {
    try {
      out.emplace_back(source, parse_edge_list(content));
    } catch (const Error& e) {
      throw Error(e.code(), source + ": " + e.what());
    }
  }
  return out;
}

// ----------------------------------------------------------------- scan

namespace {

ReportRow evaluate_row(const std::string& id, const Graph& g, const ScanConfig& config) {
  ReportRow row;
  row.graph_id = id;
  row.n = g.vertex_count();
  row.m = g.edge_count();
  EvalOptions opts;
  opts.subset_samples = config.subset_samples;
  opts.seed = mix_seed(config.seed, fnv1a64(id));
  opts.theta_scale = config.theta_scale;
  EvalResult ev = evaluate_all(g, opts);
  row.summary = ev.summary;
  row.exact = compute_exact_invariants(g, config.caps);
  row.certs.reserve(ev.certificates.size());
  for (const Certificate& c : ev.certificates)
    row.certs.push_back(compare_certificate(c, row.exact, config.tolerance));
  return row;
}

int resolve_workers(const ScanConfig& config) {
  int w = config.workers;
  if (w <= 0) {
    if (const char* env = std::getenv("LAPCERT_WORKERS")) w = std::atoi(env);
    if (w <= 0) w = 1;
  }
  return std::clamp(w, 1, 64);
}

}  // namespace

ScanReport scan(const ScanConfig& config) {
  std::vector<std::pair<std::string, Graph>> items;
  for (const std::string& src : config.sources) {
    auto got = load_source(src, config.strict_graph6);
    for (auto& item : got) items.push_back(std::move(item));
  }
  std::map<std::string, int> seen;
  for (auto& [id, g] : items) {
    int k = seen[id]++;
    if (k > 0) id += "#dup" + std::to_string(k);
  }
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<ReportRow> rows(items.size());
  const int workers = std::min(resolve_workers(config),
                               static_cast<int>(std::max<std::size_t>(items.size(), 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i)
      rows[i] = evaluate_row(items[i].first, items[i].second, config);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i; (i = next.fetch_add(1)) < items.size();)
            rows[i] = evaluate_row(items[i].first, items[i].second, config);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  ScanReport report;
  report.config = config;
  report.rows = std::move(rows);
  for (const ReportRow& row : report.rows) {
    for (const CertReport& cr : row.certs) {
      report.verdict_counts[static_cast<int>(cr.cert.id)][static_cast<int>(cr.verdict)]++;
      if (cr.verdict == Verdict::violation) ++report.violation_count;
    }
  }
  report.content_hash = report_content_hash(report);
  if (!report.config.out.empty()) {
    std::ofstream outf(report.config.out, std::ios::binary);
    if (!outf) throw Error(ErrorCode::io, "cannot write report: " + report.config.out);
    outf << report_render(report, report.config.format);
  }
  return report;
}

// ------------------------------------------------------------ rendering

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// JSON has no infinity literal; infinite ratios/invariants render as strings.
std::string json_number(double v) {
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  if (std::isnan(v)) return "\"nan\"";
  return fmt_double(v);
}

std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  out += '"';
  return out;
}

template <typename T>
std::string json_opt(const std::optional<T>& v) {
  if (!v) return "null";
  return json_number(static_cast<double>(*v));
}

const char* json_bool(bool b) { return b ? "true" : "false"; }

const char* ham_name(HamStatus s) {
  switch (s) {
    case HamStatus::yes: return "yes";
    case HamStatus::no: return "no";
    case HamStatus::unknown: return "unknown";
  }
  return "?";
}

void render_summary_json(std::string& out, const SpectralSummary& s, const char* indent) {
  out += indent;
  out += "\"summary\": {\"average_degree\": " + json_number(s.average_degree);
  out += ", \"min_degree\": " + std::to_string(s.min_degree);
  out += ", \"max_degree\": " + std::to_string(s.max_degree);
  out += ", \"sigma1\": " + json_number(s.sigma1);
  out += ", \"sigma_max\": " + json_number(s.sigma_max);
  out += ", \"theta\": " + json_number(s.theta);
  out += std::string(", \"connected\": ") + json_bool(s.connected);
  out += std::string(", \"regular\": ") + json_bool(s.regular);
  out += std::string(", \"complete\": ") + json_bool(s.complete);
  out += ", \"tol\": " + json_number(s.tol) + "}";
}

void render_exact_json(std::string& out, const ExactInvariants& e, const char* indent) {
  out += indent;
  out += "\"exact\": {\"kappa\": " + json_opt(e.kappa);
  out += ", \"kappa_prime\": " + json_opt(e.kappa_prime);
  out += ", \"alpha\": " + json_opt(e.alpha);
  out += ", \"chi\": " + json_opt(e.chi);
  out += std::string(", \"hamiltonian\": \"") + ham_name(e.hamiltonian) + "\"";
  out += ", \"ham_cycle\": [";
  for (std::size_t i = 0; i < e.ham_cycle.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(e.ham_cycle[i]);
  }
  out += "]";
  out += ", \"gamma\": " + json_opt(e.gamma);
  out += ", \"beta\": " + json_opt(e.beta);
  out += ", \"xi\": " + json_opt(e.xi);
  out += ", \"pi\": " + json_opt(e.pi);
  out += std::string(", \"xi_exact\": ") + json_bool(e.xi_exact);
  out += std::string(", \"pi_exact\": ") + json_bool(e.pi_exact);
  out += ", \"capped\": [";
  for (std::size_t i = 0; i < e.capped.size(); ++i) {
    if (i) out += ", ";
    out += json_escape(e.capped[i]);
  }
  out += "]}";
}

void render_cert_json(std::string& out, const CertReport& cr, const char* indent) {
  const Certificate& c = cr.cert;
  out += indent;
  out += "{\"id\": " + json_escape(cert_id_name(c.id));
  out += ", \"kind\": " + json_escape(cert_kind_name(c.kind));
  out += std::string(", \"applicable\": ") + json_bool(c.applicable);
  out += ", \"preconditions\": {";
  for (std::size_t i = 0; i < c.preconditions.size(); ++i) {
    if (i) out += ", ";
    out += json_escape(c.preconditions[i].first) + ": " +
           json_bool(c.preconditions[i].second);
  }
  out += "}";
  out += ", \"value\": " + json_opt(c.value);
  out += ", \"truth\": ";
  out += c.truth ? json_bool(*c.truth) : "null";
  out += std::string(", \"vacuous\": ") + json_bool(c.vacuous);
  out += std::string(", \"verdict\": \"") + verdict_name(cr.verdict) + "\"";
  out += ", \"oracle\": " + json_opt(cr.oracle_value);
  out += ", \"ratio\": " + json_opt(cr.ratio);
  out += std::string(", \"equality\": ") + json_bool(cr.equality);
  out += ", \"details\": {";
  for (std::size_t i = 0; i < c.details.size(); ++i) {
    if (i) out += ", ";
    out += json_escape(c.details[i].first) + ": " + json_number(c.details[i].second);
  }
  out += "}";
  out += ", \"anchor\": " + json_escape(c.anchor);
  out += ", \"note\": " + json_escape(cr.note) + "}";
}

// Everything except the timestamp and the hash itself: the comparison body.
std::string render_json_body(const ScanReport& report) {
  const ScanConfig& cfg = report.config;
  std::string out;
  out.reserve(4096 + report.rows.size() * 4096);
  out += "  \"schema_version\": 1,\n";
  out += "  \"config\": {\"sources\": [";
  for (std::size_t i = 0; i < cfg.sources.size(); ++i) {
    if (i) out += ", ";
    out += json_escape(cfg.sources[i]);
  }
  out += "], \"samples\": " + std::to_string(cfg.subset_samples);
  out += ", \"seed\": " + std::to_string(cfg.seed);
  out += ", \"tolerance\": " + json_number(cfg.tolerance);
  out += ", \"theta_scale\": " + json_number(cfg.theta_scale);
  out += std::string(", \"strict_graph6\": ") + json_bool(cfg.strict_graph6);
  out += ", \"caps\": {\"alpha_max_n\": " + std::to_string(cfg.caps.alpha_max_n);
  out += ", \"chi_max_n\": " + std::to_string(cfg.caps.chi_max_n);
  out += ", \"ham_exact_max_n\": " + std::to_string(cfg.caps.ham_exact_max_n);
  out += ", \"ham_node_budget\": " + std::to_string(cfg.caps.ham_node_budget);
  out += ", \"subset_enum_max_n\": " + std::to_string(cfg.caps.subset_enum_max_n);
  out += ", \"forwarding_max_n\": " + std::to_string(cfg.caps.forwarding_max_n);
  out += ", \"forwarding_max_paths_per_pair\": " +
         std::to_string(cfg.caps.forwarding_max_paths_per_pair);
  out += ", \"forwarding_node_budget\": " + std::to_string(cfg.caps.forwarding_node_budget);
  out += "}},\n";
  out += "  \"graph_count\": " + std::to_string(report.rows.size()) + ",\n";
  out += "  \"violation_count\": " + std::to_string(report.violation_count) + ",\n";
  out += "  \"verdict_counts\": {\n";
  for (int id = 0; id < kCertIdCount; ++id) {
    out += std::string("    \"") + cert_id_name(static_cast<CertId>(id)) + "\": {";
    for (int v = 0; v < kVerdictCount; ++v) {
      if (v) out += ", ";
      out += std::string("\"") + verdict_name(static_cast<Verdict>(v)) +
             "\": " + std::to_string(report.verdict_counts[id][v]);
    }
    out += (id + 1 < kCertIdCount) ? "},\n" : "}\n";
  }
  out += "  },\n";
  out += "  \"graphs\": [";
  for (std::size_t r = 0; r < report.rows.size(); ++r) {
    const ReportRow& row = report.rows[r];
    out += (r == 0) ? "\n" : ",\n";
    out += "    {\"id\": " + json_escape(row.graph_id);
    out += ", \"n\": " + std::to_string(row.n);
    out += ", \"m\": " + std::to_string(row.m) + ",\n";
    render_summary_json(out, row.summary, "     ");
    out += ",\n";
    render_exact_json(out, row.exact, "     ");
    out += ",\n     \"certificates\": [\n";
    for (std::size_t c = 0; c < row.certs.size(); ++c) {
      render_cert_json(out, row.certs[c], "      ");
      out += (c + 1 < row.certs.size()) ? ",\n" : "\n";
    }
    out += "     ]}";
  }
  out += report.rows.empty() ? "]" : "\n  ]";
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += '"';
  return out;
}

std::string render_csv(const ScanReport& report) {
  std::string out =
      "graph_id,n,m,cert_id,kind,applicable,verdict,value,truth,vacuous,oracle,"
      "ratio,equality,preconditions,note\n";
  for (const ReportRow& row : report.rows) {
    for (const CertReport& cr : row.certs) {
      const Certificate& c = cr.cert;
      out += csv_field(row.graph_id) + ',' + std::to_string(row.n) + ',' +
             std::to_string(row.m) + ',';
      out += std::string(cert_id_name(c.id)) + ',' + cert_kind_name(c.kind) + ',';
      out += std::string(c.applicable ? "true" : "false") + ',';
      out += std::string(verdict_name(cr.verdict)) + ',';
      out += (c.value ? fmt_double(*c.value) : std::string()) + ",";
      out += std::string(c.truth ? (*c.truth ? "true" : "false") : "") + ",";
      out += std::string(c.vacuous ? "true" : "false") + ',';
      out += (cr.oracle_value ? fmt_double(*cr.oracle_value) : std::string()) + ",";
      out += (cr.ratio ? fmt_double(*cr.ratio) : std::string()) + ",";
      out += std::string(cr.equality ? "true" : "false") + ',';
      std::string pre;
      for (std::size_t i = 0; i < c.preconditions.size(); ++i) {
        if (i) pre += "; ";
        pre += c.preconditions[i].first;
        pre += c.preconditions[i].second ? "=true" : "=false";
      }
      out += csv_field(pre) + ',' + csv_field(cr.note) + '\n';
    }
  }
  return out;
}

std::string iso8601_utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::uint64_t report_content_hash(const ScanReport& report) {
  return fnv1a64(render_json_body(report));
}

std::string report_render(const ScanReport& report, const std::string& format) {
  if (format == "csv") return render_csv(report);
  if (format != "json")
    throw Error(ErrorCode::param, "unknown report format: " + format);
  std::string body = render_json_body(report);
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx",
                static_cast<unsigned long long>(fnv1a64(body)));
  std::string out = "{\n";
  out += body;
  out += ",\n  \"content_hash\": \"fnv1a64:";
  out += hash;
  out += "\",\n  \"generated_at\": \"" + iso8601_utc_now() + "\"\n}\n";
  return out;
}

// ---------------------------------------------------------- json config

ScanConfig parse_scan_config_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::parse, std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::parse, "config: expected a JSON object");
  ScanConfig cfg;
  static const char* known[] = {"sources",     "samples", "seed",          "tolerance",
                                "theta_scale", "format",  "out",           "workers",
                                "strict_graph6", "caps"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) throw Error(ErrorCode::param, "config: unknown key: " + it.key());
  }
  try {
    if (!j.contains("sources") || !j["sources"].is_array())
      throw Error(ErrorCode::param, "config: sources must be an array of strings");
    for (const auto& s : j["sources"]) {
      if (!s.is_string())
        throw Error(ErrorCode::param, "config: sources must be an array of strings");
      cfg.sources.push_back(s.get<std::string>());
    }
    if (j.contains("samples")) cfg.subset_samples = j["samples"].get<int>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("tolerance")) cfg.tolerance = j["tolerance"].get<double>();
    if (j.contains("theta_scale")) cfg.theta_scale = j["theta_scale"].get<double>();
    if (j.contains("format")) cfg.format = j["format"].get<std::string>();
    if (j.contains("out")) cfg.out = j["out"].get<std::string>();
    if (j.contains("workers")) cfg.workers = j["workers"].get<int>();
    if (j.contains("strict_graph6")) cfg.strict_graph6 = j["strict_graph6"].get<bool>();
    if (j.contains("caps")) {
      const auto& c = j["caps"];
      if (!c.is_object()) throw Error(ErrorCode::param, "config: caps must be an object");
      static const char* cap_keys[] = {"alpha_max_n",
                                       "chi_max_n",
                                       "ham_exact_max_n",
                                       "ham_node_budget",
                                       "subset_enum_max_n",
                                       "forwarding_max_n",
                                       "forwarding_max_paths_per_pair",
                                       "forwarding_node_budget"};
      for (auto it = c.begin(); it != c.end(); ++it) {
        bool ok = false;
        for (const char* k : cap_keys) ok = ok || it.key() == k;
        if (!ok) throw Error(ErrorCode::param, "config: unknown caps key: " + it.key());
      }
      if (c.contains("alpha_max_n")) cfg.caps.alpha_max_n = c["alpha_max_n"].get<int>();
      if (c.contains("chi_max_n")) cfg.caps.chi_max_n = c["chi_max_n"].get<int>();
      if (c.contains("ham_exact_max_n"))
        cfg.caps.ham_exact_max_n = c["ham_exact_max_n"].get<int>();
      if (c.contains("ham_node_budget"))
        cfg.caps.ham_node_budget = c["ham_node_budget"].get<long long>();
      if (c.contains("subset_enum_max_n"))
        cfg.caps.subset_enum_max_n = c["subset_enum_max_n"].get<int>();
      if (c.contains("forwarding_max_n"))
        cfg.caps.forwarding_max_n = c["forwarding_max_n"].get<int>();
      if (c.contains("forwarding_max_paths_per_pair"))
        cfg.caps.forwarding_max_paths_per_pair =
            c["forwarding_max_paths_per_pair"].get<int>();
      if (c.contains("forwarding_node_budget"))
        cfg.caps.forwarding_node_budget = c["forwarding_node_budget"].get<long long>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::param, std::string("config: ") + e.what());
  }
  if (cfg.subset_samples < 0)
    throw Error(ErrorCode::param, "config: samples must be >= 0");
  if (cfg.tolerance < 0) throw Error(ErrorCode::param, "config: tolerance must be >= 0");
  if (cfg.format != "json" && cfg.format != "csv")
    throw Error(ErrorCode::param, "config: format must be json or csv");
  return cfg;
}

}  // namespace lapcert
