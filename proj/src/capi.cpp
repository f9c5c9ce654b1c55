#include "lapcert.h"

#include <cstring>
#include <new>
#include <string>

#include "lapcert/error.hpp"
#include "lapcert/families.hpp"
#include "lapcert/graph.hpp"
#include "lapcert/graph_io.hpp"
#include "lapcert/scan.hpp"
#include "lapcert/spectral.hpp"

struct lapcert_graph {
  lapcert::Graph g;
};

namespace {

thread_local std::string t_last_error;

lapcert_status to_status(lapcert::ErrorCode code) {
  using lapcert::ErrorCode;
  switch (code) {
    case ErrorCode::parse: return LAPCERT_ERR_PARSE;
    case ErrorCode::param: return LAPCERT_ERR_PARAM;
    case ErrorCode::domain: return LAPCERT_ERR_DOMAIN;
    case ErrorCode::numeric: return LAPCERT_ERR_NUMERIC;
    case ErrorCode::unsupported: return LAPCERT_ERR_UNSUPPORTED;
    case ErrorCode::cap: return LAPCERT_ERR_CAP;
    case ErrorCode::io: return LAPCERT_ERR_IO;
  }
  return LAPCERT_ERR_UNKNOWN;
}

// Runs fn, translating exceptions into status codes + thread-local message.
template <typename Fn>
lapcert_status guarded(Fn&& fn) {
  try {
    fn();
    t_last_error.clear();
    return LAPCERT_OK;
  } catch (const lapcert::Error& e) {
    t_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return LAPCERT_ERR_UNKNOWN;
  } catch (...) {
    t_last_error = "unknown error";
    return LAPCERT_ERR_UNKNOWN;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

lapcert_status invalid_arg(const char* message) {
  t_last_error = message;
  return LAPCERT_ERR_PARAM;
}

}  // namespace

extern "C" {

const char* lapcert_version(void) { return "1.0.0"; }

const char* lapcert_last_error(void) { return t_last_error.c_str(); }

lapcert_status lapcert_graph_from_graph6(const char* text, int strict,
                                         lapcert_graph** out) {
  if (!text || !out) return invalid_arg("null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new lapcert_graph{lapcert::parse_graph6(text, strict != 0)};
  });
}

lapcert_status lapcert_graph_from_edge_list(const char* text, lapcert_graph** out) {
  if (!text || !out) return invalid_arg("null argument");
  *out = nullptr;
  return guarded([&] { *out = new lapcert_graph{lapcert::parse_edge_list(text)}; });
}

lapcert_status lapcert_graph_from_family(const char* spec, lapcert_graph** out) {
  if (!spec || !out) return invalid_arg("null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new lapcert_graph{
        lapcert::generate_family(lapcert::parse_family_spec(spec))};
  });
}

lapcert_status lapcert_graph_from_edges(int32_t n, const int32_t* endpoints,
                                        size_t edge_count, lapcert_graph** out) {
  if (!out || (edge_count > 0 && !endpoints)) return invalid_arg("null argument");
  *out = nullptr;
  return guarded([&] {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i)
      edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
    *out = new lapcert_graph{lapcert::Graph(n, edges)};
  });
}

void lapcert_graph_free(lapcert_graph* g) { delete g; }

int32_t lapcert_graph_vertex_count(const lapcert_graph* g) {
  return g ? g->g.vertex_count() : 0;
}

int64_t lapcert_graph_edge_count(const lapcert_graph* g) {
  return g ? g->g.edge_count() : 0;
}

lapcert_status lapcert_graph_to_graph6(const lapcert_graph* g, char** out) {
  if (!g || !out) return invalid_arg("null argument");
  *out = nullptr;
  return guarded([&] { *out = copy_string(lapcert::write_graph6(g->g)); });
}

lapcert_status lapcert_graph_to_edge_list(const lapcert_graph* g, char** out) {
  if (!g || !out) return invalid_arg("null argument");
  *out = nullptr;
  return guarded([&] { *out = copy_string(lapcert::write_edge_list(g->g)); });
}

void lapcert_string_free(char* s) { delete[] s; }

lapcert_status lapcert_spectrum(const lapcert_graph* g, double* values) {
  if (!g || !values) return invalid_arg("null argument");
  return guarded([&] {
    lapcert::Spectrum s = lapcert::spectrum_of(g->g);
    for (std::size_t i = 0; i < s.values.size(); ++i) values[i] = s.values[i];
  });
}

lapcert_status lapcert_scan_json(const char* config_json, char** report_out,
                                 int64_t* violations_out) {
  if (!config_json || !report_out) return invalid_arg("null argument");
  *report_out = nullptr;
  if (violations_out) *violations_out = 0;
  return guarded([&] {
    lapcert::ScanConfig config = lapcert::parse_scan_config_json(config_json);
    lapcert::ScanReport report = lapcert::scan(config);
    *report_out = copy_string(lapcert::report_render(report, config.format));
    if (violations_out) *violations_out = report.violation_count;
  });
}

}  // extern "C"
