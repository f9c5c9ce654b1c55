// Exercises the shared-library C interface the way an external caller
// would: only lapcert.h, no internal headers.
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

#include "lapcert.h"

static int g_failures = 0;

#define CHECK(cond)                                                        \
  do {                                                                     \
    if (!(cond)) {                                                         \
      std::fprintf(stderr, "FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++g_failures;                                                        \
    }                                                                      \
  } while (0)

static void test_version_and_errors() {
  CHECK(lapcert_version() != nullptr);
  CHECK(std::strlen(lapcert_version()) > 0);

  lapcert_graph* g = nullptr;
  lapcert_status st = lapcert_graph_from_graph6("C\x07", 0, &g);
  CHECK(st == LAPCERT_ERR_PARSE);
  CHECK(g == nullptr);
  CHECK(std::strlen(lapcert_last_error()) > 0);

  // a successful call clears the message
  st = lapcert_graph_from_graph6("Ch", 0, &g);
  CHECK(st == LAPCERT_OK);
  CHECK(std::strlen(lapcert_last_error()) == 0);
  lapcert_graph_free(g);

  CHECK(lapcert_graph_from_graph6(nullptr, 0, &g) == LAPCERT_ERR_PARAM);
  CHECK(lapcert_graph_from_graph6("Ch", 0, nullptr) == LAPCERT_ERR_PARAM);
  CHECK(lapcert_spectrum(nullptr, nullptr) == LAPCERT_ERR_PARAM);
}

static void test_graph_round_trips() {
  lapcert_graph* g = nullptr;
  CHECK(lapcert_graph_from_graph6("Ch", 0, &g) == LAPCERT_OK);
  CHECK(lapcert_graph_vertex_count(g) == 4);
  CHECK(lapcert_graph_edge_count(g) == 3);

  char* text = nullptr;
  CHECK(lapcert_graph_to_graph6(g, &text) == LAPCERT_OK);
  CHECK(text != nullptr && std::string(text) == "Ch");
  lapcert_string_free(text);

  CHECK(lapcert_graph_to_edge_list(g, &text) == LAPCERT_OK);
  lapcert_graph* back = nullptr;
  CHECK(lapcert_graph_from_edge_list(text, &back) == LAPCERT_OK);
  CHECK(lapcert_graph_vertex_count(back) == 4);
  CHECK(lapcert_graph_edge_count(back) == 3);
  lapcert_string_free(text);
  lapcert_graph_free(back);
  lapcert_graph_free(g);

  // strict padding rejection is caller-selectable
  lapcert_graph* sloppy = nullptr;
  CHECK(lapcert_graph_from_graph6("A`", 0, &sloppy) == LAPCERT_OK);
  CHECK(lapcert_graph_vertex_count(sloppy) == 2);
  lapcert_graph_free(sloppy);
  sloppy = nullptr;
  CHECK(lapcert_graph_from_graph6("A`", 1, &sloppy) == LAPCERT_ERR_PARSE);
  CHECK(sloppy == nullptr);
}

static void test_family_and_edges() {
  lapcert_graph* g = nullptr;
  CHECK(lapcert_graph_from_family("petersen", &g) == LAPCERT_OK);
  CHECK(lapcert_graph_vertex_count(g) == 10);
  CHECK(lapcert_graph_edge_count(g) == 15);
  lapcert_graph_free(g);

  CHECK(lapcert_graph_from_family("triangle:3", &g) == LAPCERT_ERR_PARAM);
  CHECK(lapcert_graph_from_family("paley:15", &g) == LAPCERT_ERR_PARAM);

  const int32_t endpoints[] = {0, 1, 1, 2, 2, 0};
  CHECK(lapcert_graph_from_edges(3, endpoints, 3, &g) == LAPCERT_OK);
  CHECK(lapcert_graph_vertex_count(g) == 3);
  CHECK(lapcert_graph_edge_count(g) == 3);
  lapcert_graph_free(g);

  const int32_t loop[] = {0, 0};
  CHECK(lapcert_graph_from_edges(2, loop, 1, &g) == LAPCERT_ERR_DOMAIN);
  const int32_t oob[] = {0, 9};
  CHECK(lapcert_graph_from_edges(2, oob, 1, &g) == LAPCERT_ERR_PARAM);
}

static void test_spectrum() {
  lapcert_graph* g = nullptr;
  CHECK(lapcert_graph_from_family("complete:5", &g) == LAPCERT_OK);
  double values[5] = {0};
  CHECK(lapcert_spectrum(g, values) == LAPCERT_OK);
  CHECK(std::fabs(values[0] - 0.0) < 1e-9);
  for (int i = 1; i < 5; ++i) CHECK(std::fabs(values[i] - 5.0) < 1e-9);
  lapcert_graph_free(g);

  CHECK(lapcert_graph_from_family("path:4", &g) == LAPCERT_OK);
  double p4[4] = {0};
  CHECK(lapcert_spectrum(g, p4) == LAPCERT_OK);
  const double expect[4] = {0.0, 2.0 - std::sqrt(2.0), 2.0, 2.0 + std::sqrt(2.0)};
  for (int i = 0; i < 4; ++i) CHECK(std::fabs(p4[i] - expect[i]) < 1e-9);
  lapcert_graph_free(g);
}

static void test_scan() {
  char* report = nullptr;
  int64_t violations = -1;
  lapcert_status st = lapcert_scan_json(
      "{\"sources\": [\"path:4..6\", \"complete:4\"], \"samples\": 25, \"seed\": 5}",
      &report, &violations);
  CHECK(st == LAPCERT_OK);
  CHECK(violations == 0);
  CHECK(report != nullptr);
  std::string text = report ? report : "";
  CHECK(text.find("\"schema_version\": 1") != std::string::npos);
  CHECK(text.find("\"violation_count\": 0") != std::string::npos);
  CHECK(text.find("\"id\": \"complete:4\"") != std::string::npos);
  CHECK(text.find("\"content_hash\": \"fnv1a64:") != std::string::npos);
  lapcert_string_free(report);

  // a corrupted theta must be reported as violations, not as a failure
  report = nullptr;
  violations = 0;
  st = lapcert_scan_json(
      "{\"sources\": [\"complete:4\"], \"samples\": 10, \"theta_scale\": 0.5}", &report,
      &violations);
  CHECK(st == LAPCERT_OK);
  CHECK(violations >= 1);
  lapcert_string_free(report);

  report = nullptr;
  st = lapcert_scan_json("{\"sources\": [\"path:4\"], \"typo\": true}", &report, nullptr);
  CHECK(st == LAPCERT_ERR_PARAM);
  CHECK(report == nullptr);
  CHECK(std::strstr(lapcert_last_error(), "typo") != nullptr);

  CHECK(lapcert_scan_json("not json", &report, nullptr) == LAPCERT_ERR_PARSE);
  CHECK(lapcert_scan_json(nullptr, &report, nullptr) == LAPCERT_ERR_PARAM);
}

int main() {
  test_version_and_errors();
  test_graph_round_trips();
  test_family_and_edges();
  test_spectrum();
  test_scan();
  if (g_failures == 0) {
    std::printf("test_capi: all checks passed\n");
    return 0;
  }
  std::fprintf(stderr, "test_capi: %d check(s) failed\n", g_failures);
  return 1;
}
