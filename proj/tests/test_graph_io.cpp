#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "lapcert/error.hpp"
#include "lapcert/families.hpp"
#include "lapcert/graph_io.hpp"
#include "lapcert/rng.hpp"

using namespace lapcert;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::parse;
}

}  // namespace

TEST_CASE("graph6 decodes the hand-verified strings") {
  Graph k4 = parse_graph6("C~");
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);
  CHECK(k4.is_complete());

  Graph p4 = parse_graph6("Ch");
  CHECK(p4.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

  Graph c5 = parse_graph6("Dhc");
  CHECK(c5.vertex_count() == 5);
  CHECK(c5.edge_count() == 5);
  CHECK(c5.is_regular());
  CHECK(c5.is_connected());

  Graph empty = parse_graph6("C?");
  CHECK(empty.vertex_count() == 4);
  CHECK(empty.edge_count() == 0);

  CHECK(parse_graph6(">>graph6<<Ch").edges() == p4.edges());
  CHECK(parse_graph6("Ch\n").edges() == p4.edges());
}

TEST_CASE("graph6 encodes canonically") {
  CHECK(write_graph6(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == "C~");
  CHECK(write_graph6(Graph(4, {{0, 1}, {1, 2}, {2, 3}})) == "Ch");
  CHECK(write_graph6(Graph(4, {})) == "C?");
  CHECK(write_graph6(Graph(0, {})) == "?");
}

TEST_CASE("graph6 round-trips every 4-vertex isomorphism representative") {
  for (const char* s : {"C?", "C_", "Co", "Cs", "Cw", "CK", "Ck", "C{", "C]", "C}", "C~"})
    CHECK(write_graph6(parse_graph6(s)) == s);
  CHECK(write_graph6(parse_graph6("IheA@GUAo")) == "IheA@GUAo");  // Petersen labeling
}

TEST_CASE("graph6 long size form at the n=63 boundary") {
  Graph empty63(63, {});
  std::string s = write_graph6(empty63);
  CHECK(s.substr(0, 4) == "~??~");
  CHECK(parse_graph6(s).vertex_count() == 63);

  Graph p62 = generate_family(parse_family_spec("path:62"));
  Graph p63 = generate_family(parse_family_spec("path:63"));
  CHECK(write_graph6(p62)[0] != '~');
  CHECK(write_graph6(p63)[0] == '~');
  CHECK(parse_graph6(write_graph6(p63)).edges() == p63.edges());
}

TEST_CASE("graph6 round-trips random graphs") {
  Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    int n = static_cast<int>(rng.next_below(80));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.next_bernoulli(0.3)) edges.emplace_back(u, v);
    Graph g(n, edges);
    Graph back = parse_graph6(write_graph6(g));
    CHECK(back == g);
  }
}

TEST_CASE("graph6 parse failures") {
  CHECK(code_of([] { parse_graph6(""); }) == ErrorCode::parse);
  CHECK(code_of([] { parse_graph6(">>graph6<<"); }) == ErrorCode::parse);
  CHECK(code_of([] { parse_graph6("C"); }) == ErrorCode::parse);      // truncated payload
  CHECK(code_of([] { parse_graph6("Chh"); }) == ErrorCode::parse);    // extra payload
  CHECK(code_of([] { parse_graph6("C\x07"); }) == ErrorCode::parse);  // byte out of range
  CHECK(code_of([] { parse_graph6("~~????"); }) == ErrorCode::unsupported);
  CHECK(code_of([] { parse_graph6("~?"); }) == ErrorCode::parse);  // truncated size field
  try {
    parse_graph6("C\x07");
  } catch (const Error& e) {
    CHECK(e.has_offset());
    CHECK(e.offset() == 1);
  }
}

TEST_CASE("strict mode rejects nonzero padding") {
  // n=2 uses one adjacency bit; "A`" sets a padding bit below it.
  Graph lenient = parse_graph6("A`");
  CHECK(lenient.edge_count() == 1);
  CHECK(code_of([] { parse_graph6("A`", true); }) == ErrorCode::parse);
  CHECK(parse_graph6("A_", true).edge_count() == 1);  // clean padding passes
}

TEST_CASE("edge list parses with comments and blank lines") {
  Graph g = parse_edge_list("# sample\n\n4 3\n0 1\n# middle\n1 2\n2 3\n");
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
  Graph empty = parse_edge_list("0 0\n");
  CHECK(empty.vertex_count() == 0);
}

TEST_CASE("edge list round-trips") {
  Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  CHECK(parse_edge_list(write_edge_list(g)) == g);
  CHECK(write_edge_list(Graph(2, {})) == "2 0\n");
}

TEST_CASE("edge list failures carry codes") {
  CHECK(code_of([] { parse_edge_list(""); }) == ErrorCode::parse);
  CHECK(code_of([] { parse_edge_list("x y\n"); }) == ErrorCode::parse);
  CHECK(code_of([] { parse_edge_list("3 2\n0 1\n"); }) == ErrorCode::parse);  // short
  CHECK(code_of([] { parse_edge_list("3 1\n0 1\n1 2\n"); }) == ErrorCode::parse);  // long
  CHECK(code_of([] { parse_edge_list("3 1\n0 3\n"); }) == ErrorCode::param);
  CHECK(code_of([] { parse_edge_list("3 1\n1 1\n"); }) == ErrorCode::domain);
  CHECK(code_of([] { parse_edge_list("3 2\n0 1\n1 0\n"); }) == ErrorCode::param);
}
