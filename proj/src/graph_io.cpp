#include "lapcert/graph_io.hpp"

#include <cctype>
#include <sstream>
#include <string>

#include "lapcert/error.hpp"

namespace lapcert {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr long long kMaxGraph6N = 258047;  // largest four-byte size

int sixbits_at(std::string_view s, std::size_t pos) {
  unsigned char c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126)
    throw Error(ErrorCode::parse,
                "graph6 byte " + std::to_string(int(c)) + " out of range 63..126 at offset " +
                    std::to_string(pos),
                pos);
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text, bool strict) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  if (text.empty()) throw Error(ErrorCode::parse, "empty graph6 string", base);

  auto six = [&](std::size_t i) { return sixbits_at(text, i); };

  long long n;
  std::size_t pos;
  if (six(0) != 63) {
    n = six(0);
    pos = 1;
  } else {
    if (text.size() >= 2 && six(1) == 63)
      throw Error(ErrorCode::unsupported,
                  "graph6 eight-byte size form (n > 258047) is not supported", base);
    if (text.size() < 4) throw Error(ErrorCode::parse, "truncated graph6 size field", base);
    n = (static_cast<long long>(six(1)) << 12) | (six(2) << 6) | six(3);
    pos = 4;
  }

  long long bits = n * (n - 1) / 2;
  std::size_t need = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() < need)
    throw Error(ErrorCode::parse,
                "graph6 payload truncated: need " + std::to_string(need) + " bytes, have " +
                    std::to_string(text.size()),
                base + text.size());
  if (text.size() > need)
    throw Error(ErrorCode::parse,
                "graph6 payload has " + std::to_string(text.size() - need) + " extra byte(s)",
                base + need);

  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  int group = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (bit % 6 == 0) group = six(pos + static_cast<std::size_t>(bit / 6));
      if ((group >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (strict && bits % 6 != 0) {
    int pad = six(text.size() - 1) & ((1 << (6 - bits % 6)) - 1);
    if (pad != 0)
      throw Error(ErrorCode::parse, "nonzero graph6 padding bits (strict mode)",
                  base + text.size() - 1);
  }
  return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  long long n = g.vertex_count();
  if (n > kMaxGraph6N)
    throw Error(ErrorCode::unsupported,
                "graph6 output limited to n <= 258047, got n=" + std::to_string(n));
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int group = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto next_content_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      std::size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos || line[i] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next_content_line()) throw Error(ErrorCode::parse, "edge list: missing \"n m\" line");
  long long n, m;
  {
    std::istringstream hs(line);
    if (!(hs >> n >> m) || n < 0 || m < 0)
      throw Error(ErrorCode::parse, "edge list line " + std::to_string(lineno) +
                                        ": expected \"n m\", got \"" + line + "\"");
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    if (!next_content_line())
      throw Error(ErrorCode::parse, "edge list: expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(k));
    long long u, v;
    std::istringstream es(line);
    if (!(es >> u >> v))
      throw Error(ErrorCode::parse,
                  "edge list line " + std::to_string(lineno) + ": expected \"u v\"");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(ErrorCode::param, "edge list line " + std::to_string(lineno) + ": vertex " +
                                        std::to_string(u < 0 || u >= n ? u : v) +
                                        " out of range for n=" + std::to_string(n));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_content_line())
    throw Error(ErrorCode::parse,
                "edge list line " + std::to_string(lineno) + ": trailing content after " +
                    std::to_string(m) + " edges");
  return Graph(static_cast<int>(n), edges);  // rejects loops and duplicates
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace lapcert
