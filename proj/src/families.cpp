#include "lapcert/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

#include "lapcert/error.hpp"
#include "lapcert/rng.hpp"

namespace lapcert {

namespace {

bool is_prime(long long q) {
  if (q < 2) return false;
  for (long long f = 2; f * f <= q; ++f)
    if (q % f == 0) return false;
  return true;
}

Graph make_paley(long long q) {
  if (!is_prime(q) || q % 4 != 1)
    throw Error(ErrorCode::param,
                "paley needs a prime q with q % 4 == 1, got " + std::to_string(q));
  std::vector<char> residue(static_cast<std::size_t>(q), 0);
  for (long long x = 1; x < q; ++x) residue[static_cast<std::size_t>(x * x % q)] = 1;
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < q; ++a)
    for (int b = a + 1; b < q; ++b)
      if (residue[static_cast<std::size_t>((b - a) % q)]) edges.emplace_back(a, b);
  return Graph(static_cast<int>(q), edges);
}

Graph make_random_regular(long long n, long long d, std::uint64_t seed) {
  if (n < 1 || d < 0 || d >= n || (n * d) % 2 != 0)
    throw Error(ErrorCode::param, "random_regular needs 0 <= d < n and n*d even, got n=" +
                                      std::to_string(n) + " d=" + std::to_string(d));
  Rng rng(seed);
  // Pairing model: shuffle the n*d stubs and retry until the matching is simple.
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n * d));
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < d; ++k) stubs.push_back(v);
    rng.shuffle(stubs);
    std::set<std::pair<int, int>> seen;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u > v) std::swap(u, v);
      if (u == v || !seen.emplace(u, v).second) ok = false;
    }
    if (ok)
      return Graph(static_cast<int>(n),
                   std::vector<std::pair<int, int>>(seen.begin(), seen.end()));
  }
  throw Error(ErrorCode::numeric, "random_regular pairing model failed to produce a simple graph");
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::complete_multipartite: return "complete_multipartite";
    case Family::hypercube: return "hypercube";
    case Family::petersen: return "petersen";
    case Family::paley: return "paley";
    case Family::gnp: return "gnp";
    case Family::random_regular: return "random_regular";
  }
  return "?";
}

std::string FamilySpec::to_string() const {
  std::ostringstream out;
  out << family_name(family);
  char sep = ':';
  for (auto v : int_params) {
    out << sep << v;
    sep = ',';
  }
  if (family == Family::gnp) out << sep << p << ',' << seed;
  if (family == Family::random_regular) out << sep << seed;
  return out.str();
}

bool looks_like_family_spec(const std::string& text) {
  std::string head = text.substr(0, text.find(':'));
  for (Family f : {Family::path, Family::cycle, Family::complete, Family::complete_multipartite,
                   Family::hypercube, Family::petersen, Family::paley, Family::gnp,
                   Family::random_regular})
    if (head == family_name(f)) return true;
  return false;
}

FamilySpec parse_family_spec(const std::string& text) {
  std::string head = text.substr(0, text.find(':'));
  std::vector<std::string> args;
  if (auto c = text.find(':'); c != std::string::npos) {
    std::istringstream as(text.substr(c + 1));
    std::string tok;
    while (std::getline(as, tok, ',')) args.push_back(tok);
  }
  auto want = [&](std::size_t k) {
    if (args.size() != k)
      throw Error(ErrorCode::param, "family spec \"" + text + "\": expected " + std::to_string(k) +
                                        " parameter(s), got " + std::to_string(args.size()));
  };
  auto as_int = [&](const std::string& s) -> long long {
    char* end = nullptr;
    long long v = std::strtoll(s.c_str(), &end, 10);
    if (end == s.c_str() || *end != '\0')
      throw Error(ErrorCode::param, "family spec \"" + text + "\": bad integer \"" + s + "\"");
    return v;
  };
  auto as_real = [&](const std::string& s) -> double {
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
      throw Error(ErrorCode::param, "family spec \"" + text + "\": bad number \"" + s + "\"");
    return v;
  };

  FamilySpec spec;
  if (head == "path" || head == "cycle" || head == "complete" || head == "hypercube" ||
      head == "paley") {
    spec.family = head == "path"        ? Family::path
                  : head == "cycle"     ? Family::cycle
                  : head == "complete"  ? Family::complete
                  : head == "hypercube" ? Family::hypercube
                                        : Family::paley;
    want(1);
    spec.int_params = {as_int(args[0])};
  } else if (head == "complete_multipartite") {
    spec.family = Family::complete_multipartite;
    if (args.empty())
      throw Error(ErrorCode::param, "complete_multipartite needs at least one part size");
    for (auto& a : args) spec.int_params.push_back(as_int(a));
  } else if (head == "petersen") {
    spec.family = Family::petersen;
    want(0);
  } else if (head == "gnp") {
    spec.family = Family::gnp;
    want(3);
    spec.int_params = {as_int(args[0])};
    spec.p = as_real(args[1]);
    spec.seed = static_cast<std::uint64_t>(as_int(args[2]));
  } else if (head == "random_regular") {
    spec.family = Family::random_regular;
    want(3);
    spec.int_params = {as_int(args[0]), as_int(args[1])};
    spec.seed = static_cast<std::uint64_t>(as_int(args[2]));
  } else {
    throw Error(ErrorCode::param, "unknown family \"" + head + "\"");
  }
  return spec;
}

Graph generate_family(const FamilySpec& spec) {
  auto arg = [&](std::size_t i) { return spec.int_params.at(i); };
  std::vector<std::pair<int, int>> edges;
  switch (spec.family) {
    case Family::path: {
      long long n = arg(0);
      if (n < 1) throw Error(ErrorCode::param, "path needs n >= 1");
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      return Graph(static_cast<int>(n), edges);
    }
    case Family::cycle: {
      long long n = arg(0);
      if (n < 3) throw Error(ErrorCode::param, "cycle needs n >= 3");
      for (int i = 0; i < n; ++i) edges.emplace_back(i, static_cast<int>((i + 1) % n));
      return Graph(static_cast<int>(n), edges);
    }
    case Family::complete: {
      long long n = arg(0);
      if (n < 1) throw Error(ErrorCode::param, "complete needs n >= 1");
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      return Graph(static_cast<int>(n), edges);
    }
    case Family::complete_multipartite: {
      std::vector<int> label;
      for (std::size_t k = 0; k < spec.int_params.size(); ++k) {
        if (spec.int_params[k] < 1)
          throw Error(ErrorCode::param, "complete_multipartite part sizes must be >= 1");
        label.insert(label.end(), static_cast<std::size_t>(spec.int_params[k]),
                     static_cast<int>(k));
      }
      int n = static_cast<int>(label.size());
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (label[i] != label[j]) edges.emplace_back(i, j);
      return Graph(n, edges);
    }
    case Family::hypercube: {
      long long dim = arg(0);
      if (dim < 0 || dim > 20) throw Error(ErrorCode::param, "hypercube needs 0 <= dim <= 20");
      int n = 1 << dim;
      for (int v = 0; v < n; ++v)
        for (int b = 0; b < dim; ++b)
          if (!(v >> b & 1)) edges.emplace_back(v, v | (1 << b));
      return Graph(n, edges);
    }
    case Family::petersen: {
      for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        edges.emplace_back(i, 5 + i);                // spokes
      }
      return Graph(10, edges);
    }
    case Family::paley:
      return make_paley(arg(0));
    case Family::gnp: {
      long long n = arg(0);
      if (n < 0 || spec.p < 0.0 || spec.p > 1.0)
        throw Error(ErrorCode::param, "gnp needs n >= 0 and p in [0,1]");
      Rng rng(spec.seed);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (rng.next_bernoulli(spec.p)) edges.emplace_back(i, j);
      return Graph(static_cast<int>(n), edges);
    }
    case Family::random_regular:
      return make_random_regular(arg(0), arg(1), spec.seed);
  }
  throw Error(ErrorCode::param, "unhandled family");
}

}  // namespace lapcert
