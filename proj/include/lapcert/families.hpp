#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lapcert/graph.hpp"

namespace lapcert {

enum class Family {
  path,
  cycle,
  complete,
  complete_multipartite,
  hypercube,
  petersen,
  paley,
  gnp,
  random_regular,
};

const char* family_name(Family f);

struct FamilySpec {
  Family family = Family::path;
  std::vector<long long> int_params;  // sizes / dimension / prime / n,d
  double p = 0.0;                     // gnp edge probability
  std::uint64_t seed = 0;             // randomized families require it

  std::string to_string() const;
};

// Text forms accepted from the CLI and scan configs:
//   path:10  cycle:6  complete:5  complete_multipartite:2,2,2
//   hypercube:4  petersen  paley:101  gnp:20,0.5,7  random_regular:10,3,7
FamilySpec parse_family_spec(const std::string& text);
bool looks_like_family_spec(const std::string& text);

// Throws Error(param) for infeasible specs (paley needs a prime ≡ 1 mod 4,
// random_regular needs n*d even and d < n, ...). Randomized families are
// reproducible from their seed.
Graph generate_family(const FamilySpec& spec);

}  // namespace lapcert
