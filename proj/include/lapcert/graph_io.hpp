#pragma once

#include <string>
#include <string_view>

#include "lapcert/graph.hpp"

namespace lapcert {

// graph6: printable encoding of the upper-triangle adjacency bits, column
// major (for column j = 1..n-1, rows i = 0..j-1), packed big-endian into
// 6-bit groups offset by 63. The optional ">>graph6<<" header is accepted.
// Sizes n < 63 use the one-byte form, 63 <= n <= 258047 the four-byte form.
//
// strict=true rejects nonzero padding bits in the final group; the default
// is lenient because corpora written by sloppy encoders are common.
Graph parse_graph6(std::string_view text, bool strict = false);
std::string write_graph6(const Graph& g);

// Edge-list text: first non-comment line "n m", then m lines "u v".
// Lines whose first non-blank character is '#' are ignored.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

}  // namespace lapcert
