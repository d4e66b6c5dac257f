#pragma once

#include <string>
#include <string_view>

#include "hyperpath/hypergraph.hpp"

namespace hyperpath {

// Line-oriented text format:
//
//   c <comment>          (any number, optional)
//   p h<r> <n> <m>       (exactly one, before the edges)
//   e v1 v2 ... vr       (m lines, 1-based strictly increasing labels)
//
// serialize() emits no comments, the header first and the edges in
// lexicographic order, so equal hypergraphs serialize to equal bytes.
std::string serialize(const Hypergraph& h);

// Throws Error{ParseError} with the offending line number, or the
// corresponding build error (also tagged with the line number).
Hypergraph parse(std::string_view text);

Hypergraph read_hypergraph_file(const std::string& path);
void write_hypergraph_file(const std::string& path, const Hypergraph& h);

}  // namespace hyperpath
