#pragma once

#include <iosfwd>

namespace hyperpath::cli {

// Runs the `hyperpath` command line. Results go to `out`, diagnostics to
// `err`; "-" as an input path reads `in`. Returns 0 on success or witness
// found, 1 on an absent/failed outcome, 2 on usage or I/O errors.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hyperpath::cli
