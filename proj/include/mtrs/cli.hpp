#pragma once

#include <ostream>

namespace mtrs {

/// Entry point of the `mtrs` command. Writes one JSON document to `out`.
/// Returns 0 on success, 1 on a domain error (JSON error object on `out`),
/// 2 on a usage error (message on `err`).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mtrs
