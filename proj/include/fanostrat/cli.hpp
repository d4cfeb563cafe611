#pragma once

#include <ostream>

namespace fanostrat {

/// Entry point of the fanostrat tool. The payload (JSON, DOT or CSV) goes to
/// `out`, diagnostics to `err`. Returns 0 ok, 1 usage, 2 domain error,
/// 3 internal consistency failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fanostrat
