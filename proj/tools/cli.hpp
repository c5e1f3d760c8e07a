#pragma once

#include <ostream>

namespace rdsys {

/// Runs one command line. The JSON run report goes to `out`, usage errors to
/// `err`. Returns 0 exactly when every certificate in the report verified.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rdsys
