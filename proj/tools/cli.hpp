#pragma once

#include <iosfwd>

namespace syzygy::cli {

/// Entry point of the `syzygy` tool. Returns the process exit status:
/// 0 success, 1 failed checks or runtime error, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace syzygy::cli
