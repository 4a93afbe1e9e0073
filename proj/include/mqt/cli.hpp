#pragma once

#include <ostream>

namespace mqt {

/// The mqtower command line. Returns the process exit code: 0 when nothing
/// failed, 1 when some claim failed, 2 on usage or runtime errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mqt
