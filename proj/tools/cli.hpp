#pragma once

namespace regmix::cli {

// Dispatch a full command line. Returns 0 on success, 1 on validation
// errors (unknown flags, bad parameter values), 2 on runtime errors.
int run(int argc, const char* const* argv);

} // namespace regmix::cli
