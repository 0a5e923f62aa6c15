#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planevar {

// Runs one command line against the given streams and returns the process
// exit code: 0 on success, 2 for usage or input errors, 3 when a checked
// relation is violated. User-facing failures never escape as exceptions;
// they become an {"error": ...} document on `out`.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

int run_command(int argc, const char* const* argv, std::ostream& out,
                std::ostream& err);

}  // namespace planevar
