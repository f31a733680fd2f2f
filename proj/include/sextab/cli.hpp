#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sextab::cli {

// Runs one command line (args exclude the program name). Exit status 0 on
// success, 1 when a verification is rejected, 2 on errors and bad usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace sextab::cli
