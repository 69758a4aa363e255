#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lgcoh::cli {

/// Runs the command line interface. Exit codes: 0 success, 1 hard verification
/// failure, 2 asserted-set drift, 64 usage/parse error, 70 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_main(int argc, char** argv);

}  // namespace lgcoh::cli
