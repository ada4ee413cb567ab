#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gammoidlab {

// Full command-line surface; args exclude the program name. Returns the
// process exit code: 0 ok, 1 usage or input error, 2 mathematical
// counterexample.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gammoidlab
