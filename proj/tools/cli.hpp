#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ibcq::cli {

enum ExitStatus : int {
  kOk = 0,
  kFailure = 1,     // property harness found a counterexample, or an unexpected error
  kValidation = 2,  // bad arguments or input files
  kPremise = 3,     // an accuracy premise failed (no qualifying cluster, bound not applicable)
  kCapacity = 4,    // qubit or enumeration cap exceeded
};

// Runs one command line (args excludes the program name). Results go to
// `out`, diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ibcq::cli
