#ifndef GAMMAB_CLI_HPP
#define GAMMAB_CLI_HPP

#include <string>
#include <vector>

namespace gammab::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1, // bad graph, over-cap instance
  kUsageError = 2,
};

struct Outcome {
  int exit_code = kOk;
  std::string out; // JSON or CSV document
  std::string err; // diagnostics
};

/// Runs one command line. args excludes the program name.
Outcome run(const std::vector<std::string> &args);

} // namespace gammab::cli

#endif
