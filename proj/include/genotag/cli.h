#ifndef GENOTAG_CLI_H_
#define GENOTAG_CLI_H_

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace genotag {

inline constexpr const char *kToolVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitDataError = 1,  // malformed input, contract violation, bad usage
  kExitIoError = 2,    // unreadable or unwritable files
};

// `genotag {tokenize|analyze|train|tag|eval|stats} [flags]`. `args` excludes
// the program name. `in` is read when a subcommand gets no input path.
int run_cli(const std::vector<std::string> &args, std::istream &in,
            std::ostream &out, std::ostream &err);

}  // namespace genotag

#endif  // GENOTAG_CLI_H_
