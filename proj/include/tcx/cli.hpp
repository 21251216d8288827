#ifndef TCX_CLI_HPP_
#define TCX_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace tcx::cli {

  // Exit codes.
  inline constexpr int EXIT_OK = 0;
  inline constexpr int EXIT_INPUT = 1;        // usage, parse or data errors
  inline constexpr int EXIT_COSET_LIMIT = 2;  // table filled before closing
  inline constexpr int EXIT_CHECK_FAILED = 3; // a verification came out false

  // Runs the tcx command line; args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

  // Directory holding presentations/ and the generator data; the
  // TCX_DATA_DIR environment variable overrides the build-time default.
  std::string default_data_dir();

}  // namespace tcx::cli

#endif  // TCX_CLI_HPP_
