#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "u6ncay/group.hpp"

namespace u6ncay::cli {

// Flag/usage problems; mapped to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by parse_args when --help is requested; carries the help text.
struct HelpRequested {
  std::string text;
};

struct RunConfig {
  enum class Cmd { table, spectrum, check, boolean_alg, family, search };

  Cmd cmd = Cmd::table;
  int n = 0;                     // group parameter
  int order = 0;                 // boolean: cyclic group order m
  std::string set_literal;
  std::optional<ConnectionSet> set;  // parsed once n is known
  std::vector<int> exponents;    // boolean: subset of Z_m
  std::string method = "babai";  // spectrum: babai | brute | exact
  std::string family_id;
  int param = 0;
  bool verify = false;
  bool json = false;
  bool csv = false;
  bool connected_only = false;
  std::optional<int> sample_count;
  std::uint64_t seed = 0;
};

// Validated config or UsageError naming the offending flag. `args` excludes
// the program name.
RunConfig parse_args(const std::vector<std::string>& args);

// Dispatches to the owning module. Exit code 0 on decided runs, 1 on input
// errors, 2 on internal-consistency failures.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse + run + error mapping, for main().
int cli_main(int argc, char** argv);

}  // namespace u6ncay::cli
