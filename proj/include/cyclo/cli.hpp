#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cyclo/ffield.hpp"

namespace cyclo {

/// Invalid command-line input; the front end maps it to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QSpec {
  std::uint64_t p = 0;
  unsigned m = 1;
};

/// Parses "p", "p^m" or a prime power q given as one integer; q must be odd.
QSpec parse_q(std::string_view text);

struct RunConfig {
  std::string subcommand;
  std::string q;
  int n = 0;
  std::uint64_t r = 5;
  std::uint64_t seed = 0;
  std::string format = "text";
  bool verify = false;
  int order_limit = 1 << 12;
  std::string family = "auto";
  std::string poly;
  int n_max = 8;
  int repetitions = 3;
};

/// Exit codes: 0 success, 1 verification failure, 2 usage or validation error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cyclo
