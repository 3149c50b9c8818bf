#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli/report.hpp"

namespace descent::cli {

/// Bad flags, unreadable scheme files, values outside a method's range.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string scheme_file;
  std::string preset;
  std::optional<int> n;
  std::optional<int> n_max;
  std::string method = "dp";
  std::string start;
  std::string end;
  std::string real_range;
  std::string complex_box;
  std::optional<int> top;
  Format format = Format::table;
  std::optional<double> tol;
};

Report cmd_oracle(const Options& o);
Report cmd_spectrum(const Options& o);
Report cmd_constants(const Options& o);
Report cmd_verify(const Options& o);
Report cmd_sequence(const Options& o);

/// Parses `args` (without the program name), runs one subcommand and writes
/// the report to `out`; diagnostics and timing go to `err`. Returns 0 on
/// success, 1 when a check fails or a computation is refused, 2 on usage or
/// scheme-file errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace descent::cli
