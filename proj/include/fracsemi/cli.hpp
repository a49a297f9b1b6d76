#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracsemi::cli {

/// Bad flags or out-of-range parameters; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Command { kernel, spectrum, solve, convergence, verify };

struct RunConfig {
  Command command = Command::kernel;
  std::string check = "all";  // verify target
  double s = 0.5;
  int N = 1;
  std::vector<double> t{1.0};
  std::vector<double> r{0.0};
  std::vector<double> s_list{0.9, 0.99, 0.999};
  double a = -1.0;
  double b = 1.0;
  std::size_t n = 256;
  std::size_t count = 0;  // eigenvalues to report, 0 = all
  double lambda = 0.0;
  double epsilon = 0.5;
  std::uint64_t seed = 42;
  std::string method = "subordinated";  // subordinated | fourier | closed
  std::string rhs = "one";              // one | gaussian | bump
  std::string out;
  std::string format;  // csv | json; empty = from the extension of out
};

/// Names accepted by `verify`, in report order ("all" runs every one).
const std::vector<std::string>& check_names();

/// Parses argv (with optional --config file; flags win). Throws UsageError naming the flag.
/// Returns false when only help was requested (help text goes to `out`).
bool parse(int argc, const char* const* argv, RunConfig& config, std::ostream& out);

/// Executes the command; returns 0 if every executed check passed, 1 otherwise.
int run(const RunConfig& config, std::ostream& out);

/// parse + run with error reporting; the process exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Worker count: FRACSEMI_THREADS if set and positive, else the machine parallelism.
unsigned worker_count();

}  // namespace fracsemi::cli
