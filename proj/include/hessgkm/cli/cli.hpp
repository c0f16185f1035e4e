#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hessgkm/combinat/hessenberg_function.hpp"
#include "hessgkm/combinat/skeletal.hpp"
#include "hessgkm/torus/torus.hpp"

namespace hessgkm::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Thrown for malformed or unsupported command-line input.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  int n_min = 0;
  int n_max = 0;
  std::string op;        ///< "F<k>" or "subregular"; empty with --skeletal
  std::string skeletal;  ///< "i,j,p/q;..."
  std::vector<int> h;
  bool sweep = false;
  std::string torus = "T";
  std::string suite;
  int trials = 16;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
};

/// "5" or "4..6".
std::pair<int, int> parse_n_range(const std::string& text);
/// The operator for dimension n, from --operator or --skeletal.
std::optional<SkeletalNilpotent> resolve_operator(const RunConfig& config, int n);
SkeletalNilpotent parse_skeletal(const std::string& text, int n);
/// Every h for a sweep, or the single --h (which must have length n).
std::vector<HessenbergFunction> resolve_hessenberg(const RunConfig& config, int n);
/// "T", "canonical", or characters as "a1,..,an;b1,..,bn" cutting out the subtorus.
Subtorus resolve_torus(const std::string& spec, const SkeletalNilpotent& x);

// Each command writes its report to `out`. `summary` receives a short
// human-readable digest and is shown only when the report goes to a file.
int cmd_classify(const RunConfig& config, std::ostream& out, std::ostream& summary);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& summary);
int cmd_moment_graph(const RunConfig& config, std::ostream& out, std::ostream& summary);

/// Parses arguments and dispatches; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hessgkm::cli
