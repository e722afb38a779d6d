#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "gausstoric/report.hpp"

namespace gausstoric::cli {

// Exit codes: 0 success / true verdict, 1 false verdict or failed
// self-check, 2 input error, 3 theorem-precondition failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitPrecondition = 3;

struct ParsedInput {
  std::vector<IntVec> points;
  std::optional<Int> characteristic;
};

/// Reads a point configuration from a JSON file ({"points": ...,
/// "characteristic": ...}), a plain-text file (one point per line), "-"
/// for stdin, or an inline JSON object.
ParsedInput parse_points_input(const std::string& spec);

/// Parses an inline JSON array of matrix rows.
IntMat parse_matrix_arg(const std::string& text, std::size_t expected_cols);

Int resolve_characteristic(const std::optional<std::string>& flag,
                           const std::optional<Int>& from_file);

struct AnalyzeArgs {
  std::string input = "-";
  std::optional<std::string> characteristic;
  std::string mode = "full";
  bool text = false;
  bool lenient = false;
  unsigned threads = 1;
  std::size_t witness_limit = 100000;
};
int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err);

struct DevelopableArgs {
  std::string input = "-";
  std::string projection;  // inline JSON rows
  std::optional<std::string> characteristic;
  bool text = false;
  unsigned threads = 1;
};
int cmd_developable(const DevelopableArgs& args, std::ostream& out,
                    std::ostream& err);

struct DecomposeArgs {
  std::string input = "-";
  std::optional<std::string> characteristic;
  bool text = false;
  unsigned threads = 1;
};
int cmd_decompose(const DecomposeArgs& args, std::ostream& out,
                  std::ostream& err);

struct ConstructArgs {
  std::string theorem;  // 5.1 | 5.5 | hypersurface | codim2
  std::optional<std::string> fiber;
  std::optional<std::string> image;
  std::optional<std::string> characteristic;
  std::string components = "1";
  unsigned long rank = 1;
  std::size_t dim = 2;
  std::size_t big_n = 0;
  std::string coeffs;  // comma-separated, hypersurface only
  std::optional<std::string> out_path;
  bool text = false;
  unsigned threads = 1;
};
int cmd_construct(const ConstructArgs& args, std::ostream& out,
                  std::ostream& err);

struct VerifyArgs {
  std::size_t samples = 100;
  std::uint64_t seed = 7;
  std::string characteristics = "0,2,3,5";
  bool text = false;
};
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

unsigned threads_from_env();

}  // namespace gausstoric::cli
