#ifndef POTCONST_CLI_HPP_
#define POTCONST_CLI_HPP_

#include <potconst/geometry.hpp>
#include <potconst/weight.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace potconst::cli {

enum class Command {
  Capacity,
  Constant,
  ConstantM,
  WeightedConstant,
  DominantSet,
  Verify,
  Fekete,
  RieszCheck,
  DemoCountable,
};

enum class Format { Csv, Json };

inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 2;
inline constexpr int exit_numeric = 3;

struct RunConfig {
  Command command = Command::Constant;
  std::optional<SetSpec> set;
  std::string set_id;  // file stem of --set, or the kind name
  std::optional<WeightSpec> weight;
  std::optional<std::size_t> m;
  std::size_t n = 512;
  std::size_t restarts = 0;  // 0: 8 + m
  std::uint64_t seed = 20080101;
  std::string output;  // empty: standard output
  Format format = Format::Json;
  std::string manifest;        // verify
  std::vector<double> radii;   // riesz-check
  std::vector<double> A;       // demo-countable
};

/// Throws Error(InvalidInput) when a command-specific field is missing or
/// n < 8 (demo-countable takes any n >= 1: it is a factor count).
void check_config(const RunConfig& config);

/// Executes the command and writes its result to config.output (or `out`).
/// Returns 0, 2 on invalid input, 3 on a non-finite or negative constant.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses the command line (subcommand plus flags) and calls run().
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace potconst::cli

#endif  // POTCONST_CLI_HPP_
