#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace semilat::cli {

enum class Command {
  Idempotents,
  Et,
  Verify,
  Maximal,
  Reduce,
  Order,
  Enumerate,
  Spectrum,
  MakeSize,
  VerifyTheorem,
};

enum class Format { Text, Json, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::Idempotents;
  std::size_t n = 0;
  std::optional<std::size_t> t;
  std::optional<std::size_t> u;
  std::optional<std::size_t> m;
  std::optional<std::string> input_path;  // "-" or unset reads stdin
  std::optional<std::string> output_path;
  Format format = Format::Text;
  unsigned workers = 1;
  std::size_t cap = 5;
  bool transitivity = false;
};

/// Either a config or a usage error message.
using ParseOutcome = std::variant<RunConfig, std::string>;

/// Parses argv. `env_cap` is the value of SEMILAT_CAP, if set.
ParseOutcome parse_args(const std::vector<std::string>& args,
                        std::optional<std::string> env_cap = std::nullopt);

/// Runs a validated config; returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run; help output goes to `out` with status 0.
int main_entry(const std::vector<std::string>& args, std::optional<std::string> env_cap,
               std::ostream& out, std::ostream& err);

}  // namespace semilat::cli
