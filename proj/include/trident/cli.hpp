#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace trident::cli {

enum class OutputFormat { Pretty, Json, Csv };

struct Config {
  std::uint64_t list_cap = 10000;
  std::uint64_t product_cap = 500;
  double zero_tolerance = 1e-13;
  OutputFormat format = OutputFormat::Pretty;
  std::uint64_t seed = 42;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitLimit = 3;

/// Parses argv (argv[0] is the program name) and dispatches the subcommand.
/// Output goes to `out` unless --out names a file.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trident::cli
