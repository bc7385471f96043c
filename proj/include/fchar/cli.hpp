#pragma once

// The `fchar` command-line front end, callable in-process for tests.

#include <ostream>
#include <span>
#include <string>

namespace fchar::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kFixtureMismatch = 1,
  kPrecondition = 2,
  kResourceCap = 3,
  kUsage = 64,
};

/// `args` excludes the program name. Reports go to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

std::string usage();

/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& data);

}  // namespace fchar::cli
