#pragma once

#include <string>
#include <vector>

namespace bihamil::cli {

inline constexpr const char* kSchema = "bihamil/1";
inline constexpr const char* kToolVersion = "1.0.0";

struct Result {
  /// 0 ok, 2 input error, 3 precondition violated, 4 internal inconsistency.
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name) in-process.
Result run(const std::vector<std::string>& args);

}  // namespace bihamil::cli
