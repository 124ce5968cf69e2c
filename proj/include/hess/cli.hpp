#pragma once

// Command-line driver. Every subcommand writes one document to `out` (JSON by
// default); errors become {"error": {...}} objects on `out` as well.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hess/hessenberg.hpp"
#include "hess/tableaux.hpp"

namespace hess {

enum class OutputFormat { json, csv, latex, dot };

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitVerification = 3;
inline constexpr int kExitInternal = 1;

struct RunConfig {
  std::string command;
  std::optional<HessenbergFunction> h;
  std::optional<Partition> shape;
  OutputFormat format = OutputFormat::json;
  int max_n = 7;
  std::uint64_t seed = 1;
  bool long_tests = false;
};

// args excludes the program name
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hess
