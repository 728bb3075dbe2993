#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fedkm {

// Bad arguments, dimension mismatches, violated call contracts.
struct ContractError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed input file; carries the 1-based line number.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t line_no)
      : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
  std::size_t line;
};

// Declared column missing or role mapping unusable.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested model cannot exist on the given data (e.g. k > distinct rows).
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyDatasetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fedkm
