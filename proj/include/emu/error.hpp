#pragma once

#include <stdexcept>
#include <string>

namespace emu {

/// Machine-readable error category. The CLI reports `kind_name()` verbatim.
enum class ErrorKind {
  space_mismatch,
  not_in_sigma,
  degenerate_space,
  unknown_outcome,
  range,
  dimension_mismatch,
  empty_set,
  invalid_lottery,
  parse,
  schema,
  io,
  usage,
  verification,
};

inline const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::space_mismatch: return "space-mismatch";
    case ErrorKind::not_in_sigma: return "not-in-sigma";
    case ErrorKind::degenerate_space: return "degenerate-space";
    case ErrorKind::unknown_outcome: return "unknown-outcome";
    case ErrorKind::range: return "range";
    case ErrorKind::dimension_mismatch: return "dimension-mismatch";
    case ErrorKind::empty_set: return "empty-set";
    case ErrorKind::invalid_lottery: return "invalid-lottery";
    case ErrorKind::parse: return "parse";
    case ErrorKind::schema: return "schema";
    case ErrorKind::io: return "io";
    case ErrorKind::usage: return "usage";
    case ErrorKind::verification: return "verification";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace emu
