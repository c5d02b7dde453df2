#pragma once

#include <stdexcept>
#include <string>

namespace apexminor {

enum class ErrorKind {
  InvalidArgument,  // malformed input or out-of-range parameter
  Precondition,     // input is well formed but violates a stated precondition
  TrialsExhausted,  // randomized search ran out of trials
  LimitExceeded,    // oracle size or budget limit
  Defect,           // internal self-check failed
};

const char* to_string(ErrorKind kind);

/// Error carrying a stable machine-readable code alongside the message.
/// Codes are short kebab-case tokens ("radius", "dimension", "trials-exhausted", ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void fail(ErrorKind kind, std::string code, const std::string& message) {
  throw Error(kind, std::move(code), message);
}

}  // namespace apexminor
