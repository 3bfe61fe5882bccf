#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gmssc {

// Domain error carrying a short machine-readable code ("bad-k",
// "parse-error", ...) next to the human-readable message.
class error : public std::runtime_error {
 public:
  error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace gmssc
