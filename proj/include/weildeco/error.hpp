#pragma once

#include <stdexcept>
#include <string>

namespace weildeco {

// Library errors carry a stable machine-readable code ("NotDivisible",
// "RankMismatch", ...) next to the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace weildeco
