#pragma once

#include <stdexcept>
#include <string>

namespace sutured {

// Domain error carrying a stable machine-readable code (e.g. "NotBalanced").
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(detail), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace sutured
