#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

// Every failure carries a stable kind tag ("NotHecke", "BadScalar", ...) that
// the CLI echoes into reports, plus a free-form detail message.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)), detail_(detail) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

  // Input-rejection errors map to exit code 2; everything else signals an
  // internal inconsistency.
  bool is_rejection() const noexcept;

 private:
  std::string kind_;
  std::string detail_;
};

}  // namespace hecke
