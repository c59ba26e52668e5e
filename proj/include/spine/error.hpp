#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spine {

// Raised by operations whose preconditions fail. `code()` is a stable
// identifier such as "DimensionTooLow" or "NoEmptyRegion".
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct Issue {
  std::string code;
  std::string message;
};

// Report-valued validation result. Violations go to `issues`; `notes` carry
// informational remarks that do not fail validation.
struct ValidationReport {
  std::vector<Issue> issues;
  std::vector<std::string> notes;

  bool ok() const { return issues.empty(); }
  bool has(const std::string& code) const;
  void add(std::string code, std::string message) {
    issues.push_back({std::move(code), std::move(message)});
  }
  void merge(const ValidationReport& other, const std::string& prefix = {});
  std::string to_text() const;
};

}  // namespace spine
