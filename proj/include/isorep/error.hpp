#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace isorep {

/// A well-formed input on which the requested computation fails for a
/// mathematical reason (validation violation, GKM failure, no lift, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what, std::vector<std::string> ids = {})
      : std::runtime_error(what), ids_(std::move(ids)) {}

  /// Cell, edge or vertex ids the failure refers to.
  const std::vector<std::string>& ids() const { return ids_; }

 private:
  std::vector<std::string> ids_;
};

/// Malformed input or a request outside the supported envelope.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace isorep
