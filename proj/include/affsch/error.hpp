#pragma once

#include <stdexcept>
#include <string>

namespace affsch {

// Violations of a documented invariant or precondition. name() is a stable
// snake_case identifier (e.g. "residue_collision") that the CLI prints.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace affsch
