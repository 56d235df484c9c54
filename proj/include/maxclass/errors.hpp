#pragma once

#include <stdexcept>
#include <string>

namespace maxclass {

// Invalid user input: malformed presentations, mixed parents, non-normal arguments.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured enumeration budget would be exceeded. Never a silent skip.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// The requested computation falls outside the supported regime.
class unsupported_error : public std::runtime_error {
 public:
  explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace maxclass
