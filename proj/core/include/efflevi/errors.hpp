#pragma once

#include <stdexcept>
#include <string>

namespace efflevi {

// Malformed or contract-violating input. CLI exit code 2.
struct invalid_input : std::runtime_error {
  explicit invalid_input(const std::string& msg) : std::runtime_error(msg) {}
};

// An enumeration or search exceeded its node budget. CLI exit code 4.
struct resource_limit : std::runtime_error {
  explicit resource_limit(const std::string& msg) : std::runtime_error(msg) {}
};

// A checked postcondition failed. Indicates a bug, not bad input.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void require_input(bool cond, const std::string& msg) {
  if (!cond) throw invalid_input(msg);
}

inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw internal_error(msg);
}

}  // namespace efflevi
