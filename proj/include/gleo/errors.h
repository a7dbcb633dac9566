#pragma once

#include <stdexcept>
#include <string>

namespace gleo {

/// Unreadable/malformed external inputs (files, datasets, checkpoints).
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Non-finite values or numerically impossible requests at runtime.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gleo
