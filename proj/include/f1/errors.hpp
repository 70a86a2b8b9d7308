#pragma once

#include <stdexcept>
#include <string>

namespace f1 {

/// Malformed input: bad literal, bad token, wrong shape. CLI exit code 1.
class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical precondition is violated (e.g. insufficient truncation
/// depth). The message names the required bound. CLI exit code 2.
class precondition_error : public std::runtime_error {
public:
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

/// Internal consistency failure (e.g. Witt integrality violated on integer
/// inputs). Never expected on valid builds.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace f1
