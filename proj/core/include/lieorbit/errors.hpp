#ifndef LIEORBIT_ERRORS_HPP
#define LIEORBIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lieorbit {

/// Raised when inputs violate a documented precondition (bad type string,
/// inadmissible rank, non-dominant phi, ...). Maps to CLI exit code 1.
class usage_error : public std::runtime_error {
public:
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an invariant the library itself guarantees fails to hold
/// (arithmetic overflow, catalog miss, integrable F-class, failed
/// verification). Maps to CLI exit code 2.
class internal_error : public std::runtime_error {
public:
  explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lieorbit

#endif
