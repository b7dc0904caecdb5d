#pragma once

#include <stdexcept>
#include <string>

namespace psolv {

/// Bad user-supplied data: malformed input, unknown names, degree mismatches.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource limit was exceeded. The message names the limit.
class capacity_error : public std::runtime_error {
public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// A documented precondition of an operation was violated by the caller.
class contract_error : public std::logic_error {
public:
  explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

/// An internal consistency invariant failed; indicates a defect, not bad input.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace psolv
