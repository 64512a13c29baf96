#pragma once

#include <stdexcept>
#include <string>

namespace vortex {

//! Invalid physical input: out-of-range arguments, bad quantum numbers,
//! singular kernel geometry. Maps to CLI exit code 1.
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string &what) : std::domain_error(what) {}
};

//! Malformed configuration or command-line usage. Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string &what) : std::runtime_error(what) {}
};

} // namespace vortex
