#pragma once

#include <stdexcept>
#include <string>

namespace sparsesep {

// Malformed input: out-of-range vertices, degenerate graphs, bad parameters.
class DomainError : public std::invalid_argument {
public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// An exact-mode operation was asked to run beyond its configured size cap.
class RefusalError : public std::runtime_error {
public:
  explicit RefusalError(const std::string& what) : std::runtime_error(what) {}
};

// A certificate or provider-supplied object failed validation.
class CertificationError : public std::runtime_error {
public:
  explicit CertificationError(const std::string& what) : std::runtime_error(what) {}
};

// A guarantee the library makes internally did not hold; always a bug.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace sparsesep
