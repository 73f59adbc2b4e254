#pragma once

#include <stdexcept>
#include <string>

namespace symcoef {

// Error taxonomy shared by the library and the CLI exit-code contract:
//   DomainError    -> exit 2   (invalid arguments: size mismatch, bad shape, ...)
//   CapacityError  -> exit 3   (request exceeds a configured resource bound)
//   InternalError  -> exit 4   (a theorem-level assertion failed; indicates a bug)
// IntegrityError marks a corrupted cache file; callers recover by recomputing.

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& msg) : Error(msg) {}
};

class IntegrityError : public Error {
public:
    explicit IntegrityError(const std::string& msg) : Error(msg) {}
};

class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

} // namespace symcoef
