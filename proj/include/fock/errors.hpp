#ifndef FOCK_ERRORS_HPP
#define FOCK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fock {

// Raised when text input cannot be parsed (CLI exit code 2).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when inputs violate an operation's domain (CLI exit code 1).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fock

#endif
