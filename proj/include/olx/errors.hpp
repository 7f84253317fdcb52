#pragma once

#include <stdexcept>
#include <string>

namespace olx {

// Exit codes used by the CLI: 0 success, 2 schema error, 3 precondition
// error, 4 internal invariant breach.
enum class ExitCode : int {
    ok = 0,
    schema_error = 2,
    precondition_error = 3,
    internal_error = 4,
};

// Malformed or inconsistent scenario input (bad JSON, unknown catalog kind,
// unresolved name, non-positive weight).
class schema_error : public std::runtime_error {
public:
    explicit schema_error(const std::string& what) : std::runtime_error(what) {}
};

// A documented operation precondition was violated by the caller
// (injectivity guard, zero vector, non-Delta2 gauge, ...).
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed; indicates a bug or a numeric range the
// representation cannot carry (e.g. atom weight underflow).
class internal_error : public std::runtime_error {
public:
    explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

ExitCode classify_exception(const std::exception& e) noexcept;

}  // namespace olx
