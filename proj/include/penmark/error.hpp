#pragma once

#include <stdexcept>
#include <string>

namespace penmark {

// Maps to CLI exit code 1.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Data, contract, schema, configuration and integrity failures. Exit code 2.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Network / remote endpoint failures. Exit code 3.
struct TransportError : std::runtime_error {
    explicit TransportError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace penmark
