#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace signet {

// Base of all library errors. The CLI maps ParseError/ValidationError/
// ConfigError to exit code 1 and everything else to 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed content in an input file.
struct ParseError : Error {
    using Error::Error;
    ParseError(const std::string& file, std::size_t line, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ": " + what) {}
};

// Data that parses but violates an invariant (ordering, positivity, shape,
// duplicates, schema).
struct ValidationError : Error {
    using Error::Error;
};

// Bad experiment configuration: unknown keys, out-of-range values, missing
// input paths.
struct ConfigError : Error {
    using Error::Error;
};

// Filesystem failures while reading or writing.
struct IoError : Error {
    using Error::Error;
};

}  // namespace signet
