#pragma once

#include <stdexcept>
#include <string>

namespace chainwatch {

// Shape/dimension mismatch between tensors or graph/tensor pairs.
class ShapeError : public std::runtime_error {
public:
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid argument value (rate out of range, bad counts, ...).
class ParamError : public std::invalid_argument {
public:
    explicit ParamError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Malformed input file; carries a line number when row-level.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, long line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

// Column/feature layout does not match what a fitted object expects.
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

// Inconsistent experiment configuration (architecture/input mismatch, ...).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace chainwatch
