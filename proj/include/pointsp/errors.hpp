// Copyright 2026 The pointsp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef POINTSP_ERRORS_HPP
#define POINTSP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pointsp {

/// Bad argument to an operation (k out of range, m too large, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed input file. Carries a 1-based line number when known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, long line = 0)
        : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}

    long line() const { return line_; }

private:
    long line_ = 0;
};

/// Geometry too degenerate to proceed (all-collinear neighborhood, empty
/// interpolation candidate set, ...).
class DegenerateGeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace pointsp

#endif // POINTSP_ERRORS_HPP
