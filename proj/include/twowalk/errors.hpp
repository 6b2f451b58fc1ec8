#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace twowalk {

// Input document could not be parsed; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class TooLargeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An induced 2K2 was found where none is allowed.
class NotTwoK2FreeError : public std::runtime_error {
public:
    NotTwoK2FreeError(int a, int b, int c, int d)
        : std::runtime_error("induced 2K2 on {" + std::to_string(a) + "," + std::to_string(b) +
                             "," + std::to_string(c) + "," + std::to_string(d) + "}"),
          witness_{a, b, c, d} {}
    std::array<int, 4> witness() const { return witness_; }

private:
    std::array<int, 4> witness_;
};

class NoWeaklyDominatingCliqueError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NoCrossEdgeError : public std::runtime_error {
public:
    NoCrossEdgeError(int i, int j)
        : std::runtime_error("no edge joins Q" + std::to_string(i) + " and Q" +
                             std::to_string(j)) {}
};

class ConstructionFailedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotEulerianError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Generator ran out of attempts.
class ExhaustedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invariant breakage that indicates a bug rather than bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace twowalk
