#pragma once

#include <stdexcept>
#include <string>

namespace polycount {

// Error taxonomy shared by the library and the CLI. The CLI maps these to
// process exit codes: precondition/regime -> 2, resource -> 3, parse -> 4.

class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

class RegimeError : public PreconditionError {
public:
    explicit RegimeError(const std::string& what) : PreconditionError(what) {}
};

class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

} // namespace polycount
