#pragma once

#include <stdexcept>
#include <string>

namespace tvg {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct OutOfLifetime : Error {
    explicit OutOfLifetime(const std::string& what) : Error(what) {}
};

struct EmptyInterval : Error {
    explicit EmptyInterval(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    ParseError(int line, const std::string& reason)
        : Error("parse error at line " + std::to_string(line) + ": " + reason), line(line) {}
    int line;
};

struct InvalidSpec : Error {
    explicit InvalidSpec(const std::string& what) : Error(what) {}
};

struct LimitExceeded : Error {
    explicit LimitExceeded(const std::string& what) : Error(what) {}
};

struct RepresentationMismatch : Error {
    explicit RepresentationMismatch(const std::string& what) : Error(what) {}
};

struct HypothesisNotSatisfied : Error {
    explicit HypothesisNotSatisfied(const std::string& what) : Error(what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

struct InvalidParam : Error {
    explicit InvalidParam(const std::string& what) : Error(what) {}
};

}  // namespace tvg
