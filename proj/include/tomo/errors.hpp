#pragma once

#include <stdexcept>
#include <string>

namespace tomo {

/// Bad input to a library call (wrong dimension, non-unit vector, bad parameter).
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical procedure could not reach the requested resolution.
class ResolutionError : public std::runtime_error {
public:
    explicit ResolutionError(const std::string& what) : std::runtime_error(what) {}
};

/// Operation is mathematically defined but outside what this library evaluates.
class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tomo
