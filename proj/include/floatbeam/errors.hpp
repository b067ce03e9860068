#pragma once

#include <stdexcept>
#include <string>

namespace floatbeam {

// Base class for all floatbeam errors. The CLI maps subclasses to exit codes:
// input/configuration problems exit 2, numerical failures exit 3.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid input side (exit code 2).
class GeometryError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class StabilityError : public Error {
public:
    using Error::Error;
};

class CompatibilityError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class MeshError : public Error {
public:
    using Error::Error;
};

// Numerical failure side (exit code 3).
class AssemblyError : public Error {
public:
    using Error::Error;
};

class SolveError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

class NaNError : public Error {
public:
    using Error::Error;
};

}  // namespace floatbeam
