#pragma once

#include <stdexcept>
#include <string>

namespace qgames {

// Shared numeric tolerance for equality, unitarity and normalization checks.
// All quantities handled here are small combinations of rationals and 1/sqrt(2),
// so 1e-9 leaves a wide margin.
double tolerance();
void set_tolerance(double tol);

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

class NotUnitary : public Error {
public:
    explicit NotUnitary(const std::string& msg) : Error(msg) {}
};

class NotNormalized : public Error {
public:
    explicit NotNormalized(const std::string& msg) : Error(msg) {}
};

class ParamOutOfRange : public Error {
public:
    explicit ParamOutOfRange(const std::string& msg) : Error(msg) {}
};

class NotSeparable : public Error {
public:
    explicit NotSeparable(const std::string& msg) : Error(msg) {}
};

class NotDensityMatrix : public Error {
public:
    explicit NotDensityMatrix(const std::string& msg) : Error(msg) {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

}  // namespace qgames
