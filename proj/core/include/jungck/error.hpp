#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "jungck/point.hpp"

namespace jungck {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidPoint : public Error {
public:
    using Error::Error;
};

class InvalidSpace : public Error {
public:
    using Error::Error;
};

/// An indexed space was asked for a point beyond its materialization budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::size_t requested, std::size_t budget);
    std::size_t requested() const noexcept { return requested_; }
    std::size_t budget() const noexcept { return budget_; }

private:
    std::size_t requested_;
    std::size_t budget_;
};

/// Expression or implicit-function evaluation left its domain
/// (division by zero, invalid power, non-finite result).
class DomainError : public Error {
public:
    DomainError(const std::string& what, std::vector<double> inputs);
    const std::vector<double>& inputs() const noexcept { return inputs_; }

private:
    std::vector<double> inputs_;
};

class MissingCompanion : public Error {
public:
    using Error::Error;
};

class InvalidEps : public Error {
public:
    using Error::Error;
};

/// T x_n has no S-preimage, i.e. T(X) is not contained in S(X).
class NoPreimage : public Error {
public:
    NoPreimage(const std::string& what, Point target);
    const Point& target() const noexcept { return target_; }

private:
    Point target_;
};

/// No coincidence point was found; carries the smallest residual d(Sx, Tx)
/// observed and where it was attained.
class NoCoincidence : public Error {
public:
    NoCoincidence(const std::string& what, double min_residual, Point argmin);
    double min_residual() const noexcept { return min_residual_; }
    const Point& argmin() const noexcept { return argmin_; }

private:
    double min_residual_;
    Point argmin_;
};

/// Config and expression errors carry a 1-based line and column.
class ConfigError : public Error {
public:
    ConfigError(const std::string& what, std::size_t line, std::size_t column);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class SyntaxError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class UnknownKey : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class ArityError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

}  // namespace jungck
