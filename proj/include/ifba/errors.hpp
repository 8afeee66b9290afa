#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ifba {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A numeric argument is outside its admissible range (e.g. t <= 0, r not in (0,1)).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A value object is malformed (empty table, ragged CSV, bad model spec string).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Two elements that must share an algebra model do not.
class ModelMismatchError : public Error {
public:
    explicit ModelMismatchError(const std::string& msg) : Error(msg) {}
};

// The operation is undefined for this model kind (e.g. inversion on a
// non-unital algebra).
class UnsupportedOperationError : public Error {
public:
    explicit UnsupportedOperationError(const std::string& msg) : Error(msg) {}
};

// File could not be read or parsed.
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

// Series summation aborted: term norms stopped decaying. Carries the norms of
// the partial-sum terms seen so far.
class DivergedError : public Error {
public:
    DivergedError(const std::string& msg, std::vector<double> term_norms)
        : Error(msg), term_norms_(std::move(term_norms)) {}

    const std::vector<double>& term_norms() const { return term_norms_; }

private:
    std::vector<double> term_norms_;
};

} // namespace ifba
