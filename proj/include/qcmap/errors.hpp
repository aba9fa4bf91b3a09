// errors.hpp - Exception hierarchy.
//
// Two families: ValidationError (bad input, malformed config, unsupported
// request) and NumericalError (the mathematics failed while running). The CLI
// maps them to exit codes 1 and 2.

#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qcmap {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

// A HamiltonianSpec that violates its invariants, or an operation asked to
// handle a kind it does not support.
class SpecificationError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DomainError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
public:
    ParseError(std::size_t line, const std::string& what)
        : ValidationError(format(line, what)), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    static std::string format(std::size_t line, const std::string& what) {
        std::ostringstream os;
        os << "line " << line << ": " << what;
        return os.str();
    }
    std::size_t line_;
};

class NumericalError : public Error {
public:
    NumericalError(const std::string& what, double time) : Error(what), time_(time) {}
    double time() const noexcept { return time_; }

private:
    double time_;
};

// Required step fell below the underflow threshold.
class StiffnessError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class DivergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class SingularityError : public NumericalError {
public:
    SingularityError(const std::string& what, double time, double determinant)
        : NumericalError(what, time), determinant_(determinant) {}
    double determinant() const noexcept { return determinant_; }

private:
    double determinant_;
};

class NegativeFrequencyError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Runs f() and rethrows numerical failures with `context` prefixed, keeping
// the concrete error type and its diagnostics.
template <class F>
decltype(auto) with_context(const std::string& context, F&& f) {
    try {
        return f();
    } catch (const SingularityError& e) {
        throw SingularityError(context + ": " + e.what(), e.time(), e.determinant());
    } catch (const NegativeFrequencyError& e) {
        throw NegativeFrequencyError(context + ": " + e.what(), e.time());
    } catch (const StiffnessError& e) {
        throw StiffnessError(context + ": " + e.what(), e.time());
    } catch (const DivergenceError& e) {
        throw DivergenceError(context + ": " + e.what(), e.time());
    }
}

}  // namespace qcmap
