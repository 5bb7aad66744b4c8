#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tagdecay {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A model constraint was violated (m <= 0, x0 < 0, negative elapsed time, ...).
class ConstraintError : public Error {
public:
    using Error::Error;
};

/// An argument is outside its documented range (samples < 2, end <= start, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Forward integration step size outside the stable region. Carries the
/// smallest step count that would be admissible for the same horizon.
class StepSizeError : public ArgumentError {
public:
    StepSizeError(const std::string& what, std::uint64_t min_steps)
        : ArgumentError(what), min_steps_(min_steps) {}

    std::uint64_t min_steps() const { return min_steps_; }

private:
    std::uint64_t min_steps_;
};

/// Not enough usable data points to attempt a fit.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// Data is structurally degenerate (e.g. all abscissae identical).
class DegenerateDataError : public Error {
public:
    using Error::Error;
};

/// Iteration produced non-finite values and could not recover.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Input could not be read.
class IoError : public Error {
public:
    using Error::Error;
};

/// More than half of the input lines failed to parse; the file is almost
/// certainly in a different format than declared.
class CorpusFormatError : public Error {
public:
    using Error::Error;
};

/// An event is newer than the reference instant it is being evaluated at.
class TemporalOrderError : public Error {
public:
    using Error::Error;
};

}  // namespace tagdecay
