#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ldg4 {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A flux or projection weight of exactly 1/2 (or an otherwise unusable weight).
class InvalidWeight : public Error {
public:
    using Error::Error;
};

class SingularSystem : public Error {
public:
    using Error::Error;
};

class LevelOutOfRange : public Error {
public:
    using Error::Error;
};

class InvalidConfig : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Non-finite coefficients detected during time stepping.
class BlowUp : public Error {
public:
    BlowUp(std::size_t step, double time)
        : Error("solution blew up at step " + std::to_string(step) + " (t = " + std::to_string(time) + ")"),
          step_(step),
          time_(time) {}

    std::size_t step() const noexcept { return step_; }
    double time() const noexcept { return time_; }

private:
    std::size_t step_;
    double time_;
};

}  // namespace ldg4
