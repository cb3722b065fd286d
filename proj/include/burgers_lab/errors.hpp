// Error types shared by every module.
//
// GuardError marks a rejected input or a numeric guard (overflow, aliasing,
// conditioning). The command-line front end maps it to exit status 3.
#pragma once

#include <stdexcept>
#include <string>

namespace burgers {

class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an adaptive procedure stops before meeting its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double estimate)
        : std::runtime_error(what), estimate_(estimate) {}
    double estimate() const { return estimate_; }

private:
    double estimate_;
};

// Raised by the nonlinear solver when the state norm leaves the small-data regime.
class BlowUpError : public std::runtime_error {
public:
    BlowUpError(const std::string& what, double time)
        : std::runtime_error(what), time_(time) {}
    double time() const { return time_; }

private:
    double time_;
};

}  // namespace burgers
