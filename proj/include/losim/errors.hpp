#pragma once

#include <stdexcept>
#include <string>

namespace losim {

/// Rejected inputs: bad dimensions, mode indices, malformed configs, unusable files.
class validation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation left its guaranteed accuracy envelope.
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Truncated-Fock simulation lost more norm than the leakage budget allows.
/// Carries the measured leakage so callers can report how far off the cutoff was.
class cutoff_error : public numerical_error {
public:
    cutoff_error(const std::string& what, double leakage)
        : numerical_error(what), leakage_(leakage) {}

    double leakage() const noexcept { return leakage_; }

private:
    double leakage_;
};

} // namespace losim
