#pragma once

#include <stdexcept>
#include <string>

namespace viewprop {

// Caller broke a precondition (mismatched variable sets, wrong sorts, ...).
class UsageError : public std::logic_error {
public:
    explicit UsageError(const std::string& what) : std::logic_error(what) {}
};

// A view image left the configured value universe.
class OverflowError : public std::runtime_error {
public:
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

// A propagator violated its contract (e.g. produced a non-contracting result).
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

// An enumeration would exceed its configured cap; carries the size estimate.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& what, double estimate)
        : std::runtime_error(what), estimate_(estimate) {}
    double estimate() const { return estimate_; }

private:
    double estimate_;
};

// Model file could not be parsed; carries the offending line number.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

} // namespace viewprop
