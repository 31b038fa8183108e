#pragma once

#include <stdexcept>
#include <string>

namespace numrad {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

struct NotPolyhedral : Error {
    explicit NotPolyhedral(const std::string& msg) : Error("not polyhedral: " + msg) {}
};

struct CapExceeded : Error {
    explicit CapExceeded(const std::string& msg) : Error("vertex cap exceeded: " + msg) {}
};

// A (x, x*) pair failed one of the three state equalities (or the sup-norm
// support condition); `which` names the violated one.
struct NotAState : Error {
    std::string which;
    NotAState(const std::string& which_, const std::string& msg)
        : Error("not a state (" + which_ + "): " + msg), which(which_) {}
};

struct ZeroRadius : Error {
    explicit ZeroRadius(const std::string& msg) : Error("zero numerical radius: " + msg) {}
};

// A corrector's entry hypothesis |x*(Tx)| > 1 - eta was not met.
struct HypothesisFailed : Error {
    double measured_gap;
    double required_gap;
    HypothesisFailed(double measured, double required, const std::string& msg)
        : Error("hypothesis failed: " + msg),
          measured_gap(measured),
          required_gap(required) {}
};

struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& msg) : Error("precondition failed: " + msg) {}
};

// A guaranteed postcondition did not verify numerically; never returned silently.
struct PostconditionFailed : Error {
    explicit PostconditionFailed(const std::string& msg) : Error("postcondition failed: " + msg) {}
};

struct UnsupportedSpace : Error {
    explicit UnsupportedSpace(const std::string& msg) : Error("unsupported space: " + msg) {}
};

struct InfeasibleInstance : Error {
    explicit InfeasibleInstance(const std::string& msg) : Error("infeasible instance: " + msg) {}
};

// An exact mathematical identity asserted by a counterexample run failed.
struct AssertionFailed : Error {
    explicit AssertionFailed(const std::string& msg) : Error("assertion failed: " + msg) {}
};

struct SchemaError : Error {
    explicit SchemaError(const std::string& msg) : Error("schema: " + msg) {}
};

}  // namespace numrad
