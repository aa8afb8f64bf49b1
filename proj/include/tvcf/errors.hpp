#ifndef TVCF_ERRORS_HPP_
#define TVCF_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace tvcf {

// Base class for all engine errors. Each carries a stable machine-readable
// code that the CLI maps into its error object.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error("DOMAIN_ERROR", msg) {}
};

// Raised when a backward fold or the iteration hits an exactly vanishing
// denominator. Near-zero denominators are legitimate and propagate.
class ZeroDenominator : public Error {
public:
    ZeroDenominator(const std::string& msg, long position = -1, long iteration = -1)
        : Error("ZERO_DENOMINATOR", msg), position_(position), iteration_(iteration) {}

    long position() const noexcept { return position_; }
    long iteration() const noexcept { return iteration_; }

private:
    long position_;
    long iteration_;
};

class NotInClassD : public Error {
public:
    explicit NotInClassD(const std::string& msg) : Error("NOT_IN_CLASS_D", msg) {}
};

class DegreeOutOfRange : public Error {
public:
    explicit DegreeOutOfRange(const std::string& msg)
        : Error("DEGREE_OUT_OF_RANGE", msg) {}
};

class DegenerateCoefficient : public Error {
public:
    explicit DegenerateCoefficient(const std::string& msg)
        : Error("DEGENERATE_COEFFICIENT", msg) {}
};

// A sgn() argument sits on a subclass boundary; we refuse to pick a branch.
class BoundaryCondition : public Error {
public:
    explicit BoundaryCondition(const std::string& msg)
        : Error("BOUNDARY_CONDITION", msg) {}
};

class NoConvergence : public Error {
public:
    explicit NoConvergence(const std::string& msg) : Error("NO_CONVERGENCE", msg) {}
};

class RowExhausted : public Error {
public:
    explicit RowExhausted(const std::string& msg) : Error("ROW_EXHAUSTED", msg) {}
};

class UnsupportedResidual : public Error {
public:
    explicit UnsupportedResidual(const std::string& msg)
        : Error("UNSUPPORTED_RESIDUAL", msg) {}
};

class DegenerateInput : public Error {
public:
    explicit DegenerateInput(const std::string& msg)
        : Error("DEGENERATE_INPUT", msg) {}
};

}  // namespace tvcf

#endif  // TVCF_ERRORS_HPP_
