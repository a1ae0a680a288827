#pragma once

#include <stdexcept>
#include <string>

namespace fedosphere {

struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : EngineError {
    DivisionByZero() : EngineError("division by zero element") {}
    explicit DivisionByZero(const std::string& what) : EngineError(what) {}
};

struct JetOverflow : EngineError {
    explicit JetOverflow(int order, int limit)
        : EngineError("jet order " + std::to_string(order) + " exceeds limit " +
                      std::to_string(limit)) {}
};

struct PoleAtPoint : EngineError {
    PoleAtPoint() : EngineError("denominator vanishes at sampled point") {}
};

struct PoleAtOrigin : EngineError {
    PoleAtOrigin() : EngineError("coefficient has a pole at s = 0") {}
};

struct DegenerateG : EngineError {
    DegenerateG() : EngineError("g-condition denominator is the zero element") {}
};

struct SingularFrame : EngineError {
    SingularFrame() : EngineError("projection frame degenerate at evaluation point") {}
};

struct NonTerminatingStar : EngineError {
    NonTerminatingStar() : EngineError("star product of two Gaussian symbols does not terminate") {}
};

struct DivergentTrace : EngineError {
    DivergentTrace() : EngineError("quadratic form is not negative definite") {}
};

struct TruncationTooSmall : EngineError {
    TruncationTooSmall() : EngineError("epsilon truncation order must be at least 2") {}
};

} // namespace fedosphere
