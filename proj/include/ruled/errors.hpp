#pragma once

#include <stdexcept>
#include <string>

namespace ruled {

struct CalcError : std::runtime_error {
    explicit CalcError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotDivisible : CalcError {
    explicit NotDivisible(const std::string& msg) : CalcError(msg) {}
};

struct DegeneratePolygon : CalcError {
    explicit DegeneratePolygon(const std::string& msg) : CalcError(msg) {}
};

struct NotDelzant : CalcError {
    explicit NotDelzant(const std::string& msg) : CalcError(msg) {}
};

struct NonPrimitiveDirection : CalcError {
    explicit NonPrimitiveDirection(const std::string& msg) : CalcError(msg) {}
};

struct UnderdeterminedSystem : CalcError {
    explicit UnderdeterminedSystem(const std::string& msg) : CalcError(msg) {}
};

struct RegularityCheckFailed : CalcError {
    explicit RegularityCheckFailed(const std::string& msg) : CalcError(msg) {}
};

struct SurjectivityFailed : CalcError {
    explicit SurjectivityFailed(const std::string& msg) : CalcError(msg) {}
};

struct NotFree : CalcError {
    explicit NotFree(const std::string& msg) : CalcError(msg) {}
};

struct CoefficientViolation : CalcError {
    explicit CoefficientViolation(const std::string& msg) : CalcError(msg) {}
};

struct NotInvolution : CalcError {
    explicit NotInvolution(const std::string& msg) : CalcError(msg) {}
};

struct IdentityFailed : CalcError {
    explicit IdentityFailed(const std::string& msg) : CalcError(msg) {}
};

struct BadInput : CalcError {
    explicit BadInput(const std::string& msg) : CalcError(msg) {}
};

}  // namespace ruled
