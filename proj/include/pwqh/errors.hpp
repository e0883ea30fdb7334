#pragma once

#include <stdexcept>
#include <string>

namespace pwqh {

// Base class for all recoverable domain errors raised by the library.
// The CLI maps these to exit code 1; everything else is a usage/IO error.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define PWQH_DEFINE_ERROR(Name, Kind)                                  \
    class Name : public Error {                                        \
    public:                                                            \
        explicit Name(const std::string& msg) : Error(Kind, msg) {}    \
    }

PWQH_DEFINE_ERROR(ZeroFieldError, "ZeroField");
PWQH_DEFINE_ERROR(NotQuasiHomogeneousError, "NotQuasiHomogeneous");
PWQH_DEFINE_ERROR(NotQuadraticNonHomogeneousError, "NotQuadraticNonHomogeneous");
PWQH_DEFINE_ERROR(ShapeMismatchError, "ShapeMismatch");
PWQH_DEFINE_ERROR(ZeroParameterError, "ZeroParameter");
PWQH_DEFINE_ERROR(IntegralDomainError, "DomainError");
PWQH_DEFINE_ERROR(NotACenterError, "NotACenter");
PWQH_DEFINE_ERROR(IntegrationFailureError, "IntegrationFailure");
PWQH_DEFINE_ERROR(QuadratureFailureError, "QuadratureFailure");
PWQH_DEFINE_ERROR(DegreeMismatchError, "DegreeMismatch");
PWQH_DEFINE_ERROR(EmptyPolyError, "EmptyPoly");
PWQH_DEFINE_ERROR(TooManyRootsError, "TooManyRoots");
PWQH_DEFINE_ERROR(DuplicateRootsError, "DuplicateRoots");
PWQH_DEFINE_ERROR(DegenerateParameterError, "DegenerateParameter");
PWQH_DEFINE_ERROR(RenderBudgetExceededError, "RenderBudgetExceeded");
PWQH_DEFINE_ERROR(StartOnSlidingError, "StartOnSliding");
PWQH_DEFINE_ERROR(StepBudgetExceededError, "StepBudgetExceeded");
PWQH_DEFINE_ERROR(NoReturnError, "NoReturn");

#undef PWQH_DEFINE_ERROR

} // namespace pwqh
