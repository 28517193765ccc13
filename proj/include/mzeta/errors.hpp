#pragma once
#include <stdexcept>
#include <string>

namespace mz {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define MZ_ERROR(Name)                      \
    struct Name : Error {                   \
        using Error::Error;                 \
    };

struct SyntaxError : Error {
    std::size_t position;
    std::string expected;
    SyntaxError(std::size_t pos, std::string exp)
        : Error("syntax error at position " + std::to_string(pos) + ": expected " + exp),
          position(pos), expected(std::move(exp)) {}
};

MZ_ERROR(ConstantTermError)
MZ_ERROR(UnknownVariableError)
MZ_ERROR(EmptyPolyError)
MZ_ERROR(ZeroPolynomialError)
MZ_ERROR(NotOnEdgeError)
MZ_ERROR(DimensionError)
MZ_ERROR(NegativeDirectionError)
MZ_ERROR(RefinementFailure)
MZ_ERROR(DegenerateFaceError)
MZ_ERROR(SingularCurveError)
MZ_ERROR(UncertifiedTraceError)
MZ_ERROR(UnsupportedMeasureError)
MZ_ERROR(NotConvenientError)
MZ_ERROR(NondegeneracyRequiredError)
MZ_ERROR(CancellationFailure)
MZ_ERROR(DivisibilityError)
MZ_ERROR(BoundViolation)
MZ_ERROR(HorizonTooSmall)
MZ_ERROR(NotWeightedHomogeneousError)
MZ_ERROR(OutOfScopeHvNegative)
MZ_ERROR(AmbiguousError)
MZ_ERROR(OverflowError)

#undef MZ_ERROR

}  // namespace mz
