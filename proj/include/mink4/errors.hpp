#pragma once

#include <stdexcept>
#include <string>

namespace mink4 {

// Base class for all library errors. Every failure mode named in the module
// contracts gets its own type so callers can catch precisely.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define MINK4_DEFINE_ERROR(Name)                                      \
    class Name : public Error {                                       \
    public:                                                           \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

MINK4_DEFINE_ERROR(NonFiniteInput);
MINK4_DEFINE_ERROR(DegenerateSpan);
MINK4_DEFINE_ERROR(NotLightlike);
MINK4_DEFINE_ERROR(DegeneratePlane);
MINK4_DEFINE_ERROR(GramMismatch);
MINK4_DEFINE_ERROR(OutOfDomain);
MINK4_DEFINE_ERROR(NotSpacelike);
MINK4_DEFINE_ERROR(NormalsNotNormal);
MINK4_DEFINE_ERROR(FlatPoint);
MINK4_DEFINE_ERROR(NotMarginallyTrapped);
MINK4_DEFINE_ERROR(NotMarginallyTrappedData);
MINK4_DEFINE_ERROR(PrincipalFrameDefect);
MINK4_DEFINE_ERROR(DegenerateMetricRecovery);
MINK4_DEFINE_ERROR(OutOfValidity);
MINK4_DEFINE_ERROR(CurvatureOutOfRange);
MINK4_DEFINE_ERROR(ZeroCurvature);
MINK4_DEFINE_ERROR(QuadratureFailure);
MINK4_DEFINE_ERROR(NonMonotone);
MINK4_DEFINE_ERROR(CompatibilityTooLarge);
MINK4_DEFINE_ERROR(StepFailure);
MINK4_DEFINE_ERROR(ConfigError);
MINK4_DEFINE_ERROR(IoError);
MINK4_DEFINE_ERROR(InternalError);

#undef MINK4_DEFINE_ERROR

} // namespace mink4
