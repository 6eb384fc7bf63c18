#pragma once
#include <stdexcept>
#include <string>

namespace sympow {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define SYMPOW_DEFINE_ERROR(NAME) \
    struct NAME : Error {         \
        using Error::Error;       \
    }

SYMPOW_DEFINE_ERROR(ZeroInversion);
SYMPOW_DEFINE_ERROR(NotPrime);
SYMPOW_DEFINE_ERROR(LengthMismatch);
SYMPOW_DEFINE_ERROR(ContextMismatch);
SYMPOW_DEFINE_ERROR(ZeroInput);
SYMPOW_DEFINE_ERROR(ParseError);
SYMPOW_DEFINE_ERROR(EmptyIdeal);
SYMPOW_DEFINE_ERROR(ZeroExponent);
SYMPOW_DEFINE_ERROR(ZeroDivisorPolynomial);
SYMPOW_DEFINE_ERROR(NonHomogeneousInput);
SYMPOW_DEFINE_ERROR(MissingDegreeBound);
SYMPOW_DEFINE_ERROR(NotZeroDimensional);
SYMPOW_DEFINE_ERROR(ZeroPoint);
SYMPOW_DEFINE_ERROR(PointNotRational);
SYMPOW_DEFINE_ERROR(RootsOfUnityUnavailable);
SYMPOW_DEFINE_ERROR(BadN);
SYMPOW_DEFINE_ERROR(BadParameter);
SYMPOW_DEFINE_ERROR(DegenerateParameter);
SYMPOW_DEFINE_ERROR(CoincidentPoints);
SYMPOW_DEFINE_ERROR(WrongConfigurationKind);
SYMPOW_DEFINE_ERROR(NoLinesRecorded);
SYMPOW_DEFINE_ERROR(DescentArithmeticFails);
SYMPOW_DEFINE_ERROR(BaseCaseFails);
SYMPOW_DEFINE_ERROR(CertificateMissing);
SYMPOW_DEFINE_ERROR(HypothesisViolated);

#undef SYMPOW_DEFINE_ERROR

// Budget overrun in a Groebner computation; callers either surface it
// (CLI exit code 3) or downgrade the enclosing check to "partial".
struct ResourceCap : Error {
    std::uint64_t pairs_processed = 0;
    int degree_reached = 0;
    ResourceCap(const std::string& what, std::uint64_t pairs, int deg)
        : Error(what), pairs_processed(pairs), degree_reached(deg) {}
};

}  // namespace sympow
