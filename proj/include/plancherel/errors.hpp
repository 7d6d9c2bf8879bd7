#pragma once

#include <stdexcept>
#include <string>

namespace plancherel {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Gamma evaluated at a non-positive integer.
struct PoleError : Error {
    long long pole;
    explicit PoleError(long long p)
        : Error("Gamma pole at " + std::to_string(p)), pole(p) {}
};

struct EmptyEnumeration : Error { using Error::Error; };
struct InvalidSignature : Error { using Error::Error; };
struct InternalError : Error { using Error::Error; };
struct DegenerateTorusPoint : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct NearSingularDenominator : Error { using Error::Error; };
struct SingularKernelPoint : Error { using Error::Error; };
struct NonUnitaryInput : Error { using Error::Error; };
struct IllConditionedDenominator : Error { using Error::Error; };
struct PrefactorPole : Error { using Error::Error; };
struct AnalyticEmpiricalMismatch : Error { using Error::Error; };
struct MixedFamily : Error { using Error::Error; };
struct PoleLine : Error { using Error::Error; };
struct NonConstantResidue : Error { using Error::Error; };

}  // namespace plancherel
