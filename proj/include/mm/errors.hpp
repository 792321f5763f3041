#ifndef MM_ERRORS_HPP
#define MM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mm {

struct Error : std::runtime_error {
    explicit Error(const std::string& m) : std::runtime_error(m) {}
};

struct NoConvergence : Error { using Error::Error; };
struct InsufficientPrecision : Error { using Error::Error; };
struct NotFound : Error { using Error::Error; };
struct PrecisionLoss : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct BadDiscriminant : Error { using Error::Error; };
struct TruncationTooShort : Error { using Error::Error; };
struct KernelNotSubgroup : Error { using Error::Error; };
struct TailBoundExceeded : Error { using Error::Error; };
struct StrategyPrecisionExceeded : Error { using Error::Error; };
struct NotNearInteger : Error { using Error::Error; };
struct SingularSystem : Error { using Error::Error; };
struct ConjugacyViolation : Error { using Error::Error; };
struct AGMBranchFailure : Error { using Error::Error; };

}  // namespace mm

#endif
