#ifndef TOPOS_COMMON_HPP
#define TOPOS_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace topos {

// Default cap on the total number of elements/candidates an enumeration may
// produce before giving up with BudgetExceeded.
inline constexpr std::size_t kDefaultBudget = 1'000'000;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownObject : Error {
    using Error::Error;
};
struct UnknownMorphism : Error {
    using Error::Error;
};
struct CodomainMismatch : Error {
    using Error::Error;
};
struct BaseMismatch : Error {
    using Error::Error;
};
struct IllTypedDiagram : Error {
    using Error::Error;
};
struct BudgetExceeded : Error {
    using Error::Error;
};
struct NotNatural : Error {
    using Error::Error;
};
struct NotWeak : Error {
    using Error::Error;
};
struct AxiomViolation : Error {
    using Error::Error;
};
struct ConditionViolation : Error {
    using Error::Error;
};

// Raised when a construction requires a separated object; carries the stage
// and the two elements the candidate map failed to distinguish.
struct NotSeparated : Error {
    NotSeparated(std::string stage, std::string lhs, std::string rhs)
        : Error("object is not separated: stage " + stage + " identifies '" + lhs + "' and '" +
                rhs + "'"),
          stage(std::move(stage)), lhs(std::move(lhs)), rhs(std::move(rhs)) {}
    std::string stage, lhs, rhs;
};

} // namespace topos

#endif
