#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hopfrep {

// Single exception type carrying a machine-readable kind tag.  The CLI maps
// kinds onto its error JSON; library callers can switch on kind() without
// string-parsing the message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& message) {
    throw Error(kind, message);
}

namespace errk {
inline constexpr const char* DivisionByZero = "DivisionByZero";
inline constexpr const char* ParseError = "ParseError";
inline constexpr const char* OrderMismatch = "OrderMismatch";
inline constexpr const char* DimensionMismatch = "DimensionMismatch";
inline constexpr const char* InstanceMismatch = "InstanceMismatch";
inline constexpr const char* ParamMismatch = "ParamMismatch";
inline constexpr const char* InvalidLabel = "InvalidLabel";
inline constexpr const char* InvalidParams = "InvalidParams";
inline constexpr const char* NotARepresentation = "NotARepresentation";
inline constexpr const char* NonIntegralMultiplicity = "NonIntegralMultiplicity";
inline constexpr const char* NotExtendable = "NotExtendable";
inline constexpr const char* NotAFourthRoot = "NotAFourthRoot";
inline constexpr const char* PreconditionViolated = "PreconditionViolated";
inline constexpr const char* CapExceeded = "CapExceeded";
inline constexpr const char* NotAnOpenCase = "NotAnOpenCase";
inline constexpr const char* Undecided = "Undecided";
inline constexpr const char* RewriteBudgetExceeded = "RewriteBudgetExceeded";
inline constexpr const char* InternalError = "InternalError";
} // namespace errk

} // namespace hopfrep
