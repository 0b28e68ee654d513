#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pcanon {

enum class ErrorCode {
    Parse,
    NonSquare,
    LevelCap,
    FieldMismatch,
    DimensionMismatch,
    NotSymmetric,
    NotAlternating,
    NotSubPermutation,
    NotPseudoPermutation,
    NotInvolutive,
    NotReduced,
    Char2,
    NotChar2,
    KindMismatch,
    BadComposition,
    CriteriaDisagree,
    TooLarge,
    BudgetExceeded,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can react without parsing the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace pcanon
