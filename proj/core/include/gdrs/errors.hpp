#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gdrs {

enum class Errc {
    NotPrimePower,
    NoModulusAvailable,
    InvalidModulus,
    LogOfZero,
    MuOutOfRange,
    NonIntegralCount,
    NonIntegralResult,
    RouteMismatch,
    MassMismatch,
    DistanceTooSmall,
    NotUniformCase,
    BudgetExceeded,
    InvalidArgument,
};

std::string_view errc_name(Errc c) noexcept;

/// Every library failure is reported through this type; `code()` says which.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace gdrs
