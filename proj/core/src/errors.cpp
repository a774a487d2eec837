#include "gdrs/errors.hpp"

namespace gdrs {

std::string_view errc_name(Errc c) noexcept {
    switch (c) {
        case Errc::NotPrimePower: return "NotPrimePower";
        case Errc::NoModulusAvailable: return "NoModulusAvailable";
        case Errc::InvalidModulus: return "InvalidModulus";
        case Errc::LogOfZero: return "LogOfZero";
        case Errc::MuOutOfRange: return "MuOutOfRange";
        case Errc::NonIntegralCount: return "NonIntegralCount";
        case Errc::NonIntegralResult: return "NonIntegralResult";
        case Errc::RouteMismatch: return "RouteMismatch";
        case Errc::MassMismatch: return "MassMismatch";
        case Errc::DistanceTooSmall: return "DistanceTooSmall";
        case Errc::NotUniformCase: return "NotUniformCase";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace gdrs
