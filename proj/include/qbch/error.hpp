#ifndef QBCH_ERROR_HPP
#define QBCH_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qbch {

enum class Errc {
    NotPrime,
    FieldTooLarge,
    FieldMismatch,
    DivisionByZero,
    WrongOrder,
    CoefficientOutsideSubfield,
    NotCoprime,
    DeltaOutOfRange,
    HypothesisViolated,
    NotApplicable,
    NotNested,
    InvalidArgument,
};

constexpr std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::FieldTooLarge: return "FieldTooLarge";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::WrongOrder: return "WrongOrder";
        case Errc::CoefficientOutsideSubfield: return "CoefficientOutsideSubfield";
        case Errc::NotCoprime: return "NotCoprime";
        case Errc::DeltaOutOfRange: return "DeltaOutOfRange";
        case Errc::HypothesisViolated: return "HypothesisViolated";
        case Errc::NotApplicable: return "NotApplicable";
        case Errc::NotNested: return "NotNested";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the Errc codes so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace qbch

#endif  // QBCH_ERROR_HPP
