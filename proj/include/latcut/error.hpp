#ifndef LATCUT_ERROR_HPP
#define LATCUT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace latcut {

// Failure kinds surfaced by the library. The CLI maps categories to exit
// codes: usage errors -> 1, verification failures -> 2, exhausted
// windows/budgets -> 3.
enum class Err {
    EmptyPolyhedron,
    OriginNotInterior,
    NonNormalizable,
    DimensionTooLarge,
    DimensionUnsupported,
    UnboundedInput,
    DimMismatch,
    WindowInsufficient,
    NotMaximal,
    NotClassifiable,
    BadParams,
    NotSymmetric,
    NotCompact,
    AllRhsIntegral,
    FullDimRecession,
    BadFraction,
    NotPeriodic,
    NotContinuous,
    NotSublinear,
    OriginValueNonzero,
    NotOnFacet,
    NonCoerciveDirection,
    RankDeficient,
    UnsupportedS,
    NotUnimodular,
    BudgetExhausted,
    BadInput,
};

const char* err_name(Err kind);

class LatcutError : public std::runtime_error {
  public:
    LatcutError(Err kind, const std::string& message)
        : std::runtime_error(std::string(err_name(kind)) + ": " + message),
          kind_(kind) {}

    Err kind() const { return kind_; }

  private:
    Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& message) {
    throw LatcutError(kind, message);
}

}  // namespace latcut

#endif
