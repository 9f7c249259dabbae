#pragma once

#include <stdexcept>
#include <string>

namespace thetacodes {

enum class Errc {
    NotSquareFree,
    NotThreeMod4,
    PDividesEll,
    NotPrime,
    InsufficientPrecision,
    InternalScaleError,
    GuardExceeded,
    ContextMismatch,
    ArityMismatch,
    EmptyKernel,
    BudgetExceeded,
    UnknownExample,
    ParseError,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

}  // namespace thetacodes
