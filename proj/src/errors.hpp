#pragma once

#include <stdexcept>
#include <string>

namespace cftail {

/// Machine-readable failure categories. Every library error carries one so
/// the C API and the CLI can map failures to stable codes without parsing
/// message text.
enum class ErrorCode {
    invalid_parameter,     // bad argument values (domain of a constructor/op)
    empty_sample,          // sample container had no entries
    nonfinite_sample,      // sample contained NaN/inf
    rejected_polynomial,   // polynomial failed the non-negativity check
    division_domain,       // a_0 <= 0 or vanishing denominator
    analyticity_domain,    // s outside the radius/strip the method needs
    unsupported,           // operation not available for this input
    overflow,              // evaluation overflowed; try smaller s
    convergence,           // quadrature evaluation budget exceeded
    integrand_domain,      // integrand returned a non-finite value
    internal_consistency,  // two algebraically equal routes disagreed
    io_error,              // sample file unreadable or malformed
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace cftail
