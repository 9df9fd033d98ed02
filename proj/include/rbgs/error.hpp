#pragma once

#include <stdexcept>
#include <string>

namespace rbgs {

enum class Errc {
    DivisionByZero,
    PoleAtValue,
    OutOfRange,
    ZeroPolynomial,
    ArityMismatch,
    InvalidParams,
    CapExceeded,
    IndexOutOfRange,
    ParseError,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

// Internal invariant check, always on: this engine is a verifier, so its own
// soundness assertions are part of the product.
#define RBGS_CHECK(cond, msg)                                                  \
    do {                                                                       \
        if (!(cond)) throw std::logic_error(std::string("invariant: ") + msg); \
    } while (0)

} // namespace rbgs
