#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "rbgs/error.hpp"

namespace rbgs {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Integer-coefficient polynomial in the formal parameter L (= lambda),
/// dense representation, coefficient of L^i at index i, no trailing zeros.
class LPoly {
public:
    LPoly() = default;
    explicit LPoly(Int constant);
    static LPoly monomial(Int c, int degree);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const Int& operator[](int i) const;
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& leading() const;

    LPoly operator+(const LPoly& o) const;
    LPoly operator-(const LPoly& o) const;
    LPoly operator*(const LPoly& o) const;
    LPoly operator-() const;
    bool operator==(const LPoly& o) const { return c_ == o.c_; }

    /// Exact division; throws logic_error if the division is not exact.
    LPoly divide_exact(const LPoly& d) const;

    Int content() const;        // gcd of coefficients, sign of leading
    LPoly primitive_part() const;
    Rat eval(const Rat& x) const;

    static LPoly from_coeffs(std::vector<Int> c);

private:
    void trim();
    std::vector<Int> c_;
};

LPoly gcd(const LPoly& a, const LPoly& b);

enum class LambdaKind { Symbolic, Zero, Numeric };

/// Generation/specialization mode for lambda. Numeric requires c != 0; the
/// c = 0 case must use Zero, which changes which relations are generated.
struct LambdaMode {
    LambdaKind kind = LambdaKind::Symbolic;
    Rat value = 0;

    static LambdaMode symbolic() { return {LambdaKind::Symbolic, 0}; }
    static LambdaMode zero() { return {LambdaKind::Zero, 0}; }
    static LambdaMode numeric(const Rat& c);
    bool operator==(const LambdaMode& o) const { return kind == o.kind && value == o.value; }
};

/// Element of Q(L): quotient of integer polynomials in L, kept canonical
/// (gcd(num, den) a unit, den nonzero with positive leading coefficient,
/// zero represented as 0/1).
class Coeff {
public:
    Coeff() : num_(), den_(Int(1)) {}
    Coeff(Int n) : num_(std::move(n)), den_(Int(1)) { canon(); }
    Coeff(const Rat& r);
    Coeff(LPoly num, LPoly den);

    static Coeff zero() { return Coeff(); }
    static Coeff one() { return Coeff(Int(1)); }
    static Coeff lambda() { return Coeff(LPoly::monomial(1, 1), LPoly(Int(1))); }
    static Coeff lambda_pow(int e) { return Coeff(LPoly::monomial(1, e), LPoly(Int(1))); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    const LPoly& num() const { return num_; }
    const LPoly& den() const { return den_; }

    Coeff operator+(const Coeff& o) const;
    Coeff operator-(const Coeff& o) const;
    Coeff operator*(const Coeff& o) const;
    Coeff operator/(const Coeff& o) const;
    Coeff operator-() const;
    Coeff inv() const;
    bool operator==(const Coeff& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Coeff& o) const { return !(*this == o); }

    Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
    Coeff& operator*=(const Coeff& o) { return *this = *this * o; }

    /// Evaluation at a rational point; throws PoleAtValue if den vanishes.
    Rat eval(const Rat& x) const;

    /// Evaluation homomorphism per mode; Symbolic returns *this unchanged.
    Coeff specialize(const LambdaMode& mode) const;

    /// Constant rational, if this coefficient is one.
    std::optional<Rat> as_rational() const;

private:
    void canon();
    LPoly num_, den_;
};

/// C(l, t) * lambda^{l-t}, the lambda^{(t)} weight. Requires 0 <= t <= l.
Coeff lambda_binom(int l, int t);

Int binom(int n, int k);
Coeff pow_coeff(const Coeff& base, int e);

} // namespace rbgs
