#include <doctest.h>

#include "rbgs/coeff.hpp"
#include "rbgs/sampling.hpp"
#include "rbgs/textio.hpp"

using namespace rbgs;

namespace {
const Coeff L = Coeff::lambda();
Coeff C(int n) { return Coeff(Int(n)); }
} // namespace

TEST_CASE("coefficient canonical forms") {
    CHECK(Coeff::zero().is_zero());
    CHECK(Coeff::zero().den().degree() == 0);
    CHECK(Coeff::zero().den().leading() == 1);
    // negative denominator normalizes to positive leading coefficient
    Coeff c(LPoly(Int(2)), LPoly(Int(-4)));
    CHECK(c == Coeff(Rat(-1) / Rat(2)));
    // gcd cancellation including polynomial content
    Coeff d(LPoly::monomial(2, 2), LPoly::monomial(4, 1)); // 2L^2 / 4L = L/2
    CHECK(d == L * Coeff(Rat(1) / Rat(2)));
}

TEST_CASE("coeff_add examples") {
    CHECK(L + C(1) == Coeff(LPoly::from_coeffs({Int(1), Int(1)}), LPoly(Int(1))));
    CHECK((L + (-L)).is_zero());
    // 1/L + 1/L = 2/L, cross-checked by evaluation at lambda = 3
    Coeff inv_l = L.inv();
    Coeff sum = inv_l + inv_l;
    CHECK(sum == C(2) / L);
    CHECK(sum.eval(3) == Rat(2) / Rat(3));
    CHECK((inv_l.eval(3) + inv_l.eval(3)) == sum.eval(3));
}

TEST_CASE("coeff_mul and inverse") {
    CHECK(L * L == Coeff::lambda_pow(2));
    CHECK(L.inv() * L == C(1));
    Coeff a = L + C(1), b = L - C(1);
    CHECK(a * b == Coeff::lambda_pow(2) - C(1));
    for (Rat x : {Rat(2), Rat(5)}) CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
    CHECK_THROWS_AS(Coeff::zero().inv(), Error);
}

TEST_CASE("lambda_binom") {
    CHECK(lambda_binom(1, 1) == C(1));
    CHECK(lambda_binom(1, 0) == L);
    CHECK(lambda_binom(2, 1) == C(2) * L);
    CHECK_THROWS_AS(lambda_binom(2, -1), Error);
    CHECK_THROWS_AS(lambda_binom(2, 3), Error);
}

TEST_CASE("specialize") {
    CHECK((C(2) * L).specialize(LambdaMode::zero()).is_zero());
    CHECK((Coeff::lambda_pow(2) - C(1)).specialize(LambdaMode::numeric(1)).is_zero());
    CHECK_THROWS_AS(L.inv().specialize(LambdaMode::zero()), Error);
    CHECK_THROWS_AS(LambdaMode::numeric(0), Error);
    CHECK(L.specialize(LambdaMode::symbolic()) == L);
}

TEST_CASE("field axioms on random coefficients, cross-checked by evaluation") {
    Sampler s(7);
    const Rat points[] = {Rat(3), Rat(-2), Rat(5) / Rat(7)};
    for (int i = 0; i < 300; ++i) {
        Coeff a = s.coeff(2, 5), b = s.coeff(2, 5), c = s.coeff(2, 5);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b * c) == (a * b) * c);
        if (!a.is_zero()) CHECK(a * a.inv() == C(1));
        for (const Rat& x : points) {
            try {
                Rat lhs = ((a * b) + c).eval(x);
                Rat rhs = a.eval(x) * b.eval(x) + c.eval(x);
                CHECK(lhs == rhs);
            } catch (const Error& e) {
                CHECK(e.code() == Errc::PoleAtValue);
            }
        }
    }
}

TEST_CASE("specialize is a ring homomorphism") {
    Sampler s(11);
    LambdaMode mode = LambdaMode::numeric(Rat(5) / Rat(3));
    for (int i = 0; i < 200; ++i) {
        Coeff a = s.coeff(2, 4), b = s.coeff(2, 4), c = s.coeff(2, 4);
        try {
            CHECK((a * b + c).specialize(mode) ==
                  a.specialize(mode) * b.specialize(mode) + c.specialize(mode));
        } catch (const Error& e) {
            CHECK(e.code() == Errc::PoleAtValue);
        }
    }
}

TEST_CASE("lpoly gcd and exact division") {
    // (L+1)(L-1) / (L+1) = L-1
    LPoly a = LPoly::from_coeffs({Int(-1), Int(0), Int(1)});
    LPoly b = LPoly::from_coeffs({Int(1), Int(1)});
    CHECK(a.divide_exact(b) == LPoly::from_coeffs({Int(-1), Int(1)}));
    CHECK(gcd(a, b) == b);
    CHECK(gcd(LPoly(), b) == b);
}
