#pragma once

#include <string>

#include "rbgs/poly.hpp"

namespace rbgs {

/// Canonical text forms. Generators print as x<N> (schema variables by their
/// index within the variable block), the star letter as *, R-application as
/// R(...), juxtaposition with * separators. Polynomials print leading term
/// first. parse_poly(print_poly(p)) == p.
std::string print_word(const Word& w);
std::string print_coeff(const Coeff& c); // unsigned canonical form
std::string print_poly(const Poly& p);
std::string print_lpoly(const LPoly& p);

/// Parser for the term grammar; throws Error(Errc::ParseError) with
/// line:column and the expected-token set in the message.
Poly parse_poly(const std::string& text);
Rat parse_rational(const std::string& text);

} // namespace rbgs
