#pragma once

#include <map>
#include <utility>

#include "rbgs/coeff.hpp"
#include "rbgs/term.hpp"

namespace rbgs {

/// Finite linear combination of words with nonzero coefficients, ordered so
/// that begin() is the leading term under the monomial order.
class Poly {
public:
    using Map = std::map<Word, Coeff, WordGreater>;

    Poly() = default;
    static Poly term(Coeff c, Word w);
    static Poly word(Word w) { return term(Coeff::one(), std::move(w)); }

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }

    const Word& leading_word() const;
    const Coeff& leading_coeff() const;

    Poly& add_term(const Coeff& c, const Word& w);
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Coeff& c) const;
    Poly monic() const; // divide by leading coefficient
    bool operator==(const Poly& o) const;

    friend Poly operator*(const Poly& a, const Poly& b); // concatenation product
    Poly apply_r() const;                                // w -> R(w), linearly

    /// Left/right multiplication by a word (empty word allowed = identity).
    Poly mul_word(const Word& left, const Word& right) const;

    Coeff coeff_of(const Word& w) const;

private:
    Map terms_;
};

/// Substitute into every word of q's place: q|_f = sum_w f_w * q|_w.
Poly substitute(const Word& q, const Poly& f);

} // namespace rbgs
