#include "rbgs/poly.hpp"

namespace rbgs {

Poly Poly::term(Coeff c, Word w) {
    Poly p;
    p.add_term(c, w);
    return p;
}

const Word& Poly::leading_word() const {
    if (terms_.empty()) throw Error(Errc::ZeroPolynomial, "leading word of zero polynomial");
    return terms_.begin()->first;
}

const Coeff& Poly::leading_coeff() const {
    if (terms_.empty()) throw Error(Errc::ZeroPolynomial, "leading coeff of zero polynomial");
    return terms_.begin()->second;
}

Poly& Poly::add_term(const Coeff& c, const Word& w) {
    if (c.is_zero()) return *this;
    RBGS_CHECK(!w.empty(), "empty word in polynomial");
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(c, w);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(-c, w);
    return r;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

Poly Poly::scaled(const Coeff& c) const {
    if (c.is_zero()) return Poly();
    Poly r;
    for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) throw Error(Errc::ZeroPolynomial, "monic of zero polynomial");
    return scaled(leading_coeff().inv());
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (!word_eq(it->first, jt->first) || !(it->second == jt->second)) return false;
    }
    return true;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) r.add_term(ca * cb, Word::concat(wa, wb));
    return r;
}

Poly Poly::apply_r() const {
    Poly r;
    for (const auto& [w, c] : terms_) r.add_term(c, Word::r(w));
    return r;
}

Poly Poly::mul_word(const Word& left, const Word& right) const {
    Poly r;
    for (const auto& [w, c] : terms_)
        r.add_term(c, Word::concat(Word::concat(left, w), right));
    return r;
}

Coeff Poly::coeff_of(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Coeff::zero() : it->second;
}

Poly substitute(const Word& q, const Poly& f) {
    Poly r;
    for (const auto& [w, c] : f.terms()) r.add_term(c, substitute(q, w));
    return r;
}

} // namespace rbgs
