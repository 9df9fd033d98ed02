#include "rbgs/textio.hpp"

#include <cctype>
#include <sstream>

namespace rbgs {

namespace {

std::string gen_name(int32_t id) {
    if (id == kStar) return "*";
    if (is_var_id(id)) return "x" + std::to_string(id - kVarBase);
    return "x" + std::to_string(id);
}

std::string int_str(const Int& v) { return v.str(); }

// One monomial c*L^k, c > 0 assumed handled by caller for sign.
std::string lmono_str(const Int& c, int k) {
    std::string s;
    bool unit = c == 1;
    if (!unit || k == 0) s += int_str(c);
    if (k > 0) {
        if (!unit) s += "*";
        s += "L";
        if (k > 1) s += "^" + std::to_string(k);
    }
    return s;
}

} // namespace

std::string print_lpoly(const LPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int k = p.degree(); k >= 0; --k) {
        const Int& c = p[k];
        if (c == 0) continue;
        if (!s.empty()) s += c > 0 ? "+" : "-";
        else if (c < 0) s += "-";
        s += lmono_str(abs(c), k);
    }
    return s;
}

std::string print_word(const Word& w) {
    std::string s;
    for (const auto& l : w.letters()) {
        if (!s.empty()) s += "*";
        if (l.is_gen())
            s += gen_name(l.gen());
        else
            s += "R(" + print_word(l.inner()) + ")";
    }
    return s;
}

std::string print_coeff(const Coeff& c) {
    const LPoly& num = c.num();
    const LPoly& den = c.den();
    bool den_is_one = den.degree() == 0 && den.leading() == 1;
    // Count nonzero numerator monomials.
    int nterms = 0;
    int mono_k = -1;
    for (int k = 0; k <= num.degree(); ++k)
        if (num[k] != 0) {
            ++nterms;
            mono_k = k;
        }
    if (den.degree() == 0 && nterms == 1) {
        // rational * L^k
        Int n = abs(num[mono_k]);
        Int d = den.leading();
        Int g = boost::multiprecision::gcd(n, d);
        n /= g;
        d /= g;
        std::string s = lmono_str(n, mono_k);
        if (d != 1) {
            // n/d in front; lmono_str printed n already (or skipped a unit)
            s = int_str(n) + "/" + int_str(d);
            if (mono_k > 0) {
                s += "*L";
                if (mono_k > 1) s += "^" + std::to_string(mono_k);
            }
        }
        return s;
    }
    std::string s = "(" + print_lpoly(num.leading() < 0 ? -num : num) + ")";
    if (!den_is_one) s += "/(" + print_lpoly(den) + ")";
    return s;
}

std::string print_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [w, c] : p.terms()) {
        bool neg = c.num().leading() < 0;
        Coeff a = neg ? -c : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (!a.is_one()) s += print_coeff(a) + "*";
        s += print_word(w);
    }
    return s;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    Poly parse() {
        skip_ws();
        Poly p = parse_sum();
        skip_ws();
        if (pos_ != s_.size()) fail("end of input");
        return p;
    }

    Rat rational_only() {
        skip_ws();
        bool neg = eat('-');
        Rat r = parse_rat();
        skip_ws();
        if (pos_ != s_.size()) fail("end of input");
        return neg ? -r : r;
    }

private:
    [[noreturn]] void fail(const std::string& expected) {
        size_t line = 1, col = 1;
        for (size_t i = 0; i < pos_ && i < s_.size(); ++i) {
            if (s_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::ostringstream os;
        os << line << ":" << col << ": expected " << expected;
        if (pos_ < s_.size())
            os << ", found '" << s_[pos_] << "'";
        else
            os << ", found end of input";
        throw Error(Errc::ParseError, os.str());
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    bool eat(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!eat(c)) fail(what);
    }

    Int parse_nat() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("digit");
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += s_[pos_++];
        return Int(digits);
    }

    Rat parse_rat() {
        Int n = parse_nat();
        if (eat('/')) {
            Int d = parse_nat();
            if (d == 0) fail("nonzero denominator");
            return Rat(n) / Rat(d);
        }
        return Rat(n);
    }

    // L [^nat]
    Coeff parse_lpow() {
        expect('L', "'L'");
        int k = 1;
        if (eat('^')) k = static_cast<int>(parse_nat());
        return Coeff::lambda_pow(k);
    }

    bool at_lpoly_start() {
        skip_ws();
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'L' || c == '(' || c == '-';
    }

    // Sum of rational*L^k monomials, used inside parenthesized coefficients.
    Coeff parse_lsum() {
        Coeff acc = Coeff::zero();
        bool neg = eat('-');
        for (;;) {
            Coeff m = parse_simple_coeff();
            acc = neg ? acc - m : acc + m;
            skip_ws();
            if (eat('+'))
                neg = false;
            else if (eat('-'))
                neg = true;
            else
                break;
        }
        return acc;
    }

    // rational ['*'? L [^nat]] | L [^nat]
    Coeff parse_simple_coeff() {
        skip_ws();
        if (peek() == 'L') return parse_lpow();
        Rat r = parse_rat();
        size_t save = pos_;
        bool star = eat('*');
        skip_ws();
        if (peek() == 'L') return Coeff(r) * parse_lpow();
        if (star) pos_ = save; // the '*' belongs to the term level
        return Coeff(r);
    }

    // '(' lsum ')' ['/' '(' lsum ')'] | simple
    Coeff parse_coeff() {
        skip_ws();
        if (peek() == '(') {
            expect('(', "'('");
            Coeff num = parse_lsum();
            expect(')', "')'");
            if (eat('/')) {
                expect('(', "'('");
                Coeff den = parse_lsum();
                expect(')', "')'");
                if (den.is_zero()) fail("nonzero denominator");
                return num / den;
            }
            return num;
        }
        return parse_simple_coeff();
    }

    Word parse_factor_word() {
        skip_ws();
        char c = peek();
        if (c == 'x') {
            ++pos_;
            Int id = parse_nat();
            if (id <= 0 || id > 100000) fail("generator index in [1, 100000]");
            return Word::gen(static_cast<int32_t>(id));
        }
        if (c == 'R') {
            ++pos_;
            expect('(', "'(' after R");
            Poly inner = parse_sum();
            expect(')', "')'");
            if (inner.is_zero()) fail("nonempty argument of R");
            if (inner.size() != 1 || !inner.leading_coeff().is_one())
                fail("a single word inside R in word context");
            return Word::r(inner.leading_word());
        }
        fail("'x<digits>' or 'R('");
    }

    // In poly context R(...) may hold a polynomial; handle words whose
    // R-letters carry polynomial arguments by expanding linearity.
    Poly parse_factor() {
        skip_ws();
        char c = peek();
        if (c == 'x') {
            ++pos_;
            Int id = parse_nat();
            if (id <= 0 || id > 100000) fail("generator index in [1, 100000]");
            return Poly::word(Word::gen(static_cast<int32_t>(id)));
        }
        if (c == 'R') {
            ++pos_;
            expect('(', "'(' after R");
            Poly inner = parse_sum();
            expect(')', "')'");
            if (inner.is_zero()) fail("nonempty argument of R");
            return inner.apply_r();
        }
        fail("'x<digits>' or 'R('");
    }

    Poly parse_word_product() {
        Poly p = parse_factor();
        for (;;) {
            size_t save = pos_;
            if (!eat('*')) break;
            skip_ws();
            char c = peek();
            if (c != 'x' && c != 'R') {
                pos_ = save;
                break;
            }
            p = p * parse_factor();
        }
        return p;
    }

    Poly parse_term() {
        skip_ws();
        char c = peek();
        if (c == 'x' || c == 'R') return parse_word_product();
        Coeff k = parse_coeff();
        skip_ws();
        if (eat('*')) {
            skip_ws();
            if (peek() != 'x' && peek() != 'R') fail("word after coefficient");
            return parse_word_product().scaled(k);
        }
        if (k.is_zero()) return Poly();
        fail("word after coefficient (constant terms are not elements of the algebra)");
    }

    Poly parse_sum() {
        Poly acc;
        bool neg = eat('-');
        for (;;) {
            Poly t = parse_term();
            acc = neg ? acc - t : acc + t;
            skip_ws();
            if (eat('+'))
                neg = false;
            else if (eat('-'))
                neg = true;
            else
                break;
        }
        return acc;
    }

    const std::string& s_;
    size_t pos_ = 0;
};

} // namespace

Poly parse_poly(const std::string& text) { return Parser(text).parse(); }

Rat parse_rational(const std::string& text) { return Parser(text).rational_only(); }

} // namespace rbgs
