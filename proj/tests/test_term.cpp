#include <doctest.h>

#include "rbgs/gsb.hpp"
#include "rbgs/relations.hpp"
#include "rbgs/poly.hpp"
#include "rbgs/sampling.hpp"
#include "rbgs/textio.hpp"

using namespace rbgs;

namespace {
Word g(int i) { return Word::gen(i); }
Word cat(const Word& a, const Word& b) { return Word::concat(a, b); }
} // namespace

TEST_CASE("degrees") {
    Word x1x2 = cat(g(1), g(2));
    CHECK(x1x2.deg_r() == 0);
    CHECK(x1x2.deg() == 2);
    Word w = Word::r(cat(Word::r(g(1)), g(2))); // R(R(x1)x2)
    CHECK(w.deg_r() == 2);
    CHECK(w.deg() == 1);
    Word v = cat(Word::r(Word::r(g(1))), Word::r(g(2))); // R(R(x1))R(x2)
    CHECK(v.deg() == 2);
    CHECK(v.deg_r() == 3);
    CHECK(v.deg_x() == 2);
}

TEST_CASE("order examples") {
    CHECK(compare(g(1), Word::r(g(1))) == Cmp::Less);
    Word u = cat(Word::r(g(1)), g(2));
    CHECK(compare(u, u) == Cmp::Equal);
    // deg_r dominates: R(x1)x2 > x1x2x3
    CHECK(compare(cat(Word::r(g(1)), g(2)), cat(cat(g(1), g(2)), g(3))) == Cmp::Greater);
    // deg-lex at equal deg_r: longer word wins, then letters from the left
    CHECK(word_less(Word::r(cat(g(1), Word::r(g(2)))), cat(Word::r(g(1)), Word::r(g(2)))));
    CHECK(word_less(g(1), g(2)));
    CHECK(word_less(Word::r(g(1)), Word::r(g(2))));
}

TEST_CASE("substitute star words") {
    Word q1 = cat(Word::r(g(kStar)), g(2));
    CHECK(is_star_word(q1));
    CHECK(print_word(substitute(q1, g(1))) == "R(x1)*x2");
    CHECK(print_word(substitute(Word::gen(kStar), Word::r(g(1)))) == "R(x1)");
    Word q3 = cat(g(1), Word::r(cat(g(kStar), g(2)))); // x1 R(* x2)
    CHECK(print_word(substitute(q3, Word::r(g(3)))) == "x1*R(R(x3)*x2)");
    // substitution splices multi-letter words
    CHECK(print_word(substitute(q1, cat(g(1), g(3)))) == "R(x1*x3)*x2");
}

TEST_CASE("order is total and transitive on random samples") {
    Sampler s(3);
    for (int i = 0; i < 10000; ++i) {
        Word a = s.word(3, 5, 4), b = s.word(3, 5, 4), c = s.word(3, 5, 4);
        Cmp ab = compare(a, b);
        CHECK(static_cast<int>(ab) == -static_cast<int>(compare(b, a)));
        if (ab == Cmp::Equal) CHECK(print_word(a) == print_word(b));
        if (compare(a, b) != Cmp::Greater && compare(b, c) != Cmp::Greater)
            CHECK(compare(a, c) != Cmp::Greater);
    }
}

TEST_CASE("order is monomial under star contexts") {
    Sampler s(5);
    for (int i = 0; i < 5000; ++i) {
        Word u = s.word(3, 4, 3), v = s.word(3, 4, 3);
        if (word_eq(u, v)) continue;
        if (word_less(v, u)) std::swap(u, v);
        Word q = s.star_word(2, 4, 3);
        CHECK(word_less(substitute(q, u), substitute(q, v)));
    }
}

TEST_CASE("well-foundedness at desk scale: bounded word sets are finite chains") {
    auto words = enumerate_words(2, 3, 2);
    CHECK(words.size() > 0);
    for (size_t i = 0; i + 1 < words.size(); ++i) CHECK(word_less(words[i], words[i + 1]));
}

TEST_CASE("polynomials: leading, monic, arithmetic") {
    Word lead = cat(Word::r(g(1)), Word::r(g(2)));     // R(x1)R(x2)
    Word tail = Word::r(cat(Word::r(g(1)), g(2)));     // R(R(x1)x2)
    Poly f = Poly::word(lead) - Poly::word(tail);
    CHECK(word_eq(f.leading_word(), lead));
    CHECK(f.leading_coeff().is_one());
    Poly c = Poly::term(Coeff(Int(3)), tail);
    CHECK(word_eq(c.leading_word(), tail));
    CHECK(c.monic().leading_coeff().is_one());
    CHECK((f - f).is_zero());
    CHECK_THROWS_AS(Poly().leading_word(), Error);

    // apply_r is linear
    Poly sum = Poly::word(g(1)) + Poly::word(g(2));
    CHECK(print_poly(sum.apply_r()) == "R(x2) + R(x1)");
    // one-sided word multiplication
    Poly prods = sum.mul_word(g(3), Word());
    CHECK(print_poly(prods) == "x3*x2 + x3*x1");
    // no zero coefficients survive arithmetic
    Poly z = f + (-f);
    CHECK(z.terms().empty());
}

TEST_CASE("leading of generated R3 instance (k=2, l=1)") {
    GenParams p;
    p.k = 2;
    p.l = 1;
    auto r3 = rel_r3(p);
    REQUIRE(r3.has_value());
    // fbar_3 = R^2(R^{k+l-1}(x1) x2)
    Word expect = Word::r(Word::r(cat(Word::r_pow(2, Word::gen(kVarBase + 1)),
                                      Word::gen(kVarBase + 2))));
    CHECK(word_eq(r3->leading_word(), expect));
}
