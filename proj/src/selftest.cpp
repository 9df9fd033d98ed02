#include "rbgs/selftest.hpp"

#include "rbgs/rewrite.hpp"
#include "rbgs/sampling.hpp"
#include "rbgs/textio.hpp"

namespace rbgs {

std::vector<PropertyResult> run_property_suite(uint64_t seed, long long order_samples,
                                               long long confluence_samples,
                                               long long reduce_samples) {
    std::vector<PropertyResult> out;
    Sampler s(seed);

    {
        PropertyResult r{"order totality/antisymmetry/transitivity", 0, 0};
        for (long long i = 0; i < order_samples; ++i) {
            Word a = s.word(3, 5, 4), b = s.word(3, 5, 4), c = s.word(3, 5, 4);
            ++r.samples;
            Cmp ab = compare(a, b), ba = compare(b, a);
            if (static_cast<int>(ab) != -static_cast<int>(ba)) ++r.failures;
            if (ab == Cmp::Equal && !(print_word(a) == print_word(b))) ++r.failures;
            // transitivity on the sorted triple
            const Word* lo = &a;
            const Word* mid = &b;
            const Word* hi = &c;
            if (word_less(*mid, *lo)) std::swap(lo, mid);
            if (word_less(*hi, *mid)) std::swap(mid, hi);
            if (word_less(*mid, *lo)) std::swap(lo, mid);
            if (word_less(*hi, *lo)) ++r.failures;
        }
        out.push_back(r);
    }
    {
        PropertyResult r{"monomial compatibility of the order", 0, 0};
        for (long long i = 0; r.samples < order_samples && i < 4 * order_samples; ++i) {
            Word u = s.word(3, 4, 3), v = s.word(3, 4, 3);
            if (word_eq(u, v)) continue;
            if (word_less(v, u)) std::swap(u, v);
            Word q = s.star_word(3, 4, 3);
            ++r.samples;
            if (!word_less(substitute(q, u), substitute(q, v))) ++r.failures;
        }
        out.push_back(r);
    }
    {
        PropertyResult r{"expand_rb confluence across strategies", 0, 0};
        Coeff lam = Coeff::lambda();
        RbExpander outer(lam, RbStrategy::LeftmostOutermost);
        RbExpander inner(lam, RbStrategy::LeftmostInnermost);
        for (long long i = 0; i < confluence_samples; ++i) {
            Word w = s.word(3, 5, 4);
            ++r.samples;
            if (!(outer.expand_word(w) == inner.expand_word(w))) ++r.failures;
        }
        out.push_back(r);
    }
    {
        GenParams p;
        p.k = 2;
        p.l = 1;
        p.m_max = 3;
        RuleSet rules = gen_ruleset(p).rules;
        Caps caps = Caps::defaults(2, 1, 3);
        caps.max_deg_x = 16;
        caps.max_deg_r = 16;
        PropertyResult r{"reduce idempotence and certificate replay", 0, 0};
        for (long long i = 0; i < reduce_samples; ++i) {
            Poly f = s.poly(3, 2, 4, 4);
            ++r.samples;
            ReduceResult rr = reduce(f, rules, caps);
            if (!rr.complete) {
                ++r.failures;
                continue;
            }
            if (!(f - rr.normal_form == replay(rr.cert, rules))) ++r.failures;
            ReduceResult again = reduce(rr.normal_form, rules, caps);
            if (!(again.normal_form == rr.normal_form) || !again.cert.empty()) ++r.failures;
        }
        out.push_back(r);
    }
    {
        PropertyResult r{"parse/print round trip", 0, 0};
        for (long long i = 0; i < reduce_samples; ++i) {
            Poly f = s.poly(4, 3, 4, 3);
            ++r.samples;
            if (!(parse_poly(print_poly(f)) == f)) ++r.failures;
        }
        out.push_back(r);
    }
    return out;
}

} // namespace rbgs
