#include "rbgs/sampling.hpp"

namespace rbgs {

int Sampler::uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Word Sampler::word(int xsize, int max_deg_x, int max_deg_r) {
    // Budgeted random sequence; every branch keeps at least one generator.
    int dx = std::max(1, uniform(1, max_deg_x));
    int dr = uniform(0, max_deg_r);
    std::vector<Letter> ls;
    while (dx > 0) {
        if (dr > 0 && uniform(0, 2) != 0) {
            int idx = std::max(1, uniform(1, dx));
            int idr = uniform(0, dr - 1);
            ls.push_back(Letter(std::make_shared<const Word>(word(xsize, idx, idr))));
            Word tmp(std::vector<Letter>{ls.back()});
            dx -= tmp.deg_x();
            dr -= tmp.deg_r();
        } else {
            ls.push_back(Letter(uniform(1, xsize)));
            dx -= 1;
        }
        if (uniform(0, 3) == 0) break;
    }
    if (ls.empty()) ls.push_back(Letter(uniform(1, xsize)));
    return Word(std::move(ls));
}

Word Sampler::star_word(int xsize, int max_deg_x, int max_deg_r) {
    Word base = word(xsize, max_deg_x, max_deg_r);
    // Replace a random generator occurrence with the star.
    int count = base.deg_x();
    int pick = uniform(1, count);
    struct Rec {
        int remaining;
        Word run(const Word& w) {
            std::vector<Letter> out;
            for (const auto& l : w.letters()) {
                if (l.is_gen()) {
                    if (--remaining == 0)
                        out.push_back(Letter(kStar));
                    else
                        out.push_back(l);
                } else {
                    out.push_back(Letter(std::make_shared<const Word>(run(l.inner()))));
                }
            }
            return Word(std::move(out));
        }
    } rec{pick};
    return rec.run(base);
}

Rat Sampler::rational(int max_abs) {
    Int num = uniform(-max_abs, max_abs);
    Int den = uniform(1, max_abs);
    return Rat(num) / Rat(den);
}

Coeff Sampler::coeff(int max_deg, int max_abs) {
    auto rand_lpoly = [&](bool nonzero) {
        std::vector<Int> c(static_cast<size_t>(uniform(0, max_deg)) + 1, Int(0));
        for (auto& x : c) x = uniform(-max_abs, max_abs);
        LPoly p = LPoly::from_coeffs(std::move(c));
        if (nonzero && p.is_zero()) p = LPoly(Int(uniform(1, max_abs)));
        return p;
    };
    return Coeff(rand_lpoly(false), rand_lpoly(true));
}

Poly Sampler::poly(int terms, int xsize, int max_deg_x, int max_deg_r) {
    Poly p;
    for (int i = 0; i < terms; ++i) {
        Coeff c = coeff(1, 3);
        if (c.is_zero()) c = Coeff::one();
        p.add_term(c, word(xsize, max_deg_x, max_deg_r));
    }
    return p;
}

} // namespace rbgs
