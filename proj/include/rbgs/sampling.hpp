#pragma once

#include <random>

#include "rbgs/poly.hpp"

namespace rbgs {

/// Bounded random terms for property checks, reproducible from a seed.
class Sampler {
public:
    explicit Sampler(uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi); // inclusive
    Word word(int xsize, int max_deg_x, int max_deg_r);
    Word star_word(int xsize, int max_deg_x, int max_deg_r);
    Coeff coeff(int max_deg, int max_abs);
    Rat rational(int max_abs);
    Poly poly(int terms, int xsize, int max_deg_x, int max_deg_r);

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace rbgs
