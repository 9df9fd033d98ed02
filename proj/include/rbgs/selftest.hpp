#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rbgs/relations.hpp"

namespace rbgs {

struct PropertyResult {
    std::string name;
    long long samples = 0;
    long long failures = 0;
    bool ok() const { return failures == 0; }
};

/// Randomized property suites: order totality and
/// transitivity, monomial compatibility, expand_rb confluence, reduce
/// idempotence and certificate replay, parser round trips.
std::vector<PropertyResult> run_property_suite(uint64_t seed, long long order_samples,
                                               long long confluence_samples,
                                               long long reduce_samples);

} // namespace rbgs
