#pragma once

#include <string>
#include <vector>

#include "rbgs/relations.hpp"

namespace rbgs {

/// Left/right sides of the structural identities behind the relation
/// derivations, as concrete polynomials over x1, x2, ...; both sides of each
/// must have equal free-Rota-Baxter normal forms.
struct IdentitySides {
    std::string name;
    Poly lhs, rhs;
};

// eq1, eq2: moving the last factor into the last argument of the Q-shape.
IdentitySides eq1_sides(int n, int m, const Coeff& lambda); // m >= 3
IdentitySides eq2_sides(int n, int m, const Coeff& lambda); // m >= 3
// eq3: R(Q + P sums) x_m re-indexes as the Q-family sum one level up.
IdentitySides eq3_sides(int n, int m, const Coeff& lambda); // m >= 3
// eq4: the P-family sum times R(x_m), expanded by the Rota-Baxter relation.
IdentitySides eq4_sides(int n, int m, const Coeff& lambda); // m >= 3
// eq5: the P-family sum times x_m equals the Q-family sum one slot up.
IdentitySides eq5_sides(int n, int m, const Coeff& lambda); // m >= 2
// rel2: closed expansion of R^n(x1) R(x2), n >= 2.
IdentitySides rel2_sides(int n, const Coeff& lambda);

struct IdentityResult {
    std::string name;
    bool ok;
};

/// Verify every identity instance with n <= n_max, m <= m_max by comparing
/// expand_rb normal forms, exact over the coefficient field.
std::vector<IdentityResult> check_identities(int n_max, int m_max, const Coeff& lambda);

} // namespace rbgs
