#include "rbgs/oracle.hpp"

#include "rbgs/rewrite.hpp"

namespace rbgs {

namespace {

Poly xg(int i) { return Poly::word(Word::gen(i)); }

std::vector<Poly> xs(int count) {
    std::vector<Poly> v;
    for (int i = 1; i <= count; ++i) v.push_back(xg(i));
    return v;
}

std::string tag(const char* base, int n, int m) {
    return std::string(base) + "(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")";
}

} // namespace

IdentitySides eq1_sides(int n, int m, const Coeff& lambda) {
    auto args = xs(m - 1);
    Poly lhs = sum_over_family(FamilyTag::Q, n, m - 1, LKind::L, args, lambda) * xg(m).apply_r();
    auto args2 = xs(m - 2);
    args2.push_back(xg(m - 1) * xg(m).apply_r());
    Poly rhs = sum_over_family(FamilyTag::Q, n, m - 1, LKind::L, args2, lambda);
    return {tag("eq1", n, m), lhs, rhs};
}

IdentitySides eq2_sides(int n, int m, const Coeff& lambda) {
    auto args = xs(m - 1);
    Poly lhs = sum_over_family(FamilyTag::Q, n, m - 1, LKind::L, args, lambda) * xg(m);
    auto args2 = xs(m - 2);
    args2.push_back(xg(m - 1) * xg(m));
    Poly rhs = sum_over_family(FamilyTag::Q, n, m - 1, LKind::L, args2, lambda);
    return {tag("eq2", n, m), lhs, rhs};
}

IdentitySides eq3_sides(int n, int m, const Coeff& lambda) {
    auto args = xs(m - 1);
    Poly inner = sum_over_family(FamilyTag::Q, n, m - 1, LKind::L, args, lambda) +
                 sum_over_family(FamilyTag::P, n, m - 1, LKind::L, args, lambda);
    Poly lhs = inner.apply_r() * xg(m);
    Poly rhs = sum_over_family(FamilyTag::Q, n + 1, m, LKind::L, xs(m), lambda);
    return {tag("eq3", n, m), lhs, rhs};
}

IdentitySides eq4_sides(int n, int m, const Coeff& lambda) {
    auto args = xs(m - 1);
    Poly lhs = sum_over_family(FamilyTag::P, n, m - 1, LKind::L, args, lambda) * xg(m).apply_r();
    auto args_r = xs(m - 2);
    args_r.push_back(xg(m - 1) * xg(m).apply_r());
    auto args_p = xs(m - 2);
    args_p.push_back(xg(m - 1) * xg(m));
    Poly rhs = sum_over_family(FamilyTag::P, n, m - 1, LKind::L, args_r, lambda) +
               sum_over_family(FamilyTag::P, n + 1, m, LKind::L, xs(m), lambda) +
               sum_over_family(FamilyTag::P, n, m - 1, LKind::L, args_p, lambda).scaled(lambda) +
               sum_over_family(FamilyTag::P, n, m, LKind::L, xs(m), lambda).scaled(lambda);
    return {tag("eq4", n, m), lhs, rhs};
}

IdentitySides eq5_sides(int n, int m, const Coeff& lambda) {
    auto args = xs(m - 1);
    Poly lhs = sum_over_family(FamilyTag::P, n, m - 1, LKind::L, args, lambda) * xg(m);
    Poly rhs = sum_over_family(FamilyTag::Q, n, m, LKind::L, xs(m), lambda);
    return {tag("eq5", n, m), lhs, rhs};
}

IdentitySides rel2_sides(int n, const Coeff& lambda) {
    RBGS_CHECK(n >= 2, "rel2 requires n >= 2");
    Poly x1 = xg(1), x2 = xg(2);
    Poly lhs;
    {
        Poly rn = x1;
        for (int i = 0; i < n; ++i) rn = rn.apply_r();
        lhs = rn * x2.apply_r();
    }
    auto args = xs(2);
    Poly r2part = sum_over_family(FamilyTag::Q, n - 1, 2, LKind::L, args, lambda) +
                  sum_over_family(FamilyTag::P, n - 1, 2, LKind::L, args, lambda);
    Poly r1part = sum_over_family(FamilyTag::Q0, n - 1, 2, LKind::L, args, lambda) +
                  sum_over_family(FamilyTag::P0, n - 1, 2, LKind::L, args, lambda);
    Poly rn_x1 = x1;
    for (int i = 0; i < n; ++i) rn_x1 = rn_x1.apply_r();
    Poly rn_rx1x2 = x1.apply_r() * x2;
    for (int i = 0; i < n; ++i) rn_rx1x2 = rn_rx1x2.apply_r();
    Poly rn_x1rx2 = x1 * x2.apply_r();
    for (int i = 0; i < n; ++i) rn_x1rx2 = rn_x1rx2.apply_r();
    Poly rn_x1x2 = x1 * x2;
    for (int i = 0; i < n; ++i) rn_x1x2 = rn_x1x2.apply_r();
    Poly rhs = r2part.apply_r().apply_r() + r1part.apply_r().scaled(lambda) +
               (rn_x1 * x2).apply_r() + rn_rx1x2 + rn_x1rx2 + rn_x1x2.scaled(lambda);
    return {"rel2(n=" + std::to_string(n) + ")", lhs, rhs};
}

std::vector<IdentityResult> check_identities(int n_max, int m_max, const Coeff& lambda) {
    std::vector<IdentityResult> out;
    RbExpander ex(lambda);
    auto check = [&](const IdentitySides& s) {
        out.push_back({s.name, ex.expand(s.lhs - s.rhs).is_zero()});
    };
    for (int n = 1; n <= n_max; ++n) {
        for (int m = 3; m <= m_max; ++m) {
            check(eq1_sides(n, m, lambda));
            check(eq2_sides(n, m, lambda));
            check(eq3_sides(n, m, lambda));
            check(eq4_sides(n, m, lambda));
        }
        for (int m = 2; m <= m_max; ++m) check(eq5_sides(n, m, lambda));
        if (n >= 2) check(rel2_sides(n, lambda));
    }
    return out;
}

} // namespace rbgs
