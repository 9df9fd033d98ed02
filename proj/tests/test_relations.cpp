#include <doctest.h>

#include "rbgs/oracle.hpp"
#include "rbgs/relations.hpp"
#include "rbgs/sampling.hpp"
#include "rbgs/textio.hpp"

using namespace rbgs;

namespace {

Poly xg(int i) { return Poly::word(Word::gen(i)); }

std::vector<int> entries(const std::vector<IndexTuple>& ts) {
    std::vector<int> flat;
    for (const auto& t : ts) {
        flat.insert(flat.end(), t.entries.begin(), t.entries.end());
        flat.push_back(0);
    }
    return flat;
}

GenParams params(int k, int l, int m_max = 3) {
    GenParams p;
    p.k = k;
    p.l = l;
    p.m_max = m_max;
    return p;
}

std::string gen_str(const RelId& id, const GenParams& p) {
    auto r = gen_relation(id, p);
    return r ? print_poly(r->poly) : "absent";
}

} // namespace

TEST_CASE("tuple family enumeration") {
    CHECK(entries(enum_tuples(FamilyTag::Q, 2, 2)) == std::vector<int>{2, 0});
    CHECK(enum_tuples(FamilyTag::P, 2, 2).empty());
    CHECK(entries(enum_tuples(FamilyTag::P0, 3, 2)) == std::vector<int>{1, 2, 0, 2, 1, 0});
    CHECK(entries(enum_tuples(FamilyTag::Q, 4, 3)) == std::vector<int>{1, 3, 0, 2, 2, 0});
    CHECK(entries(enum_tuples(FamilyTag::Q0, 2, 3)) == std::vector<int>{1, 1, 0});
    CHECK(enum_tuples(FamilyTag::P, 0, 2).empty());
    CHECK_THROWS_AS(enum_tuples(FamilyTag::Q, 2, 1), Error);
}

TEST_CASE("tuple operations") {
    std::vector<int> t{1, 2, 3};
    CHECK(tuple_prefix(t, 2) == std::vector<int>{1, 2});
    CHECK(tuple_restrict(t, 2) == std::vector<int>{2, 3});
    CHECK(tuple_decrement(t, 2, 1) == std::vector<int>{1, 1, 3});
    CHECK_THROWS_AS(tuple_prefix(t, 5), Error);
    CHECK_THROWS_AS(tuple_restrict(t, 0), Error);
}

TEST_CASE("nested word builders") {
    // one tuple entry with two arguments: the Q-shape R^2(x1) x2
    CHECK(print_poly(build_L({2}, {xg(1), xg(2)})) == "R(R(x1))*x2");
    CHECK(print_poly(build_L({1, 2}, {xg(1), xg(2)})) == "R(R(R(x1))*x2)");
    CHECK(print_poly(build_L_op({1, 2}, {xg(1), xg(2)})) == "R(x1*R(R(x2)))");
    CHECK(print_poly(build_L_op({2}, {xg(1), xg(2)})) == "x1*R(R(x2))");
    CHECK_THROWS_AS(build_L({1, 2}, {xg(1)}), Error);
}

TEST_CASE("starred builders insert the extra factor layer by layer") {
    Coeff lam = Coeff::lambda();
    // L*_{(2)}[x, y] = R(x R^2(y)) + lambda R(x R(y))
    Poly s2 = build_Lstar({2}, xg(9), {xg(1)}, lam);
    CHECK(print_poly(s2) == "R(x9*R(R(x1))) + L*R(x9*R(x1))");
    // L*_{(1,2)}[x, y1, y2]: four terms, checked against a hand expansion of
    // R(x) R(R^2(y1) y2) minus the first-argument replacement terms.
    Poly s12 = build_Lstar({1, 2}, xg(9), {xg(1), xg(2)}, lam);
    Poly lhs = xg(9).apply_r() * build_L({1, 2}, {xg(1), xg(2)});
    Poly repl = build_L({1, 2}, {xg(9).apply_r() * xg(1) + xg(9) * xg(1).apply_r(), xg(2)}) +
                build_L({1, 2}, {xg(9) * xg(1), xg(2)}).scaled(lam);
    CHECK(expand_rb(lhs - repl - s12, lam).is_zero());
    // op mirror of the same identity
    Poly s12op = build_Lstar_op({1, 2}, xg(9), {xg(1), xg(2)}, lam);
    Poly lhs_op = build_L_op({1, 2}, {xg(1), xg(2)}) * xg(9).apply_r();
    Poly repl_op =
        build_L_op({1, 2}, {xg(1), xg(2) * xg(9).apply_r() + xg(2).apply_r() * xg(9)}) +
        build_L_op({1, 2}, {xg(1), xg(2) * xg(9)}).scaled(lam);
    CHECK(expand_rb(lhs_op - repl_op - s12op, lam).is_zero());
}

TEST_CASE("sum_over_family") {
    Coeff lam = Coeff::lambda();
    std::vector<Poly> args{xg(1), xg(2)};
    CHECK(print_poly(sum_over_family(FamilyTag::Q, 2, 2, LKind::L, args, lam)) == "R(R(x1))*x2");
    CHECK(sum_over_family(FamilyTag::P, 2, 2, LKind::L, args, lam).is_zero());
    // matches the explicit low-degree expansion of R^n(x1)R(x2)
    Poly s = sum_over_family(FamilyTag::Q, 3, 2, LKind::L, args, lam) +
             sum_over_family(FamilyTag::P, 3, 2, LKind::L, args, lam);
    CHECK(print_poly(s) == "R(R(R(x1)))*x2 + R(R(R(x1))*x2)");
}

TEST_CASE("builders are multilinear") {
    Sampler smp(41);
    Coeff lam = Coeff::lambda();
    for (int i = 0; i < 50; ++i) {
        Poly u = Poly::word(smp.word(2, 3, 2));
        Poly v = Poly::word(smp.word(2, 3, 2));
        Coeff c = Coeff(Int(smp.uniform(1, 5)));
        Poly lin = build_L({1, 2}, {u.scaled(c) + v, xg(7)});
        CHECK(lin == build_L({1, 2}, {u, xg(7)}).scaled(c) + build_L({1, 2}, {v, xg(7)}));
        Poly lin2 = build_Lstar({2}, xg(9), {u.scaled(c) + v}, lam);
        CHECK(lin2 ==
              build_Lstar({2}, xg(9), {u}, lam).scaled(c) + build_Lstar({2}, xg(9), {v}, lam));
    }
}

TEST_CASE("generated relations: golden forms") {
    CHECK(gen_str(RelId{2, 0}, params(1, 1)) == "R(R(x1)) + L*R(x1)");
    // k=2, l=1 forms
    CHECK(gen_str(RelId{3, 0}, params(2, 1)) ==
          "R(R(R(R(x1))*x2)) + L*R(R(R(x1))*x2) + L*R(R(R(x1)*x2)) + L^2*R(R(x1)*x2)");
    CHECK(gen_str(RelId{5, 0}, params(2, 1)) ==
          "R(R(x1*R(R(x2)))) + L*R(x1*R(R(x2))) + L*R(R(x1*R(x2))) + L^2*R(x1*R(x2))");
    CHECK(gen_str(RelId{4, 3}, params(2, 1)) ==
          "R(R(R(R(R(x1))*x2)*x3)) + L*R(R(R(R(x1))*x2)*x3) + L*R(R(R(R(x1)*x2)*x3)) + "
          "L^2*R(R(R(x1)*x2)*x3)");
    CHECK(gen_str(RelId{6, 3}, params(2, 1)) ==
          "R(R(x1*R(x2*R(R(x3))))) + L*R(x1*R(x2*R(R(x3)))) + L*R(R(x1*R(x2*R(x3)))) + "
          "L^2*R(x1*R(x2*R(x3)))");
    // degenerate base case: everything beyond R1, R2 is trivial
    for (int fam : {3, 5, 7, 9})
        CHECK(gen_str(RelId{fam, 0}, params(1, 1)) == "absent");
    CHECK(gen_str(RelId{4, 3}, params(1, 1)) == "absent");
}

TEST_CASE("R3 closed form equals its derivation for k=1 as well") {
    // k=1, l=2: the degenerate layer of the grouping needs the correction
    CHECK(gen_str(RelId{3, 0}, params(1, 2)) ==
          "R(R(R(R(x1))*x2)) + L*R(R(R(x1))*x2) + L*R(R(R(x1)*x2)) + L^2*R(R(x1)*x2)");
}

TEST_CASE("the R4 closed form holds at k=1 too") {
    // The R3-layer correction cancels out one composition later: the derived
    // R4 coincides with the closed-form family sums even for k = 1.
    for (auto [k, l] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}}) {
        for (int m = 3; m <= 4; ++m) {
            GenParams p = params(k, l, m);
            auto closed = rel_r4(p, m);
            auto derived = gen_relation(RelId{4, m}, p);
            REQUIRE(closed.has_value());
            REQUIRE(derived.has_value());
            CAPTURE(k);
            CAPTURE(l);
            CAPTURE(m);
            CHECK(*closed == derived->poly);
        }
    }
}

TEST_CASE("lambda = 0 mode generates the weight-zero families") {
    GenParams z11 = params(1, 1);
    z11.mode = LambdaMode::zero();
    GeneratedSet g = gen_ruleset(z11);
    REQUIRE(g.rules.size() == 2);
    CHECK(print_poly(g.rules[0].poly) == "R(x1)*R(x2) - R(R(x1)*x2) - R(x1*R(x2))");
    CHECK(print_poly(g.rules[1].poly) == "R(R(x1))");

    GenParams z21 = params(2, 1, 4);
    z21.mode = LambdaMode::zero();
    GeneratedSet h = gen_ruleset(z21);
    auto str = [&](RelId id) {
        auto i = h.index_of(id);
        return i ? print_poly(h.rules[*i].poly) : std::string("absent");
    };
    CHECK(str(RelId{2, 0}) == "R(R(R(x1)))");
    CHECK(str(RelId{3, 0}) == "R(R(R(R(x1))*x2))");
    CHECK(str(RelId{4, 3}) == "R(R(R(R(R(x1))*x2)*x3))");
    CHECK(str(RelId{4, 4}) == "R(R(R(R(R(R(x1))*x2)*x3)*x4))");
    CHECK(str(RelId{5, 0}) == "R(R(x1*R(R(x2))))");
    CHECK(str(RelId{6, 4}) == "R(R(x1*R(x2*R(x3*R(R(x4))))))");
    // the x-insertion families
    CHECK(str(RelId{7, 0}) == "R(R(R(x1*R(R(x2)))*x3)) + R(R(x1*R(R(R(x2))*x3)))");
    CHECK(str(RelId{8, 3}) ==
          "R(R(R(R(x1*R(R(x2)))*x3)*x4)) + R(R(R(x1*R(R(R(x2))*x3))*x4)) + "
          "R(R(x1*R(R(R(R(x2))*x3)*x4)))");
}

TEST_CASE("leading words follow the expected patterns for R1-R6") {
    for (auto [k, l] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {2, 2}, {3, 1}, {1, 3}}) {
        GenParams p = params(k, l, 4);
        GeneratedSet g = gen_ruleset(p);
        int n = k + l;
        auto v = [](int i) { return Word::gen(kVarBase + i); };
        auto lead = [&](RelId id) -> const Word& {
            auto idx = g.index_of(id);
            REQUIRE(idx.has_value());
            return g.rules[*idx].leading();
        };
        CHECK(word_eq(lead(RelId{2, 0}), Word::r_pow(n, v(1))));
        CHECK(word_eq(lead(RelId{3, 0}),
                      Word::r_pow(2, Word::concat(Word::r_pow(n - 1, v(1)), v(2)))));
        CHECK(word_eq(lead(RelId{5, 0}),
                      Word::r_pow(2, Word::concat(v(1), Word::r_pow(n - 1, v(2))))));
        for (int m = 3; m <= 4; ++m) {
            // fbar_4 = R^2(R(...R(R^{n-1}(x1)x2)...)x_m)
            Word w = Word::concat(Word::r_pow(n - 1, v(1)), v(2));
            for (int j = 3; j <= m; ++j) w = Word::concat(Word::r(w), v(j));
            CHECK(word_eq(lead(RelId{4, m}), Word::r_pow(2, w)));
            Word u = Word::concat(v(m - 1), Word::r_pow(n - 1, v(m)));
            for (int j = m - 2; j >= 1; --j) u = Word::concat(v(j), Word::r(u));
            CHECK(word_eq(lead(RelId{6, m}), Word::r_pow(2, u)));
        }
        // R7's leading under the stated order carries the R-letter first
        CHECK(word_eq(lead(RelId{7, 0}),
                      Word::r_pow(2, Word::concat(Word::r(Word::concat(
                                                      v(1), Word::r_pow(n - 1, v(2)))),
                                                  v(3)))));
        for (int m = 3; m <= 4; ++m) {
            // fbar for R8[m]: the R7 core wrapped in m-2 more levels
            Word w = Word::concat(v(1), Word::r_pow(n - 1, v(2)));
            for (int j = 3; j <= m + 1; ++j) w = Word::concat(Word::r(w), v(j));
            CHECK(word_eq(lead(RelId{8, m}), Word::r_pow(2, w)));
            // fbar for R10[m]: the op-nested core with the trailing letter
            Word u = Word::concat(v(m - 1), Word::r_pow(n - 1, v(m)));
            for (int j = m - 2; j >= 1; --j) u = Word::concat(v(j), Word::r(u));
            CHECK(word_eq(lead(RelId{10, m}),
                          Word::r_pow(2, Word::concat(Word::r(u), v(m + 1)))));
        }
    }
}

TEST_CASE("numeric lambda mode") {
    GenParams p = params(1, 1);
    p.mode = LambdaMode::numeric(Rat(-1)); // idempotent operator: R^2 = R
    GeneratedSet g = gen_ruleset(p);
    REQUIRE(g.rules.size() == 2);
    CHECK(print_poly(g.rules[1].poly) == "R(R(x1)) - R(x1)");
    CHECK(verify_gsb(g.rules, Caps::defaults(1, 1, 3), 1).all_trivial());

    GenParams q = params(2, 1);
    q.mode = LambdaMode::numeric(Rat(2));
    GeneratedSet h = gen_ruleset(q);
    CHECK(print_poly(h.rules[*h.index_of(RelId{3, 0})].poly) ==
          "R(R(R(R(x1))*x2)) + 2*R(R(R(x1))*x2) + 2*R(R(R(x1)*x2)) + 4*R(R(x1)*x2)");
    CHECK(verify_gsb(h.rules, Caps::defaults(2, 1, 3), 1).all_trivial());
}

TEST_CASE("identity oracle instances") {
    auto results = check_identities(5, 4, Coeff::lambda());
    CHECK(results.size() == 59);
    for (const auto& r : results) {
        CAPTURE(r.name);
        CHECK(r.ok);
    }
    // also exact over a numeric specialization
    for (const auto& r : check_identities(3, 3, Coeff(Rat(7) / Rat(2)))) {
        CAPTURE(r.name);
        CHECK(r.ok);
    }
}

TEST_CASE("gen_relation validates parameters") {
    CHECK_THROWS_AS(gen_relation(RelId{4, 2}, params(2, 1)), Error);
    CHECK_THROWS_AS(gen_relation(RelId{3, 3}, params(2, 1)), Error);
    CHECK_THROWS_AS(gen_relation(RelId{11, 0}, params(2, 1)), Error);
    CHECK_THROWS_AS(gen_ruleset(params(0, 1)), Error);
}
