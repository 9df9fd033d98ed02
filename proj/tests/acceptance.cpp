// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are exact (all arithmetic is over Q(L)); runtime
// budgets are enforced per criterion.

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "rbgs/jsonio.hpp"
#include "rbgs/oracle.hpp"
#include "rbgs/relations.hpp"
#include "rbgs/selftest.hpp"
#include "rbgs/textio.hpp"

using namespace rbgs;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
std::vector<std::string> notes;

void report(const std::string& name, bool ok, double seconds, double budget_s,
            const std::string& detail = "") {
    bool in_budget = seconds <= budget_s;
    if (!ok || !in_budget) ++failures;
    std::ostringstream os;
    os << name << ": " << ((ok && in_budget) ? "PASS" : "FAIL") << "  (" << seconds << "s";
    if (!in_budget) os << ", over budget " << budget_s << "s";
    os << ")";
    if (!detail.empty()) os << "  " << detail;
    std::cout << os.str() << "\n";
}

GenParams params(int k, int l, int m_max, LambdaMode mode = LambdaMode::symbolic()) {
    GenParams p;
    p.k = k;
    p.l = l;
    p.m_max = m_max;
    p.mode = mode;
    return p;
}

RuleSet base_rules(const GenParams& p) {
    RuleSet rs;
    rs.rules.push_back(make_rule("R1", rel_r1(p).monic()));
    rs.rules.push_back(make_rule("R2", rel_r2(p).monic()));
    return rs;
}

// The inclusion of rule `small` in the first (x_side) or second letter of
// R(x)R(y), reduced modulo S; nullopt when trivial.
std::optional<Poly> replay_composition(const RuleSet& S, size_t small, bool x_side,
                                       const Caps& caps) {
    for (const auto& o : find_inclusions(S, 0, small)) {
        const auto& ls = o.q.letters();
        if (ls.size() != 2) continue;
        bool star_first = ls[0].is_gen() && ls[0].gen() == kStar;
        if (star_first != x_side) continue;
        Composition c = check_composition(S, o, caps);
        if (c.status == CompStatus::Trivial) return std::nullopt;
        return schema_from_concrete(c.remainder.monic());
    }
    throw std::logic_error("replay overlap not found");
}

void criterion1() {
    auto t0 = Clock::now();
    GenParams p = params(1, 1, 4);
    Caps caps;
    caps.max_deg_r = 6;
    caps.max_deg_x = 6;
    caps.max_arity = 4;
    RuleSet rs = base_rules(p);
    CompleteResult comp = complete(rs, caps);
    VerifyReport rep = verify_gsb(rs, caps, 1);
    bool ok = comp.added.empty() && !comp.capped && rep.all_trivial() &&
              gen_ruleset(p).rules.size() == 2;
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    report("C1 base case k=l=1: completion is a fixed point", ok, dt, 60,
           "rules added: " + std::to_string(comp.added.size()));
}

void criterion2() {
    auto t0 = Clock::now();
    GeneratedSet g = gen_ruleset(params(2, 1, 4));
    std::map<std::string, std::string> expected = {
        {"R1", "R(x1)*R(x2) - R(R(x1)*x2) - R(x1*R(x2)) - L*R(x1*x2)"},
        {"R2", "R(R(R(x1))) + L*R(R(x1))"},
        {"R3", "R(R(R(R(x1))*x2)) + L*R(R(R(x1))*x2) + L*R(R(R(x1)*x2)) + L^2*R(R(x1)*x2)"},
        {"R5", "R(R(x1*R(R(x2)))) + L*R(x1*R(R(x2))) + L*R(R(x1*R(x2))) + L^2*R(x1*R(x2))"},
        {"R4[m=3]",
         "R(R(R(R(R(x1))*x2)*x3)) + L*R(R(R(R(x1))*x2)*x3) + L*R(R(R(R(x1)*x2)*x3)) + "
         "L^2*R(R(R(x1)*x2)*x3)"},
        {"R6[m=3]",
         "R(R(x1*R(x2*R(R(x3))))) + L*R(x1*R(x2*R(R(x3)))) + L*R(R(x1*R(x2*R(x3)))) + "
         "L^2*R(x1*R(x2*R(x3)))"},
        {"R4[m=4]",
         "R(R(R(R(R(R(x1))*x2)*x3)*x4)) + L*R(R(R(R(R(x1))*x2)*x3)*x4) + "
         "L*R(R(R(R(R(x1)*x2)*x3)*x4)) + L^2*R(R(R(R(x1)*x2)*x3)*x4)"},
        {"R6[m=4]",
         "R(R(x1*R(x2*R(x3*R(R(x4)))))) + L*R(x1*R(x2*R(x3*R(R(x4))))) + "
         "L*R(R(x1*R(x2*R(x3*R(x4))))) + L^2*R(x1*R(x2*R(x3*R(x4))))"},
    };
    bool golden_ok = true;
    std::string bad;
    size_t golden_seen = 0;
    for (const auto& rule : g.rules.rules) {
        auto it = expected.find(rule.name);
        if (it == expected.end()) continue;
        ++golden_seen;
        if (print_poly(rule.poly) != it->second) {
            golden_ok = false;
            bad += rule.name + " ";
        }
    }
    golden_ok = golden_ok && golden_seen == expected.size();

    // Two circulating printed variants of (R7) and (R9) for these
    // parameters are rejected mechanically: they are not ideal members.
    // The derived forms are the verified ones (composition checks below,
    // dimension oracle in C6).
    Caps caps = Caps::defaults(2, 1, 4);
    const char* variant_r7 =
        "R(R(x1*R(R(R(x2))*x3))) + L*R(R(x1*R(R(x2))*x3)) + L*R(x1*R(R(R(x2))*x3)) + "
        "R(R(R(x1*R(R(x2)))*x3)) + L*R(R(x1*R(x2))*x3) + L^2*R(x1*R(x2)*x3)";
    const char* variant_r9 =
        "R(R(R(x1*R(R(x2)))*x3)) + L*R(R(x1*R(R(x2))*x3)) + L*R(R(x1*R(R(x2)))*x3) + "
        "R(R(x1*R(R(R(x2))*x3))) + L*R(x1*R(R(x2)*x3)) + L^2*R(x1*R(x2)*x3)";
    bool variants_nonmember =
        !reduce(parse_poly(variant_r7), g.rules, caps).normal_form.is_zero() &&
        !reduce(parse_poly(variant_r9), g.rules, caps).normal_form.is_zero();
    notes.push_back("C2 note: the rejected (R7)/(R9) variants have nonzero normal "
                    "forms; the generated forms are the verified ones.");

    VerifyReport rep = verify_gsb(g.rules, caps, 2);
    bool ok = golden_ok && variants_nonmember && rep.all_trivial();
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    report("C2 golden forms at k=2, l=1 and full verification", ok, dt, 600,
           bad.empty() ? ("compositions: " + std::to_string(rep.compositions_checked))
                       : ("mismatch: " + bad));
}

void criterion3() {
    auto t0 = Clock::now();
    bool ok = true;
    // k+l = 2: P and Q empty, only the weight-zero Rota-Baxter rule and R^2
    GeneratedSet g2 = gen_ruleset(params(1, 1, 3, LambdaMode::zero()));
    ok = ok && g2.rules.size() == 2 &&
         print_poly(g2.rules[0].poly) == "R(x1)*R(x2) - R(R(x1)*x2) - R(x1*R(x2))" &&
         print_poly(g2.rules[1].poly) == "R(R(x1))";
    ok = ok && verify_gsb(g2.rules, Caps::defaults(1, 1, 3), 1).all_trivial();

    // k+l = 3: both parameter splits generate the same family set
    GeneratedSet ga = gen_ruleset(params(2, 1, 4, LambdaMode::zero()));
    GeneratedSet gb = gen_ruleset(params(1, 2, 4, LambdaMode::zero()));
    ok = ok && ga.rules.size() == gb.rules.size();
    for (size_t i = 0; ok && i < ga.rules.size(); ++i)
        ok = ok && ga.rules[i].poly == gb.rules[i].poly;

    // golden forms of the weight-zero families at k+l = 3
    std::map<std::string, std::string> expected = {
        {"R1", "R(x1)*R(x2) - R(R(x1)*x2) - R(x1*R(x2))"},
        {"R2", "R(R(R(x1)))"},
        {"R3", "R(R(R(R(x1))*x2))"},
        {"R4[m=3]", "R(R(R(R(R(x1))*x2)*x3))"},
        {"R4[m=4]", "R(R(R(R(R(R(x1))*x2)*x3)*x4))"},
        {"R5", "R(R(x1*R(R(x2))))"},
        {"R6[m=3]", "R(R(x1*R(x2*R(R(x3)))))"},
        {"R6[m=4]", "R(R(x1*R(x2*R(x3*R(R(x4))))))"},
        {"R7", "R(R(R(x1*R(R(x2)))*x3)) + R(R(x1*R(R(R(x2))*x3)))"},
        {"R8[m=3]",
         "R(R(R(R(x1*R(R(x2)))*x3)*x4)) + R(R(R(x1*R(R(R(x2))*x3))*x4)) + "
         "R(R(x1*R(R(R(R(x2))*x3)*x4)))"},
        {"R10[m=3]",
         "R(R(R(x1*R(x2*R(R(x3))))*x4)) + R(R(x1*R(R(x2*R(R(x3)))*x4))) + "
         "R(R(x1*R(x2*R(R(R(x3))*x4))))"},
    };
    for (const auto& [name, want] : expected) {
        bool found = false;
        for (const auto& rule : ga.rules.rules)
            if (rule.name == name) found = print_poly(rule.poly) == want;
        ok = ok && found;
    }
    ok = ok && verify_gsb(ga.rules, Caps::defaults(2, 1, 4), 2).all_trivial();
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    report("C3 lambda = 0, k+l in {2,3}: golden family match", ok, dt, 600);
}

void criterion4() {
    auto t0 = Clock::now();
    auto results = check_identities(5, 4, Coeff::lambda());
    bool ok = !results.empty();
    for (const auto& r : results) ok = ok && r.ok;
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    report("C4 identity oracle eq1-eq5 and rel2 (n<=5, m<=4, exact)", ok, dt, 60,
           std::to_string(results.size()) + " instances");
}

void criterion5() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (auto [k, l] :
         std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 2}}) {
        GenParams p = params(k, l, 3);
        Caps caps = Caps::defaults(k, l, 3);
        caps.max_deg_x = 12;
        caps.max_deg_r = k + l + 8;
        RuleSet S = base_rules(p);
        auto derived_r3 = replay_composition(S, 1, true, caps);
        auto closed_r3 = rel_r3(p);
        bool match3 = derived_r3.has_value() == closed_r3.has_value() &&
                      (!derived_r3 || *derived_r3 == *closed_r3);
        bool match4 = true;
        if (closed_r3) {
            S.rules.push_back(make_rule("R3", *closed_r3));
            auto derived_r4 = replay_composition(S, 2, true, caps);
            auto gen_r4 = gen_relation(RelId{4, 3}, p);
            match4 = derived_r4.has_value() == gen_r4.has_value() &&
                     (!derived_r4 || *derived_r4 == gen_r4->poly);
        }
        if (!match3 || !match4)
            detail += "k=" + std::to_string(k) + ",l=" + std::to_string(l) + " ";
        ok = ok && match3 && match4;
    }
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    report("C5 derivation replay: (R1,R2) composition = R3; (R3,R1) = R4[3]", ok, dt, 120,
           detail.empty() ? "k+l <= 4, exact" : "mismatch at " + detail);
}

void criterion6() {
    auto t0 = Clock::now();
    bool ok = true;
    auto check_cells = [&](const RuleSet& rules, int max_dx, int max_dr) {
        DimReport rep = dimension_oracle(rules, 1, max_dx, max_dr);
        std::map<CellKey, size_t> irr_cells;
        for (const auto& w : irr_enumerate(rules, 1, max_dx, max_dr))
            ++irr_cells[CellKey{w.deg_x(), w.deg_r()}];
        size_t checked = 0;
        for (const auto& [key, cell] : rep.cells) {
            size_t irr_n = irr_cells.count(key) ? irr_cells[key] : 0;
            if (cell.dim() != irr_n) ok = false;
            ++checked;
        }
        return checked;
    };
    size_t cells = check_cells(base_rules(params(1, 1, 3)), 4, 4);
    cells += check_cells(gen_ruleset(params(2, 1, 4)).rules, 4, 4);
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    report("C6 linear-basis consistency: |Irr| = codimension per cell", ok, dt, 300,
           std::to_string(cells) + " cells, exact");
}

void criterion7() {
    auto t0 = Clock::now();
    auto results = run_property_suite(20260810, 10000, 1000, 1000);
    bool ok = true;
    std::string detail;
    for (const auto& r : results) {
        ok = ok && r.ok();
        detail += std::to_string(r.samples) + "/" + std::to_string(r.failures) + " ";
    }
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    report("C7 property suite (order, confluence, reduce, round trip)", ok, dt, 600,
           "samples/failures: " + detail);
}

void criterion8() {
    auto t0 = Clock::now();
    GeneratedSet g = gen_ruleset(params(2, 1, 3));
    Caps caps = Caps::defaults(2, 1, 3);
    std::string s1 = verify_report_to_json(verify_gsb(g.rules, caps, 1)).dump();
    std::string s4 = verify_report_to_json(verify_gsb(g.rules, caps, 4)).dump();
    std::string s8 = verify_report_to_json(verify_gsb(g.rules, caps, 8)).dump();
    bool ok = s1 == s4 && s1 == s8;
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    report("C8 determinism: verify reports byte-identical for 1/4/8 threads", ok, dt, 120);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    for (const auto& n : notes) std::cout << n << "\n";
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) + " failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
