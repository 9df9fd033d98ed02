#include "rbgs/relations.hpp"

#include <algorithm>

#include "rbgs/textio.hpp"

namespace rbgs {

namespace {

void tuples_rec(int len, int n, bool last_gt1, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == len - 1) {
        int last = n;
        if (last < 1) return;
        if (last_gt1 && last < 2) return;
        cur.push_back(last);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    int remaining = len - static_cast<int>(cur.size());
    for (int v = 1; v <= n - (remaining - 1); ++v) {
        cur.push_back(v);
        tuples_rec(len, n - v, last_gt1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<IndexTuple> enum_tuples(FamilyTag tag, int n, int m) {
    int len = (tag == FamilyTag::P || tag == FamilyTag::P0) ? m : m - 1;
    if (len < 1) throw Error(Errc::InvalidParams, "enum_tuples requires tuples of length >= 1");
    std::vector<IndexTuple> out;
    bool last_gt1 = tag == FamilyTag::P || tag == FamilyTag::Q;
    if (n < 1) return out;
    std::vector<std::vector<int>> raw;
    std::vector<int> cur;
    tuples_rec(len, n, last_gt1, cur, raw);
    // tuples_rec emits in ascending lexicographic order already
    for (auto& e : raw) out.push_back(IndexTuple{tag, n, m, std::move(e)});
    return out;
}

std::vector<int> tuple_restrict(const std::vector<int>& t, int s) {
    if (s < 1 || s > static_cast<int>(t.size()) + 1)
        throw Error(Errc::IndexOutOfRange, "tuple_restrict index");
    return std::vector<int>(t.begin() + (s - 1), t.end());
}

std::vector<int> tuple_prefix(const std::vector<int>& t, int s) {
    if (s < 0 || s > static_cast<int>(t.size()))
        throw Error(Errc::IndexOutOfRange, "tuple_prefix index");
    return std::vector<int>(t.begin(), t.begin() + s);
}

std::vector<int> tuple_decrement(const std::vector<int>& t, int s, int q) {
    if (s < 1 || s > static_cast<int>(t.size()))
        throw Error(Errc::IndexOutOfRange, "tuple_decrement index");
    std::vector<int> r = t;
    r[static_cast<size_t>(s - 1)] -= q;
    return r;
}

namespace {

Poly rpow(int e, Poly p) {
    RBGS_CHECK(e >= 0, "negative R power");
    for (int i = 0; i < e; ++i) p = p.apply_r();
    return p;
}

std::vector<Poly> sub_args(const std::vector<Poly>& args, size_t from, size_t count) {
    return std::vector<Poly>(args.begin() + static_cast<long>(from),
                             args.begin() + static_cast<long>(from + count));
}

} // namespace

Poly build_L(const std::vector<int>& t, const std::vector<Poly>& args) {
    size_t r = t.size();
    RBGS_CHECK(r >= 1, "empty tuple");
    if (args.size() == r + 1) return build_L(t, sub_args(args, 0, r)) * args[r];
    if (args.size() != r) throw Error(Errc::ArityMismatch, "build_L arity");
    Poly acc = rpow(t[r - 1], args[0]);
    for (size_t s = 1; s < r; ++s) acc = rpow(t[r - 1 - s], acc * args[s]);
    return acc;
}

Poly build_L_op(const std::vector<int>& t, const std::vector<Poly>& args) {
    size_t r = t.size();
    RBGS_CHECK(r >= 1, "empty tuple");
    if (args.size() == r + 1) return args[0] * build_L_op(t, sub_args(args, 1, r));
    if (args.size() != r) throw Error(Errc::ArityMismatch, "build_L_op arity");
    Poly acc = rpow(t[r - 1], args[r - 1]);
    for (size_t s = 1; s < r; ++s) {
        size_t i = r - 1 - s;
        acc = rpow(t[i], args[i] * acc);
    }
    return acc;
}

Poly build_Lstar(const std::vector<int>& t, const Poly& x, const std::vector<Poly>& args,
                 const Coeff& lambda) {
    size_t r = t.size();
    RBGS_CHECK(r >= 1, "empty tuple");
    if (args.size() == r + 1)
        return build_Lstar(t, x, sub_args(args, 0, r), lambda) * args[r];
    if (args.size() != r) throw Error(Errc::ArityMismatch, "build_Lstar arity");
    Poly acc;
    for (size_t s = 1; s <= r; ++s) {
        // At the innermost layer the top insertion cases are the separate
        // first-argument replacement terms of the product identity, not
        // part of the starred sum.
        int tmax = t[s - 1] - (s == r ? 1 : 0);
        for (int tt = 1; tt <= tmax; ++tt) {
            std::vector<int> outer = tuple_prefix(t, static_cast<int>(s) - 1);
            outer.push_back(tt);
            std::vector<int> inner1{t[s - 1] - tt + 1};
            std::vector<int> inner0{t[s - 1] - tt};
            auto rest = tuple_restrict(t, static_cast<int>(s) + 1);
            inner1.insert(inner1.end(), rest.begin(), rest.end());
            inner0.insert(inner0.end(), rest.begin(), rest.end());
            auto inner_args = sub_args(args, 0, r - s + 1);
            std::vector<Poly> outer_args1{x * build_L(inner1, inner_args)};
            std::vector<Poly> outer_args0{x * build_L(inner0, inner_args)};
            for (size_t j = r + 1 - s; j < r; ++j) {
                outer_args1.push_back(args[j]);
                outer_args0.push_back(args[j]);
            }
            acc = acc + build_L(outer, outer_args1) +
                  build_L(outer, outer_args0).scaled(lambda);
        }
    }
    return acc;
}

Poly build_Lstar_op(const std::vector<int>& t, const Poly& x, const std::vector<Poly>& args,
                    const Coeff& lambda) {
    size_t r = t.size();
    RBGS_CHECK(r >= 1, "empty tuple");
    if (args.size() == r + 1)
        return args[0] * build_Lstar_op(t, x, sub_args(args, 1, r), lambda);
    if (args.size() != r) throw Error(Errc::ArityMismatch, "build_Lstar_op arity");
    Poly acc;
    for (size_t s = 1; s <= r; ++s) {
        int tmax = t[s - 1] - (s == r ? 1 : 0);
        for (int tt = 1; tt <= tmax; ++tt) {
            std::vector<int> outer = tuple_prefix(t, static_cast<int>(s) - 1);
            outer.push_back(tt);
            std::vector<int> inner1{t[s - 1] - tt + 1};
            std::vector<int> inner0{t[s - 1] - tt};
            auto rest = tuple_restrict(t, static_cast<int>(s) + 1);
            inner1.insert(inner1.end(), rest.begin(), rest.end());
            inner0.insert(inner0.end(), rest.begin(), rest.end());
            auto inner_args = sub_args(args, s - 1, r - s + 1);
            std::vector<Poly> outer_args1, outer_args0;
            for (size_t j = 0; j + 1 < s; ++j) {
                outer_args1.push_back(args[j]);
                outer_args0.push_back(args[j]);
            }
            outer_args1.push_back(build_L_op(inner1, inner_args) * x);
            outer_args0.push_back(build_L_op(inner0, inner_args) * x);
            acc = acc + build_L_op(outer, outer_args1) +
                  build_L_op(outer, outer_args0).scaled(lambda);
        }
    }
    return acc;
}

Poly sum_over_family(FamilyTag tag, int n, int m, LKind kind, const std::vector<Poly>& args,
                     const Coeff& lambda) {
    Poly acc;
    for (const auto& t : enum_tuples(tag, n, m)) {
        switch (kind) {
        case LKind::L: acc = acc + build_L(t.entries, args); break;
        case LKind::Lop: acc = acc + build_L_op(t.entries, args); break;
        case LKind::Lstar:
            acc = acc + build_Lstar(t.entries, args.front(),
                                    sub_args(args, 1, args.size() - 1), lambda);
            break;
        case LKind::LstarOp:
            acc = acc + build_Lstar_op(t.entries, args.front(),
                                       sub_args(args, 1, args.size() - 1), lambda);
            break;
        }
    }
    return acc;
}

std::string RelId::str() const {
    std::string s = "R" + std::to_string(family);
    if (m > 0) s += "[m=" + std::to_string(m) + "]";
    return s;
}

namespace {

Poly var_poly(int i) { return Poly::word(Word::gen(kVarBase + i)); }

} // namespace

Poly rel_r1(const GenParams& p) {
    Poly x = var_poly(1), y = var_poly(2);
    Poly lhs = x.apply_r() * y.apply_r();
    Poly rhs = (x * y.apply_r()).apply_r() + (x.apply_r() * y).apply_r() +
               (x * y).apply_r().scaled(p.lambda());
    return lhs - rhs;
}

Poly rel_r2(const GenParams& p) {
    Poly x = var_poly(1);
    Poly acc;
    for (int t = 0; t <= p.l; ++t) acc = acc + rpow(p.k + t, x).scaled(p.weight(t));
    return acc;
}

std::optional<Poly> rel_r3(const GenParams& p) {
    std::vector<Poly> args{var_poly(1), var_poly(2)};
    Coeff lam = p.lambda();
    Poly acc;
    for (int t = 0; t <= p.l; ++t) {
        int n = p.k + t - 1;
        Poly r2part = sum_over_family(FamilyTag::Q, n, 2, LKind::L, args, lam) +
                      sum_over_family(FamilyTag::P, n, 2, LKind::L, args, lam);
        Poly r1part = sum_over_family(FamilyTag::Q0, n, 2, LKind::L, args, lam) +
                      sum_over_family(FamilyTag::P0, n, 2, LKind::L, args, lam);
        acc = acc + (rpow(2, r2part) + r1part.apply_r().scaled(lam)).scaled(p.weight(t));
    }
    if (p.k == 1) {
        // The t = 0 layer of the derivation degenerates for k = 1: its
        // product expansion contributes one copy of R(R(x1)x2) fewer than
        // the generic grouping.
        Poly fix = (var_poly(1).apply_r() * var_poly(2)).apply_r();
        acc = acc - fix.scaled(p.weight(0));
    }
    if (acc.is_zero()) return std::nullopt;
    return acc.monic();
}

std::optional<Poly> rel_r4(const GenParams& p, int m) {
    RBGS_CHECK(m >= 3, "rel_r4 requires m >= 3");
    std::vector<Poly> args;
    for (int i = 1; i <= m; ++i) args.push_back(var_poly(i));
    Coeff lam = p.lambda();
    Poly acc;
    for (int t = 0; t <= p.l; ++t) {
        for (int i = 0; i <= m - 2; ++i) {
            int n = p.k + t + m - 3 - i;
            Coeff ci = p.weight(t) * Coeff(binom(m - 2, i)) * pow_coeff(lam, i);
            Coeff ci3 = p.weight(t) * Coeff(binom(m - 3, i)) * pow_coeff(lam, i);
            Poly bq = sum_over_family(FamilyTag::Q, n, m, LKind::L, args, lam);
            Poly ap = sum_over_family(FamilyTag::P, n, m, LKind::L, args, lam);
            Poly cp0 = sum_over_family(FamilyTag::P0, n, m, LKind::L, args, lam);
            acc = acc + rpow(2, bq + ap).scaled(ci);
            acc = acc + cp0.apply_r().scaled(lam * ci);
            if (i <= m - 3) {
                Poly dq0 = sum_over_family(FamilyTag::Q0, n - 1, m, LKind::L, args, lam);
                acc = acc + bq.apply_r().scaled(lam * ci3);
                acc = acc + dq0.apply_r().scaled(lam * lam * ci3);
            }
        }
    }
    if (acc.is_zero()) return std::nullopt;
    return acc.monic();
}

namespace {

Caps generation_caps(const GenParams& p) {
    Caps c;
    c.max_deg_x = 2 * p.m_max + 8;
    c.max_deg_r = p.k + p.l + 2 * p.m_max + 8;
    c.max_arity = p.m_max + 3;
    c.max_steps = 2'000'000;
    c.max_monomials = 500'000;
    return c;
}

/// The composition of R1 with `small` at the shared R-letter: x-side embeds
/// small's leading word into the first letter of R(x)R(y), y-side into the
/// second. Returns the reduced remainder as a schema rule, or nullopt when
/// the composition is trivial.
std::optional<Rule> derive_from_r1(const RuleSet& S, size_t small, bool x_side,
                                   const std::string& name, const Caps& caps) {
    const Overlap* sel = nullptr;
    auto incs = find_inclusions(S, 0, small);
    for (const auto& o : incs) {
        const auto& ls = o.q.letters();
        if (ls.size() != 2) continue;
        bool star_first = ls[0].is_gen() && ls[0].gen() == kStar;
        bool star_second = ls[1].is_gen() && ls[1].gen() == kStar;
        if ((x_side && star_first) || (!x_side && star_second)) {
            sel = &o;
            break;
        }
    }
    RBGS_CHECK(sel != nullptr, "expected R1 inclusion overlap not found");
    Composition c = check_composition(S, *sel, caps);
    if (c.status == CompStatus::Inconclusive)
        throw Error(Errc::CapExceeded, "relation derivation hit cap: " + c.cap);
    if (c.status == CompStatus::Trivial) return std::nullopt;
    return make_rule(name, schema_from_concrete(c.remainder.monic()));
}

} // namespace

std::optional<size_t> GeneratedSet::index_of(const RelId& id) const {
    for (size_t i = 0; i < ids.size(); ++i)
        if (ids[i].family == id.family && ids[i].m == id.m) return i;
    return std::nullopt;
}

GeneratedSet gen_ruleset(const GenParams& p) {
    if (p.k < 1 || p.l < 1) throw Error(Errc::InvalidParams, "k and l must be >= 1");
    if (p.m_max < 3) throw Error(Errc::InvalidParams, "m_max must be >= 3");
    GeneratedSet out;
    Caps caps = generation_caps(p);
    auto push = [&](Rule r, RelId id) {
        out.rules.rules.push_back(std::move(r));
        out.ids.push_back(id);
        return out.rules.size() - 1;
    };
    auto derive_push = [&](size_t small, bool x_side, RelId id) -> std::optional<size_t> {
        auto r = derive_from_r1(out.rules, small, x_side, id.str(), caps);
        if (!r) return std::nullopt;
        return push(std::move(*r), id);
    };

    push(make_rule("R1", rel_r1(p).monic()), RelId{1, 0});
    push(make_rule("R2", rel_r2(p).monic()), RelId{2, 0});

    std::optional<size_t> i3, i5, i4, i6;
    if (auto r3 = rel_r3(p)) i3 = push(make_rule("R3", *r3), RelId{3, 0});
    i5 = derive_push(1, false, RelId{5, 0});
    if (i3) {
        if (p.k >= 2) {
            auto r4 = rel_r4(p, 3);
            RBGS_CHECK(r4.has_value(), "R4[m=3] unexpectedly empty");
            i4 = push(make_rule(RelId{4, 3}.str(), *r4), RelId{4, 3});
        } else {
            i4 = derive_push(*i3, true, RelId{4, 3});
        }
    }
    if (i5) i6 = derive_push(*i5, false, RelId{6, 3});
    if (i3) derive_push(*i3, false, RelId{7, 0});
    if (i5) derive_push(*i5, true, RelId{9, 0});
    if (i4) derive_push(*i4, false, RelId{8, 3});
    if (i6) derive_push(*i6, true, RelId{10, 3});

    for (int m = 4; m <= p.m_max; ++m) {
        std::optional<size_t> i4new, i6new;
        if (i4) {
            if (p.k >= 2) {
                auto r4 = rel_r4(p, m);
                RBGS_CHECK(r4.has_value(), "R4 unexpectedly empty");
                i4new = push(make_rule(RelId{4, m}.str(), *r4), RelId{4, m});
            } else {
                i4new = derive_push(*i4, true, RelId{4, m});
            }
        }
        if (i6) i6new = derive_push(*i6, false, RelId{6, m});
        if (i4new) derive_push(*i4new, false, RelId{8, m});
        if (i6new) derive_push(*i6new, true, RelId{10, m});
        i4 = i4new;
        i6 = i6new;
    }

    for (size_t a = 0; a < out.rules.size(); ++a)
        for (size_t b = a + 1; b < out.rules.size(); ++b)
            RBGS_CHECK(!word_eq(out.rules[a].leading(), out.rules[b].leading()),
                       "generated leading patterns must be pairwise distinct");
    return out;
}

std::optional<Rule> gen_relation(const RelId& id, const GenParams& p) {
    if (id.family < 1 || id.family > 10) throw Error(Errc::InvalidParams, "unknown relation");
    bool m_indexed = id.family == 4 || id.family == 6 || id.family == 8 || id.family == 10;
    if (m_indexed && id.m < 3)
        throw Error(Errc::InvalidParams, "relation requires m >= 3");
    if (!m_indexed && id.m != 0)
        throw Error(Errc::InvalidParams, "relation does not take an arity parameter");
    GenParams q = p;
    q.m_max = std::max(3, id.m);
    GeneratedSet g = gen_ruleset(q);
    auto idx = g.index_of(id);
    if (!idx) return std::nullopt;
    return g.rules[*idx];
}

} // namespace rbgs
