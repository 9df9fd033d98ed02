#include "rbgs/rewrite.hpp"

#include <algorithm>


namespace rbgs {

void Subst::bind(int32_t v, Word w) {
    RBGS_CHECK(is_var_id(v), "binding a non-variable id");
    RBGS_CHECK(!w.empty(), "binding a variable to the empty word");
    auto [it, inserted] = map_.emplace(v, std::move(w));
    RBGS_CHECK(inserted, "variable bound twice");
}

Word Subst::apply(const Word& w) const {
    std::vector<Letter> out;
    out.reserve(w.letters().size());
    for (const auto& l : w.letters()) {
        if (l.is_gen()) {
            auto it = map_.find(l.gen());
            if (it != map_.end()) {
                const auto& b = it->second.letters();
                out.insert(out.end(), b.begin(), b.end());
            } else {
                out.push_back(l);
            }
        } else {
            out.push_back(Letter(std::make_shared<const Word>(apply(l.inner()))));
        }
    }
    return Word(std::move(out));
}

Poly Subst::apply(const Poly& p) const {
    Poly r;
    for (const auto& [w, c] : p.terms()) r.add_term(c, apply(w));
    return r;
}

void Subst::resolve() {
    for (int round = 0; round < 64; ++round) {
        bool changed = false;
        for (auto& [v, w] : map_) {
            for (const auto& [u, _] : map_) {
                if (u != v && w.contains_gen(u)) {
                    w = apply(w);
                    changed = true;
                    break;
                }
            }
        }
        if (!changed) return;
    }
    throw std::logic_error("substitution resolution did not converge");
}

Rule make_rule(std::string name, Poly schema_monic) {
    RBGS_CHECK(!schema_monic.is_zero(), "zero rule");
    RBGS_CHECK(schema_monic.leading_coeff().is_one(), "rule must be monic");
    Rule r;
    r.name = std::move(name);
    r.poly = std::move(schema_monic);
    std::vector<int32_t> gens;
    r.poly.leading_word().collect_gens(gens);
    for (int32_t g : gens)
        if (is_var_id(g)) r.vars.push_back(g);
    // Every non-leading word must sit strictly below the leading word.
    auto it = r.poly.terms().begin();
    const Word& lead = it->first;
    r.candidates.push_back(lead);
    for (++it; it != r.poly.terms().end(); ++it) {
        RBGS_CHECK(word_less(it->first, lead), "rule tail not below leading word");
        // R-degree is substitution-invariant, so only words tying the
        // leading in R-degree can outgrow it under some substitution.
        if (it->first.deg_r() == lead.deg_r()) r.candidates.push_back(it->first);
    }
    return r;
}

Caps Caps::defaults(int k, int l, int m_max) {
    Caps c;
    c.max_deg_r = k + l + 4;
    c.max_deg_x = 8;
    c.max_arity = m_max > 0 ? m_max : 5;
    return c;
}

namespace {

// Match pattern letters [pi..] against exactly the word letters [wi..wj).
// Variables bind nonempty contiguous segments; enumeration is shortest
// binding first, so the first solution found is canonical.
bool match_seq(const std::vector<Letter>& pat, size_t pi, const std::vector<Letter>& w, size_t wi,
               size_t wj, Subst& s) {
    if (pi == pat.size()) return wi == wj;
    if (wi == wj) return false;
    const Letter& p = pat[pi];
    if (p.is_gen() && is_var_id(p.gen()) && p.gen() != kStar) {
        if (s.has(p.gen())) {
            // Defensive: patterns are linear, but handle repeats soundly.
            const auto& bound = s.at(p.gen()).letters();
            if (wj - wi < bound.size()) return false;
            for (size_t t = 0; t < bound.size(); ++t) {
                Subst probe;
                if (!match_seq({bound[t]}, 0, w, wi + t, wi + t + 1, probe)) return false;
            }
            return match_seq(pat, pi + 1, w, wi + bound.size(), wj, s);
        }
        for (size_t len = 1; len <= wj - wi; ++len) {
            Subst saved = s;
            s.bind(p.gen(), Word(std::vector<Letter>(w.begin() + static_cast<long>(wi),
                                                     w.begin() + static_cast<long>(wi + len))));
            if (match_seq(pat, pi + 1, w, wi + len, wj, s)) return true;
            s = saved;
        }
        return false;
    }
    const Letter& a = w[wi];
    if (p.is_gen()) {
        if (!a.is_gen() || a.gen() != p.gen()) return false;
        return match_seq(pat, pi + 1, w, wi + 1, wj, s);
    }
    if (a.is_gen()) return false;
    Subst saved = s;
    if (match_seq(p.inner().letters(), 0, a.inner().letters(), 0, a.inner().letters().size(), s) &&
        match_seq(pat, pi + 1, w, wi + 1, wj, s))
        return true;
    s = saved;
    return false;
}

struct PathFrame {
    const Word* level;
    size_t letter; // index of the R-letter descended into
};

// Rebuild the star context from the descent path and the segment [i, j).
Word build_context(const std::vector<PathFrame>& path, const Word& level, size_t i, size_t j) {
    Word q = splice(level, i, j, Word::gen(kStar));
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        Word wrapped = Word::r(std::move(q));
        q = splice(*it->level, it->letter, it->letter + 1, wrapped);
    }
    return q;
}

bool search_level(const Word& level, std::vector<PathFrame>& path, const RuleSet& rules,
                  std::optional<Redex>& out) {
    const auto& ls = level.letters();
    for (size_t i = 0; i < ls.size(); ++i) {
        for (size_t r = 0; r < rules.size(); ++r) {
            for (const auto& cand : rules[r].candidates) {
                const auto& pat = cand.letters();
                for (size_t j = i + 1; j <= ls.size(); ++j) {
                    Subst s;
                    if (!match_seq(pat, 0, ls, i, j, s)) continue;
                    // The occurrence rewrites only if the matched word leads
                    // this instance of the rule.
                    Poly inst = s.apply(rules[r].poly);
                    if (inst.is_zero()) continue;
                    if (!word_eq(inst.leading_word(), s.apply(cand))) continue;
                    out = Redex{r, build_context(path, level, i, j), std::move(s),
                                std::move(inst)};
                    return true;
                }
            }
        }
        if (ls[i].is_r()) {
            path.push_back({&level, i});
            if (search_level(ls[i].inner(), path, rules, out)) return true;
            path.pop_back();
        }
    }
    return false;
}

} // namespace

std::optional<Subst> match(const Word& pattern, const Word& w) {
    Subst s;
    if (match_seq(pattern.letters(), 0, w.letters(), 0, w.letters().size(), s)) return s;
    return std::nullopt;
}

std::optional<Redex> find_redex(const Word& w, const RuleSet& rules) {
    std::optional<Redex> out;
    std::vector<PathFrame> path;
    search_level(w, path, rules, out);
    return out;
}

ReduceResult reduce(const Poly& f, const RuleSet& rules, const Caps& caps) {
    ReduceResult res;
    res.normal_form = f;
    struct WordHash {
        size_t operator()(const Word& w) const { return word_hash(w); }
    };
    struct WordEq {
        bool operator()(const Word& a, const Word& b) const { return word_eq(a, b); }
    };
    std::unordered_set<Word, WordHash, WordEq> irreducible;

    for (;;) {
        const Word* target = nullptr;
        Coeff coeff;
        std::optional<Redex> redex;
        for (const auto& [w, c] : res.normal_form.terms()) {
            if (irreducible.count(w)) continue;
            redex = find_redex(w, rules);
            if (redex) {
                target = &w;
                coeff = c;
                break;
            }
            irreducible.insert(w);
        }
        if (!redex) return res;

        if (++res.steps > caps.max_steps) {
            res.complete = false;
            res.cap = "max_steps";
            return res;
        }
        Word rewritten = *target; // copy: erased from the map below
        // The instance polynomial, placed into the context. Its leading
        // lands exactly on the rewritten monomial; instances need not stay
        // monic, so normalize by the instance's leading coefficient.
        Poly replaced;
        for (const auto& [wt, ct] : redex->instance.terms())
            replaced.add_term(ct, substitute(redex->q, wt));
        Coeff factor = coeff / replaced.leading_coeff();
        // Strictly-decreasing discipline: every replacement monomial other
        // than the leading one sits below the rewritten word.
        bool first = true;
        for (const auto& [wt, ct] : replaced.terms()) {
            if (first) {
                RBGS_CHECK(word_eq(wt, rewritten), "leading replacement mismatch");
                first = false;
                continue;
            }
            RBGS_CHECK(word_less(wt, rewritten), "rewrite does not decrease");
            if (wt.deg_x() > caps.max_deg_x || wt.deg_r() > caps.max_deg_r) {
                res.complete = false;
                res.cap = wt.deg_x() > caps.max_deg_x ? "max_deg_x" : "max_deg_r";
                return res;
            }
        }
        res.cert.push_back({factor, redex->q, redex->rule_index, redex->subst, rewritten});
        res.normal_form = res.normal_form - replaced.scaled(factor);
        if (res.normal_form.size() > caps.max_monomials) {
            res.complete = false;
            res.cap = "max_monomials";
            return res;
        }
    }
}

Poly replay(const Certificate& cert, const RuleSet& rules) {
    Poly acc;
    for (const auto& e : cert) {
        const Rule& rule = rules[e.rule_index];
        for (const auto& [wt, ct] : rule.poly.terms())
            acc.add_term(e.coeff * ct, substitute(e.context, e.subst.apply(wt)));
    }
    return acc;
}

Poly RbExpander::expand(const Poly& f) {
    Poly acc;
    for (const auto& [w, c] : f.terms()) acc = acc + expand_word(w).scaled(c);
    return acc;
}

namespace {

std::optional<size_t> first_rr_pair(const Word& w) {
    const auto& ls = w.letters();
    for (size_t i = 0; i + 1 < ls.size(); ++i)
        if (ls[i].is_r() && ls[i + 1].is_r()) return i;
    return std::nullopt;
}

} // namespace

Poly RbExpander::expand_word(const Word& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    Poly result;

    auto expand_top_pair = [&](const Word& v, size_t i) {
        const Word& a = v.at(i).inner();
        const Word& b = v.at(i + 1).inner();
        Word ab1 = Word::r(Word::concat(a, Word::r(b)));
        Word ab2 = Word::r(Word::concat(Word::r(a), b));
        Word ab3 = Word::r(Word::concat(a, b));
        Poly acc = expand_word(splice(v, i, i + 2, ab1));
        acc = acc + expand_word(splice(v, i, i + 2, ab2));
        acc = acc + expand_word(splice(v, i, i + 2, ab3)).scaled(lambda_);
        return acc;
    };

    auto normalize_letters = [&](const Word& v) {
        // Letters' inner words are normalized independently and recombined
        // multilinearly; this cannot create new top-level R-R pairs.
        Poly acc;
        bool started = false;
        for (const auto& l : v.letters()) {
            Poly piece;
            if (l.is_gen())
                piece = Poly::word(Word::gen(l.gen()));
            else
                piece = expand_word(l.inner()).apply_r();
            acc = started ? acc * piece : piece;
            started = true;
        }
        return acc;
    };

    if (strategy_ == RbStrategy::LeftmostOutermost) {
        if (auto i = first_rr_pair(w))
            result = expand_top_pair(w, *i);
        else
            result = normalize_letters(w);
    } else {
        // Innermost: normalize letter contents first, then resolve the
        // leftmost top-level pair of each resulting word.
        Poly flat;
        bool started = false;
        for (const auto& l : w.letters()) {
            Poly piece;
            if (l.is_gen())
                piece = Poly::word(Word::gen(l.gen()));
            else
                piece = expand_word(l.inner()).apply_r();
            flat = started ? flat * piece : piece;
            started = true;
        }
        for (const auto& [v, c] : flat.terms()) {
            if (auto i = first_rr_pair(v))
                result = result + expand_top_pair(v, *i).scaled(c);
            else
                result.add_term(c, v);
        }
    }
    memo_.emplace(w, result);
    return result;
}

Poly expand_rb(const Poly& f, const Coeff& lambda, RbStrategy strategy) {
    RbExpander e(lambda, strategy);
    return e.expand(f);
}

} // namespace rbgs
