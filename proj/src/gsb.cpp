#include "rbgs/gsb.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <set>
#include <thread>

#include "rbgs/textio.hpp"

namespace rbgs {

namespace {

constexpr int32_t kRenameShift = 4096; // applied to g's variables before unification

Word shift_vars_word(const Word& w, int32_t shift) {
    std::vector<Letter> out;
    for (const auto& l : w.letters()) {
        if (l.is_gen())
            out.push_back(Letter(is_var_id(l.gen()) ? l.gen() + shift : l.gen()));
        else
            out.push_back(Letter(std::make_shared<const Word>(shift_vars_word(l.inner(), shift))));
    }
    return Word(std::move(out));
}

Poly shift_vars(const Poly& p, int32_t shift) {
    Poly r;
    for (const auto& [w, c] : p.terms()) r.add_term(c, shift_vars_word(w, shift));
    return r;
}

using Letters = std::vector<Letter>;

Word slice_word(const Letters& ls, size_t i, size_t j) {
    return Word(Letters(ls.begin() + static_cast<long>(i), ls.begin() + static_cast<long>(j)));
}

void unify_rec(const Letters& A, size_t i, const Letters& B, size_t j, const Subst& cur,
               std::vector<Subst>& out) {
    if (i == A.size() && j == B.size()) {
        out.push_back(cur);
        return;
    }
    if (i == A.size() || j == B.size()) return;
    const Letter& a = A[i];
    const Letter& b = B[j];
    bool a_var = a.is_gen() && is_var_id(a.gen()) && a.gen() != kStar;
    bool b_var = b.is_gen() && is_var_id(b.gen()) && b.gen() != kStar;
    if (a_var) {
        for (size_t len = 1; len + j <= B.size(); ++len) {
            Subst s = cur;
            s.bind(a.gen(), slice_word(B, j, j + len));
            unify_rec(A, i + 1, B, j + len, s, out);
        }
        if (b_var) {
            // a bound to B-prefixes covers len-1 merging; the symmetric case
            // binds b to longer A-prefixes.
            for (size_t len = 2; len + i <= A.size(); ++len) {
                Subst s = cur;
                s.bind(b.gen(), slice_word(A, i, i + len));
                unify_rec(A, i + len, B, j + 1, s, out);
            }
        }
        return;
    }
    if (b_var) {
        for (size_t len = 1; len + i <= A.size(); ++len) {
            Subst s = cur;
            s.bind(b.gen(), slice_word(A, i, i + len));
            unify_rec(A, i + len, B, j + 1, s, out);
        }
        return;
    }
    if (a.is_gen() != b.is_gen()) return;
    if (a.is_gen()) {
        if (a.gen() != b.gen()) return;
        unify_rec(A, i + 1, B, j + 1, cur, out);
        return;
    }
    std::vector<Subst> inner;
    unify_rec(a.inner().letters(), 0, b.inner().letters(), 0, cur, inner);
    for (const auto& s : inner) unify_rec(A, i + 1, B, j + 1, s, out);
}

} // namespace

std::vector<Subst> unify_seqs(const Letters& a, const Letters& b) {
    std::vector<Subst> out;
    unify_rec(a, 0, b, 0, Subst(), out);
    for (auto& s : out) s.resolve();
    return out;
}

namespace {

struct Frame {
    const Word* level;
    size_t letter;
};

Word rebuild_context(const std::vector<Frame>& path, const Word& level, size_t i, size_t j) {
    Word q = splice(level, i, j, Word::gen(kStar));
    for (auto it = path.rbegin(); it != path.rend(); ++it)
        q = splice(*it->level, it->letter, it->letter + 1, Word::r(std::move(q)));
    return q;
}

void inclusions_at_level(const RuleSet& rules, size_t f, size_t g, const Word& flead,
                         const Word& glead, const Word& level, std::vector<Frame>& path,
                         std::vector<Overlap>& out) {
    const auto& ls = level.letters();
    for (size_t i = 0; i < ls.size(); ++i) {
        for (size_t j = i + 1; j <= ls.size(); ++j) {
            // Overlaps strictly inside a variable are classically resolvable.
            if (j == i + 1 && ls[i].is_gen() && is_var_id(ls[i].gen())) continue;
            // Trivial self-inclusion f = q|_f with q = *.
            if (f == g && path.empty() && i == 0 && j == ls.size()) continue;
            for (auto& sigma : unify_seqs(
                     Letters(ls.begin() + static_cast<long>(i), ls.begin() + static_cast<long>(j)),
                     glead.letters())) {
                Overlap o;
                o.kind = CompKind::Inclusion;
                o.f_index = f;
                o.g_index = g;
                o.q = rebuild_context(path, level, i, j);
                o.witness = sigma.apply(flead);
                o.sigma = std::move(sigma);
                out.push_back(std::move(o));
            }
        }
        if (ls[i].is_r()) {
            path.push_back({&level, i});
            inclusions_at_level(rules, f, g, flead, glead, ls[i].inner(), path, out);
            path.pop_back();
        }
    }
}

std::string overlap_key(const Overlap& o) {
    std::string s = o.kind == CompKind::Inclusion ? "I" : "X";
    s += std::to_string(o.f_index) + "," + std::to_string(o.g_index) + ";";
    s += print_word(o.witness) + ";";
    if (o.kind == CompKind::Inclusion)
        s += print_word(o.sigma.apply(o.q));
    else
        s += print_word(o.nu) + "|" + print_word(o.mu);
    return s;
}

void dedupe(std::vector<Overlap>& v) {
    std::set<std::string> seen;
    std::vector<Overlap> keep;
    for (auto& o : v)
        if (seen.insert(overlap_key(o)).second) keep.push_back(std::move(o));
    v = std::move(keep);
}

} // namespace

std::vector<Overlap> find_inclusions(const RuleSet& rules, size_t f, size_t g) {
    const Word& flead = rules[f].leading();
    Word glead = shift_vars_word(rules[g].leading(), kRenameShift);
    std::vector<Overlap> out;
    std::vector<Frame> path;
    inclusions_at_level(rules, f, g, flead, glead, flead, path, out);
    dedupe(out);
    return out;
}

std::vector<Overlap> find_intersections(const RuleSet& rules, size_t f, size_t g) {
    const auto& F = rules[f].leading().letters();
    Word glead = shift_vars_word(rules[g].leading(), kRenameShift);
    const auto& G = glead.letters();
    std::vector<Overlap> out;
    for (size_t s = 1; s < F.size(); ++s) {
        for (size_t t = 1; t < G.size(); ++t) {
            for (auto& sigma : unify_seqs(Letters(F.begin() + static_cast<long>(s), F.end()),
                                          Letters(G.begin(), G.begin() + static_cast<long>(t)))) {
                Overlap o;
                o.kind = CompKind::Intersection;
                o.f_index = f;
                o.g_index = g;
                o.nu = sigma.apply(slice_word(F, 0, s));
                o.mu = sigma.apply(slice_word(G, t, G.size()));
                o.witness = Word::concat(sigma.apply(Word(Letters(F))), o.mu);
                o.sigma = std::move(sigma);
                out.push_back(std::move(o));
            }
        }
    }
    dedupe(out);
    return out;
}

std::vector<Overlap> find_overlaps(const RuleSet& rules, size_t f, size_t g) {
    auto a = find_intersections(rules, f, g);
    auto b = find_inclusions(rules, f, g);
    a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
    // Deterministic processing order: by witness under the monomial order,
    // then by kind and printed context.
    std::stable_sort(a.begin(), a.end(), [](const Overlap& x, const Overlap& y) {
        Cmp c = compare(x.witness, y.witness);
        if (c != Cmp::Equal) return c == Cmp::Less;
        return overlap_key(x) < overlap_key(y);
    });
    return a;
}

namespace {

std::vector<int32_t> witness_vars(const Word& w) {
    std::vector<int32_t> gens, vars;
    w.collect_gens(gens);
    for (int32_t g : gens)
        if (is_var_id(g) && g != kStar &&
            std::find(vars.begin(), vars.end(), g) == vars.end())
            vars.push_back(g);
    return vars;
}

} // namespace

bool overlap_within_caps(const Overlap& o, const Caps& caps) {
    return o.witness.deg_x() <= caps.max_deg_x && o.witness.deg_r() <= caps.max_deg_r &&
           static_cast<int>(witness_vars(o.witness).size()) <= caps.max_arity;
}

Composition check_composition(const RuleSet& rules, const Overlap& o, const Caps& caps) {
    const Rule& f = rules[o.f_index];
    const Rule& g = rules[o.g_index];
    Poly gshift = shift_vars(g.poly, kRenameShift);

    Poly fs = o.sigma.apply(f.poly);
    Poly gs = o.sigma.apply(gshift);
    Poly combined_pat;
    if (o.kind == CompKind::Inclusion) {
        combined_pat = fs - substitute(o.sigma.apply(o.q), gs);
    } else {
        static const Word kEmpty{};
        combined_pat = fs.mul_word(kEmpty, o.mu) - gs.mul_word(o.nu, kEmpty);
    }

    // Freeze the remaining schema variables as fresh concrete generators,
    // numbered by first occurrence in the witness.
    Subst inst;
    {
        int32_t next = 1;
        for (int32_t v : witness_vars(o.witness)) inst.bind(v, Word::gen(next++));
    }

    Composition c;
    c.kind = o.kind;
    c.f_name = f.name;
    c.g_name = g.name;
    c.witness = inst.apply(o.witness);
    c.combined = inst.apply(combined_pat);
    c.arity = static_cast<int>(inst.map().size());

    // An overlap of the pattern leadings need not be anchored at the witness
    // for this instance when another word of an unstable schema outgrows the
    // leading; such compositions are still required to reduce to zero, but
    // the strictly-below-witness certificate claim only applies when anchored.
    c.anchored = c.combined.is_zero() || word_less(c.combined.leading_word(), c.witness);

    ReduceResult rr = reduce(c.combined, rules, caps);
    c.remainder = rr.normal_form;
    c.cert = std::move(rr.cert);
    if (c.anchored)
        for (const auto& e : c.cert)
            RBGS_CHECK(word_less(e.rewritten, c.witness), "certificate entry not below witness");
    if (!rr.complete) {
        c.status = CompStatus::Inconclusive;
        c.cap = rr.cap;
    } else {
        c.status = c.remainder.is_zero() ? CompStatus::Trivial : CompStatus::Nontrivial;
    }
    return c;
}

VerifyReport verify_gsb(const RuleSet& rules, const Caps& caps, int threads) {
    VerifyReport rep;
    rep.caps = caps;
    std::vector<Overlap> tasks;
    for (size_t i = 0; i < rules.size(); ++i) {
        for (size_t j = 0; j < rules.size(); ++j) {
            ++rep.pairs_checked;
            for (auto& o : find_overlaps(rules, i, j)) {
                if (!overlap_within_caps(o, caps)) {
                    ++rep.beyond_caps;
                    continue;
                }
                tasks.push_back(std::move(o));
            }
        }
    }
    std::vector<Composition> results(tasks.size());
    if (threads <= 1) {
        for (size_t t = 0; t < tasks.size(); ++t)
            results[t] = check_composition(rules, tasks[t], caps);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (;;) {
                    size_t idx = next.fetch_add(1);
                    if (idx >= tasks.size()) return;
                    results[idx] = check_composition(rules, tasks[idx], caps);
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    for (auto& c : results) {
        ++rep.compositions_checked;
        switch (c.status) {
        case CompStatus::Trivial: ++rep.trivial; break;
        case CompStatus::Nontrivial: rep.nontrivial.push_back(std::move(c)); break;
        case CompStatus::Inconclusive: rep.inconclusive.push_back(std::move(c)); break;
        }
    }
    return rep;
}

CompleteResult complete(const RuleSet& start, const Caps& caps, size_t max_new_rules) {
    CompleteResult res;
    res.rules = start;
    res.report.caps = caps;
    std::deque<std::pair<size_t, size_t>> queue;
    for (size_t i = 0; i < res.rules.size(); ++i)
        for (size_t j = 0; j < res.rules.size(); ++j) queue.emplace_back(i, j);
    std::stable_sort(queue.begin(), queue.end(), [](auto a, auto b) {
        auto ka = std::tuple(std::max(a.first, a.second), a.first, a.second);
        auto kb = std::tuple(std::max(b.first, b.second), b.first, b.second);
        return ka < kb;
    });
    while (!queue.empty()) {
        auto [i, j] = queue.front();
        queue.pop_front();
        ++res.report.pairs_checked;
        for (const auto& o : find_overlaps(res.rules, i, j)) {
            if (!overlap_within_caps(o, caps)) {
                ++res.report.beyond_caps;
                continue;
            }
            Composition c = check_composition(res.rules, o, caps);
            ++res.report.compositions_checked;
            if (c.status == CompStatus::Trivial) {
                ++res.report.trivial;
                continue;
            }
            if (c.status == CompStatus::Inconclusive) {
                res.report.inconclusive.push_back(std::move(c));
                res.capped = true;
                continue;
            }
            // Adjoin the monic reduced remainder as a new rule.
            if (res.added.size() >= max_new_rules) {
                res.capped = true;
                res.report.nontrivial.push_back(std::move(c));
                continue;
            }
            Poly schema = schema_from_concrete(c.remainder.monic());
            std::string name = "C" + std::to_string(res.added.size() + 1);
            res.rules.rules.push_back(make_rule(name, schema));
            res.added.push_back(name);
            size_t n = res.rules.size() - 1;
            for (size_t a = 0; a <= n; ++a) queue.emplace_back(a, n);
            for (size_t b = 0; b < n; ++b) queue.emplace_back(n, b);
        }
    }
    return res;
}

namespace {

struct DegKey {
    int a, b;
    bool operator<(const DegKey& o) const { return a != o.a ? a < o.a : b < o.b; }
};

class WordEnumerator {
public:
    explicit WordEnumerator(int xsize) : xsize_(xsize) {}

    const std::vector<Word>& words_exact(int a, int b) {
        auto key = DegKey{a, b};
        if (auto it = words_.find(key); it != words_.end()) return it->second;
        std::vector<Word> out;
        if (a >= 1 && b >= 0) {
            for (const auto& l : letters_exact(a, b)) out.push_back(Word({l}));
            for (int a1 = 1; a1 <= a; ++a1) {
                for (int b1 = 0; b1 <= b; ++b1) {
                    if (a - a1 < 1) continue;
                    const auto& firsts = letters_exact(a1, b1);
                    if (firsts.empty()) continue;
                    const auto& rests = words_exact(a - a1, b - b1);
                    for (const auto& l : firsts)
                        for (const auto& r : rests) {
                            std::vector<Letter> ls;
                            ls.push_back(l);
                            ls.insert(ls.end(), r.letters().begin(), r.letters().end());
                            out.push_back(Word(std::move(ls)));
                        }
                }
            }
        }
        return words_.emplace(key, std::move(out)).first->second;
    }

    const std::vector<Letter>& letters_exact(int a, int b) {
        auto key = DegKey{a, b};
        if (auto it = letters_.find(key); it != letters_.end()) return it->second;
        std::vector<Letter> out;
        if (a == 1 && b == 0)
            for (int g = 1; g <= xsize_; ++g) out.push_back(Letter(g));
        if (b >= 1)
            for (const auto& w : words_exact(a, b - 1))
                out.push_back(Letter(std::make_shared<const Word>(w)));
        return letters_.emplace(key, std::move(out)).first->second;
    }

private:
    int xsize_;
    std::map<DegKey, std::vector<Word>> words_;
    std::map<DegKey, std::vector<Letter>> letters_;
};

} // namespace

std::vector<Word> enumerate_words(int xsize, int max_deg_x, int max_deg_r) {
    WordEnumerator e(xsize);
    std::vector<Word> out;
    for (int a = 1; a <= max_deg_x; ++a)
        for (int b = 0; b <= max_deg_r; ++b) {
            const auto& ws = e.words_exact(a, b);
            out.insert(out.end(), ws.begin(), ws.end());
        }
    std::sort(out.begin(), out.end(), word_less);
    return out;
}

namespace {

// Star words with deg_x (not counting the star) == a and deg_r == b.
class StarEnumerator {
public:
    explicit StarEnumerator(int xsize) : plain_(xsize) {}

    const std::vector<Word>& exact(int a, int b) {
        auto key = DegKey{a, b};
        if (auto it = star_.find(key); it != star_.end()) return it->second;
        std::vector<Word> out;
        for (int au = 0; au <= a; ++au)
            for (int bu = 0; bu <= b; ++bu)
                for (int as = 0; as <= a - au; ++as)
                    for (int bs = 0; bs <= b - bu; ++bs) {
                        int av = a - au - as, bv = b - bu - bs;
                        std::vector<Letter> star_letters;
                        if (as == 0 && bs == 0) star_letters.push_back(Letter(kStar));
                        if (bs >= 1)
                            for (const auto& sw : exact(as, bs - 1))
                                star_letters.push_back(Letter(std::make_shared<const Word>(sw)));
                        if (star_letters.empty()) continue;
                        const std::vector<Word>& prefixes = plain_or_empty(au, bu);
                        const std::vector<Word>& suffixes = plain_or_empty(av, bv);
                        for (const auto& sl : star_letters)
                            for (const auto& u : prefixes)
                                for (const auto& v : suffixes) {
                                    std::vector<Letter> ls = u.letters();
                                    ls.push_back(sl);
                                    ls.insert(ls.end(), v.letters().begin(), v.letters().end());
                                    out.push_back(Word(std::move(ls)));
                                }
                    }
        return star_.emplace(key, std::move(out)).first->second;
    }

private:
    const std::vector<Word>& plain_or_empty(int a, int b) {
        if (a == 0 && b == 0) {
            static const std::vector<Word> kJustEmpty{Word()};
            return kJustEmpty;
        }
        return plain_.words_exact(a, b);
    }

    WordEnumerator plain_;
    std::map<DegKey, std::vector<Word>> star_;
};

} // namespace

std::vector<Word> enumerate_star_words(int xsize, int max_deg_x, int max_deg_r) {
    StarEnumerator e(xsize);
    std::vector<Word> out;
    for (int a = 0; a <= max_deg_x; ++a)
        for (int b = 0; b <= max_deg_r; ++b) {
            const auto& ws = e.exact(a, b);
            out.insert(out.end(), ws.begin(), ws.end());
        }
    return out;
}

std::vector<Word> irr_enumerate(const RuleSet& rules, int xsize, int max_deg_x, int max_deg_r) {
    std::vector<Word> out;
    for (const auto& w : enumerate_words(xsize, max_deg_x, max_deg_r))
        if (!find_redex(w, rules)) out.push_back(w);
    return out;
}

DimReport dimension_oracle(const RuleSet& rules, int xsize, int max_deg_x, int max_deg_r) {
    DimReport rep;
    for (const auto& w : enumerate_words(xsize, max_deg_x, max_deg_r))
        ++rep.cells[CellKey{w.deg_x(), w.deg_r()}].words;

    std::vector<Word> var_words = enumerate_words(xsize, max_deg_x, max_deg_r);
    std::vector<Word> contexts = enumerate_star_words(xsize, max_deg_x, max_deg_r);

    std::map<Word, Poly, WordGreater> pivots;
    auto add_row = [&](Poly row) {
        ++rep.rows;
        while (!row.is_zero()) {
            auto it = pivots.find(row.leading_word());
            if (it == pivots.end()) {
                Word lw = row.leading_word();
                pivots.emplace(lw, row.monic());
                break;
            }
            row = row - it->second.scaled(row.leading_coeff());
        }
    };

    for (const auto& rule : rules.rules) {
        const Word& lead = rule.leading();
        std::vector<int32_t> vars = rule.vars;
        std::vector<const Word*> chosen(vars.size());
        std::function<void(size_t, int, int)> assign = [&](size_t vi, int dx, int dr) {
            if (dx > max_deg_x || dr > max_deg_r) return;
            if (vi == vars.size()) {
                Subst sigma;
                for (size_t t = 0; t < vars.size(); ++t) sigma.bind(vars[t], *chosen[t]);
                Poly inst = sigma.apply(rule.poly);
                const Word& ilead = inst.leading_word();
                for (const auto& q : contexts) {
                    int qdx = q.deg_x() - 1; // the star letter is not a generator
                    if (qdx + ilead.deg_x() > max_deg_x) continue;
                    if (q.deg_r() + ilead.deg_r() > max_deg_r) continue;
                    add_row(substitute(q, inst));
                }
                return;
            }
            for (const auto& u : var_words) {
                chosen[vi] = &u;
                assign(vi + 1, dx + u.deg_x() - 1, dr + u.deg_r());
            }
        };
        assign(0, lead.deg_x(), lead.deg_r());
    }

    for (const auto& [w, p] : pivots) ++rep.cells[CellKey{w.deg_x(), w.deg_r()}].pivots;
    return rep;
}

Word op_mirror(const Word& w) {
    std::vector<Letter> out;
    const auto& ls = w.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
        if (it->is_gen())
            out.push_back(*it);
        else
            out.push_back(Letter(std::make_shared<const Word>(op_mirror(it->inner()))));
    }
    return Word(std::move(out));
}

Poly op_mirror(const Poly& p) {
    Poly r;
    for (const auto& [w, c] : p.terms()) r.add_term(c, op_mirror(w));
    return r;
}

namespace {

Word rename_gens(const Word& w, const std::map<int32_t, int32_t>& m) {
    std::vector<Letter> out;
    for (const auto& l : w.letters()) {
        if (l.is_gen()) {
            auto it = m.find(l.gen());
            out.push_back(Letter(it == m.end() ? l.gen() : it->second));
        } else {
            out.push_back(Letter(std::make_shared<const Word>(rename_gens(l.inner(), m))));
        }
    }
    return Word(std::move(out));
}

Poly renumber(const Poly& p, const std::vector<int32_t>& order) {
    std::map<int32_t, int32_t> m;
    for (size_t i = 0; i < order.size(); ++i)
        m[order[i]] = kVarBase + 1 + static_cast<int32_t>(i);
    Poly q;
    for (const auto& [w, c] : p.terms()) q.add_term(c, rename_gens(w, m));
    return q;
}

} // namespace

Poly canonical_vars(const Poly& schema) {
    std::vector<int32_t> gens, order;
    schema.leading_word().collect_gens(gens);
    for (int32_t g : gens) {
        RBGS_CHECK(is_var_id(g), "canonical_vars: concrete generator in schema");
        if (std::find(order.begin(), order.end(), g) == order.end()) order.push_back(g);
    }
    return renumber(schema, order);
}

Poly schema_from_concrete(const Poly& p) {
    std::vector<int32_t> gens, order;
    p.leading_word().collect_gens(gens);
    for (int32_t g : gens) {
        RBGS_CHECK(!is_var_id(g), "schema_from_concrete: variable already present");
        RBGS_CHECK(std::find(order.begin(), order.end(), g) == order.end(),
                   "schema_from_concrete: polynomial is not multilinear");
        order.push_back(g);
    }
    // Multilinearity: every word carries exactly the leading word's generators.
    std::vector<int32_t> expect = order;
    std::sort(expect.begin(), expect.end());
    for (const auto& [w, c] : p.terms()) {
        std::vector<int32_t> got;
        w.collect_gens(got);
        std::sort(got.begin(), got.end());
        RBGS_CHECK(got == expect, "schema_from_concrete: polynomial is not multilinear");
    }
    return renumber(p, order);
}

} // namespace rbgs
