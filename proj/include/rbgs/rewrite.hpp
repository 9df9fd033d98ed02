#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "rbgs/poly.hpp"

namespace rbgs {

/// Binding of schema variables to words. Variables are linear in every
/// pattern, and a variable may bind any nonempty word (letter sequence).
class Subst {
public:
    bool has(int32_t v) const { return map_.count(v) != 0; }
    const Word& at(int32_t v) const { return map_.at(v); }
    void bind(int32_t v, Word w);
    const std::map<int32_t, Word>& map() const { return map_; }

    /// Substitute bound variables; unbound variables stay in place.
    Word apply(const Word& w) const;
    Poly apply(const Poly& p) const;

    /// Resolve chained bindings (var bound to a word containing other bound
    /// variables) until a fixpoint; needed after two-sided unification.
    void resolve();

private:
    std::map<int32_t, Word> map_;
};

/// Rewrite rule: a monic polynomial over schema variables together with its
/// cached leading word. A schema stands for the family of its substitution
/// instances; each instance is oriented at its own leading word. Words other
/// than the pattern leading can lead an instance only when they tie with the
/// leading in R-degree, so those are kept as additional match candidates.
struct Rule {
    std::string name;  // e.g. "R1", "R4[m=3]", "C17" for completed rules
    Poly poly;         // monic, leading word first
    std::vector<int32_t> vars;
    std::vector<Word> candidates; // maximal-R-degree words, pattern leading first

    const Word& leading() const { return poly.leading_word(); }
};

Rule make_rule(std::string name, Poly schema_monic);

struct RuleSet {
    std::vector<Rule> rules;
    size_t size() const { return rules.size(); }
    const Rule& operator[](size_t i) const { return rules[i]; }
};

struct Caps {
    int max_deg_x = 8;
    int max_deg_r = 12;
    int max_arity = 5;
    long long max_steps = 1'000'000;
    size_t max_monomials = 200'000;

    static Caps defaults(int k, int l, int m_max);
};

/// Occurrence of a rule instance's leading word inside a concrete word: the
/// star-context q, the matched rule and substitution, and the instantiated
/// rule polynomial whose leading word sits at the occurrence.
struct Redex {
    size_t rule_index;
    Word q;
    Subst subst;
    Poly instance; // subst applied to the rule polynomial
};

/// Match a linear pattern against a whole concrete word. Returns the unique
/// substitution when one exists (first in canonical enumeration order).
std::optional<Subst> match(const Word& pattern, const Word& w);

/// Locate the leftmost-outermost occurrence of any rule's leading pattern
/// (lowest rule index first at equal position, then shortest extent).
std::optional<Redex> find_redex(const Word& w, const RuleSet& rules);

struct CertEntry {
    Coeff coeff;
    Word context; // star-word q
    size_t rule_index;
    Subst subst;
    Word rewritten; // q|_{subst(lead)}, the monomial that was rewritten
};

using Certificate = std::vector<CertEntry>;

struct ReduceResult {
    Poly normal_form;
    Certificate cert;
    bool complete = true;     // false when a cap fired
    std::string cap;          // which cap fired
    long long steps = 0;
};

/// Full reduction modulo a rule set. Always rewrites the largest reducible
/// monomial; each rewrite strictly decreases the rewritten monomial (checked).
ReduceResult reduce(const Poly& f, const RuleSet& rules, const Caps& caps);

/// Replay a certificate: returns sum_i c_i * q_i|_{subst_i(rule_i.poly)},
/// which must equal input - output exactly.
Poly replay(const Certificate& cert, const RuleSet& rules);

enum class RbStrategy { LeftmostOutermost, LeftmostInnermost };

/// Normal form in the free Rota-Baxter algebra of weight lambda: rewrite
/// adjacent R-letters with R(a)R(b) -> R(aR(b)) + R(R(a)b) + lambda R(ab)
/// until none remain. This rewriting always terminates.
class RbExpander {
public:
    explicit RbExpander(Coeff lambda, RbStrategy strategy = RbStrategy::LeftmostOutermost)
        : lambda_(std::move(lambda)), strategy_(strategy) {}

    Poly expand(const Poly& f);
    Poly expand_word(const Word& w);

private:
    struct WordHash {
        size_t operator()(const Word& w) const { return word_hash(w); }
    };
    struct WordEq {
        bool operator()(const Word& a, const Word& b) const { return word_eq(a, b); }
    };

    Coeff lambda_;
    RbStrategy strategy_;
    std::unordered_map<Word, Poly, WordHash, WordEq> memo_;
};

Poly expand_rb(const Poly& f, const Coeff& lambda,
               RbStrategy strategy = RbStrategy::LeftmostOutermost);

} // namespace rbgs
