#pragma once

#include <map>
#include <string>
#include <vector>

#include "rbgs/rewrite.hpp"

namespace rbgs {

/// All unifiers of two linear letter sequences with disjoint variables.
/// Variables bind nonempty segments of the other side; bindings may chain
/// and are resolved before returning.
std::vector<Subst> unify_seqs(const std::vector<Letter>& a, const std::vector<Letter>& b);

enum class CompKind { Intersection, Inclusion };

/// Pattern-level overlap between the leading words of two rules
/// (g's variables renamed apart before unification).
struct Overlap {
    CompKind kind;
    size_t f_index, g_index;
    Subst sigma;          // unifier over the combined variable set
    Word q;               // inclusion: star context (pattern, un-substituted)
    Word mu, nu;          // intersection: w = sigma(lead_f) mu = nu sigma(lead_g)
    Word witness;         // sigma applied, still over schema variables
};

std::vector<Overlap> find_inclusions(const RuleSet& rules, size_t f, size_t g);
std::vector<Overlap> find_intersections(const RuleSet& rules, size_t f, size_t g);
std::vector<Overlap> find_overlaps(const RuleSet& rules, size_t f, size_t g);

enum class CompStatus { Trivial, Nontrivial, Inconclusive };

struct Composition {
    CompKind kind = CompKind::Inclusion;
    std::string f_name, g_name;
    Word witness;     // concrete witness word (variables frozen to fresh generators)
    Poly combined;    // instantiated composition polynomial
    Poly remainder;   // normal form modulo the rule set
    Certificate cert;
    CompStatus status = CompStatus::Trivial;
    std::string cap;  // which cap fired when Inconclusive
    bool anchored = true;
    int arity = 0;
};

/// Instantiate and check one overlap: build the composition polynomial,
/// reduce it with the strictly-below-witness discipline, classify.
Composition check_composition(const RuleSet& rules, const Overlap& o, const Caps& caps);

struct VerifyReport {
    int k = 0, l = 0, m_max = 0;
    std::string mode;
    Caps caps;
    size_t pairs_checked = 0;
    size_t compositions_checked = 0;
    size_t beyond_caps = 0; // overlaps whose witness exceeds the caps (not examined)
    size_t trivial = 0;
    std::vector<Composition> nontrivial;
    std::vector<Composition> inconclusive;

    bool all_trivial() const { return nontrivial.empty() && inconclusive.empty(); }
};

/// Enumerate every composition among all rule pairs with witness within caps
/// and check each one. Deterministic output, independent of thread count.
VerifyReport verify_gsb(const RuleSet& rules, const Caps& caps, int threads = 1);

struct CompleteResult {
    RuleSet rules;
    VerifyReport report;           // statuses observed over the whole run
    std::vector<std::string> added; // names of adjoined rules, in order
    bool capped = false;
};

/// Shirshov completion: adjoin monic reduced nontrivial remainders until no
/// composition within caps is nontrivial. Deterministic given caps.
CompleteResult complete(const RuleSet& start, const Caps& caps, size_t max_new_rules = 500);

/// All words over generators x1..x<xsize> within the given bounds, sorted
/// ascending under the monomial order.
std::vector<Word> enumerate_words(int xsize, int max_deg_x, int max_deg_r);

/// Star words q with deg_x (excluding the star) and deg_r within bounds.
std::vector<Word> enumerate_star_words(int xsize, int max_deg_x, int max_deg_r);

/// Words within bounds containing no occurrence of any leading pattern.
std::vector<Word> irr_enumerate(const RuleSet& rules, int xsize, int max_deg_x, int max_deg_r);

struct CellKey {
    int deg_x, deg_r;
    bool operator<(const CellKey& o) const {
        return deg_x != o.deg_x ? deg_x < o.deg_x : deg_r < o.deg_r;
    }
};

struct DimCell {
    size_t words = 0;   // basis words of the free algebra in the cell
    size_t pivots = 0;  // leading words of the relation row space in the cell
    size_t dim() const { return words - pivots; }
};

struct DimReport {
    std::map<CellKey, DimCell> cells;
    size_t rows = 0;
};

/// Linear-algebra route: span all words within bounds, impose every rule
/// instance q|_{sigma(rule)} whose monomials stay within bounds, and return
/// the codimension per (deg_x, deg_r) cell via exact Gaussian elimination.
/// Enumerates instances directly from substitutions and star contexts; does
/// not consult the pattern matcher.
DimReport dimension_oracle(const RuleSet& rules, int xsize, int max_deg_x, int max_deg_r);

/// Reverse every product, keep R: the op anti-automorphism.
Word op_mirror(const Word& w);
Poly op_mirror(const Poly& p);

/// Renumber schema variables canonically: first occurrence in the leading
/// word becomes x1, the next x2, and so on.
Poly canonical_vars(const Poly& schema);

/// Turn a multilinear polynomial over concrete generators into a schema by
/// mapping each generator to a variable (canonical order).
Poly schema_from_concrete(const Poly& p);

} // namespace rbgs
