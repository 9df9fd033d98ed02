#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rbgs/gsb.hpp"

namespace rbgs {

enum class FamilyTag { P, Q, P0, Q0 };

/// Integer composition indexing a nested R-exponent pattern. P/P0 tuples
/// have length m, Q/Q0 tuples length m-1; the sum of entries is n. P and Q
/// additionally require the last entry to exceed 1.
struct IndexTuple {
    FamilyTag tag = FamilyTag::P0;
    int n = 0, m = 0;
    std::vector<int> entries;
};

/// Exhaustive, duplicate-free, lexicographically sorted enumeration.
std::vector<IndexTuple> enum_tuples(FamilyTag tag, int n, int m);

std::vector<int> tuple_restrict(const std::vector<int>& t, int s);  // t|_s  (i_s .. end)
std::vector<int> tuple_prefix(const std::vector<int>& t, int s);    // t down_s (i_1 .. i_s)
std::vector<int> tuple_decrement(const std::vector<int>& t, int s, int q);

/// Left-nested builder: an r-tuple with r arguments gives
/// R^{t1}( R^{t2}( ... (R^{tr}(y1) y2) ... ) yr ); with r+1 arguments the
/// last one multiplies on the right outside all R's (the Q-shape).
Poly build_L(const std::vector<int>& t, const std::vector<Poly>& args);
Poly build_L_op(const std::vector<int>& t, const std::vector<Poly>& args);

/// The starred builders: insertion of an extra left factor x into every
/// R-layer, two summands per layer (with and without the lambda weight).
Poly build_Lstar(const std::vector<int>& t, const Poly& x, const std::vector<Poly>& args,
                 const Coeff& lambda);
Poly build_Lstar_op(const std::vector<int>& t, const Poly& x, const std::vector<Poly>& args,
                    const Coeff& lambda);

enum class LKind { L, Lop, Lstar, LstarOp };

/// Sum of the builder over a tuple family; an empty family gives 0. For
/// Lstar kinds pass the star argument as args.front().
Poly sum_over_family(FamilyTag tag, int n, int m, LKind kind, const std::vector<Poly>& args,
                     const Coeff& lambda);

/// Relation identifier: family index 1..10, plus the arity parameter for
/// the m-indexed families R4, R6, R8, R10.
struct RelId {
    int family = 1;
    int m = 0;
    std::string str() const;
};

struct GenParams {
    int k = 1, l = 1;
    int m_max = 3;
    LambdaMode mode = LambdaMode::symbolic();

    Coeff lambda() const { return Coeff::lambda().specialize(mode); }
    Coeff weight(int t) const { return lambda_binom(l, t).specialize(mode); }
};

/// Closed-form schemas (used for generation of R1-R4 and as test oracles).
/// Variables are emitted canonically as x1, x2, ...; all schemas are monic.
/// R3 and R4 return nullopt when every family term vanishes.
Poly rel_r1(const GenParams& p);
Poly rel_r2(const GenParams& p);
std::optional<Poly> rel_r3(const GenParams& p);
std::optional<Poly> rel_r4(const GenParams& p, int m);

/// Full generated rule set. Relations beyond R2 are derived as reduced
/// compositions (the construction that proves them ideal members); schemas
/// that reduce to zero are omitted. Rules appear in dependency order:
/// R1, R2, R3, R5, R4[3], R6[3], R7, R9, R8[3], R10[3], R4[4], R6[4], ...
struct GeneratedSet {
    RuleSet rules;
    std::vector<RelId> ids; // parallel to rules
    std::optional<size_t> index_of(const RelId& id) const;
};

GeneratedSet gen_ruleset(const GenParams& p);

/// Single relation, generated through the same pipeline.
std::optional<Rule> gen_relation(const RelId& id, const GenParams& p);

} // namespace rbgs
