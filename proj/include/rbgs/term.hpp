#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <vector>

#include "rbgs/error.hpp"

namespace rbgs {

class Word;
using WordPtr = std::shared_ptr<const Word>;

// Generator id layout. Base generators x1, x2, ... get ids 1, 2, ...
// Schema variables are generators from kVarBase up; they extend the base
// order by index and exist only while a rule is treated as a pattern.
// kStar is the placeholder letter of star-words.
constexpr int32_t kVarBase = 1 << 20;
constexpr int32_t kStar = kVarBase - 1;

inline bool is_var_id(int32_t id) { return id >= kVarBase; }

/// One letter of a bracketed word: either a generator or an R-letter R(w).
class Letter {
public:
    explicit Letter(int32_t gen) : gen_(gen) {}
    explicit Letter(WordPtr inner) : gen_(-1), inner_(std::move(inner)) {}

    bool is_gen() const { return gen_ >= 0; }
    bool is_r() const { return gen_ < 0; }
    int32_t gen() const { return gen_; }
    const Word& inner() const { return *inner_; }
    const WordPtr& inner_ptr() const { return inner_; }
    int deg_r() const;

private:
    int32_t gen_;
    WordPtr inner_;
};

/// Nonempty sequence of letters; immutable once built. deg() counts
/// top-level letters (length in the alphabet of generators and R-letters),
/// deg_r() counts all R symbols at all depths.
class Word {
public:
    Word() = default; // empty word: only as a building intermediate
    explicit Word(std::vector<Letter> letters);

    static Word gen(int32_t id) { return Word({Letter(id)}); }
    static Word r(Word inner);
    static Word r_pow(int n, Word inner); // R^n(inner), R^0 = identity
    static Word concat(const Word& a, const Word& b);

    bool empty() const { return letters_.empty(); }
    int deg() const { return static_cast<int>(letters_.size()); }
    int deg_r() const { return deg_r_; }
    int deg_x() const; // total generator count, all depths
    const std::vector<Letter>& letters() const { return letters_; }
    const Letter& at(size_t i) const { return letters_[i]; }

    bool contains_gen(int32_t id) const;
    void collect_gens(std::vector<int32_t>& out) const; // in traversal order

    Word(std::initializer_list<Letter> ls) : Word(std::vector<Letter>(ls)) {}

private:
    std::vector<Letter> letters_;
    int deg_r_ = 0;
};

enum class Cmp { Less = -1, Equal = 0, Greater = 1 };

/// Monomial order on words: first by deg_r, ties by deg-lex over the
/// alphabet where every generator is below every R-letter, generators
/// compare by id and R(a) vs R(b) recurses.
Cmp compare(const Word& a, const Word& b);
bool word_less(const Word& a, const Word& b);
bool word_eq(const Word& a, const Word& b);

struct WordGreater {
    bool operator()(const Word& a, const Word& b) const { return word_less(b, a); }
};

size_t word_hash(const Word& w);

/// Star-word q: a word with exactly one occurrence of the letter kStar.
/// substitute splices the letters of u in place of the star.
bool is_star_word(const Word& q);
Word substitute(const Word& q, const Word& u);

/// Replace the letter range [i, j) at the top level by the word u.
Word splice(const Word& w, size_t i, size_t j, const Word& u);

} // namespace rbgs
