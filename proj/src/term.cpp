#include "rbgs/term.hpp"

#include <algorithm>

namespace rbgs {

int Letter::deg_r() const { return is_gen() ? 0 : 1 + inner_->deg_r(); }

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (const auto& l : letters_) deg_r_ += l.deg_r();
}

Word Word::r(Word inner) {
    RBGS_CHECK(!inner.empty(), "R of empty word");
    return Word({Letter(std::make_shared<const Word>(std::move(inner)))});
}

Word Word::r_pow(int n, Word inner) {
    RBGS_CHECK(n >= 0, "negative R power");
    Word w = std::move(inner);
    for (int i = 0; i < n; ++i) w = r(std::move(w));
    return w;
}

Word Word::concat(const Word& a, const Word& b) {
    std::vector<Letter> ls = a.letters_;
    ls.insert(ls.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(ls));
}

int Word::deg_x() const {
    int n = 0;
    for (const auto& l : letters_) n += l.is_gen() ? 1 : l.inner().deg_x();
    return n;
}

bool Word::contains_gen(int32_t id) const {
    for (const auto& l : letters_) {
        if (l.is_gen() ? l.gen() == id : l.inner().contains_gen(id)) return true;
    }
    return false;
}

void Word::collect_gens(std::vector<int32_t>& out) const {
    for (const auto& l : letters_) {
        if (l.is_gen())
            out.push_back(l.gen());
        else
            l.inner().collect_gens(out);
    }
}

namespace {

Cmp cmp_int(long long a, long long b) {
    if (a < b) return Cmp::Less;
    if (a > b) return Cmp::Greater;
    return Cmp::Equal;
}

Cmp compare_letter(const Letter& a, const Letter& b) {
    if (a.is_gen() && b.is_gen()) return cmp_int(a.gen(), b.gen());
    if (a.is_gen()) return Cmp::Less;   // generators below all R-letters
    if (b.is_gen()) return Cmp::Greater;
    return compare(a.inner(), b.inner());
}

} // namespace

Cmp compare(const Word& a, const Word& b) {
    if (Cmp c = cmp_int(a.deg_r(), b.deg_r()); c != Cmp::Equal) return c;
    if (Cmp c = cmp_int(a.deg(), b.deg()); c != Cmp::Equal) return c;
    for (int i = 0; i < a.deg(); ++i) {
        if (Cmp c = compare_letter(a.at(static_cast<size_t>(i)), b.at(static_cast<size_t>(i)));
            c != Cmp::Equal)
            return c;
    }
    return Cmp::Equal;
}

bool word_less(const Word& a, const Word& b) { return compare(a, b) == Cmp::Less; }
bool word_eq(const Word& a, const Word& b) { return compare(a, b) == Cmp::Equal; }

size_t word_hash(const Word& w) {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& l : w.letters()) {
        size_t x = l.is_gen() ? static_cast<size_t>(l.gen()) * 0x100000001b3ull
                              : word_hash(l.inner()) ^ 0xabcdef12345ull;
        h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

namespace {

int count_star(const Word& w) {
    int n = 0;
    for (const auto& l : w.letters()) {
        if (l.is_gen())
            n += l.gen() == kStar ? 1 : 0;
        else
            n += count_star(l.inner());
    }
    return n;
}

} // namespace

bool is_star_word(const Word& q) { return count_star(q) == 1; }

Word substitute(const Word& q, const Word& u) {
    std::vector<Letter> out;
    out.reserve(q.letters().size());
    for (const auto& l : q.letters()) {
        if (l.is_gen()) {
            if (l.gen() == kStar)
                out.insert(out.end(), u.letters().begin(), u.letters().end());
            else
                out.push_back(l);
        } else if (count_star(l.inner()) > 0) {
            out.push_back(Letter(std::make_shared<const Word>(substitute(l.inner(), u))));
        } else {
            out.push_back(l);
        }
    }
    return Word(std::move(out));
}

Word splice(const Word& w, size_t i, size_t j, const Word& u) {
    std::vector<Letter> out;
    const auto& ls = w.letters();
    out.insert(out.end(), ls.begin(), ls.begin() + static_cast<long>(i));
    out.insert(out.end(), u.letters().begin(), u.letters().end());
    out.insert(out.end(), ls.begin() + static_cast<long>(j), ls.end());
    return Word(std::move(out));
}

} // namespace rbgs
