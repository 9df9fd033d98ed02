#include "rbgs/coeff.hpp"

#include <algorithm>

namespace rbgs {

LPoly::LPoly(Int constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

LPoly LPoly::monomial(Int c, int degree) {
    LPoly p;
    if (c != 0) {
        p.c_.assign(static_cast<size_t>(degree) + 1, Int(0));
        p.c_.back() = std::move(c);
    }
    return p;
}

LPoly LPoly::from_coeffs(std::vector<Int> c) {
    LPoly p;
    p.c_ = std::move(c);
    p.trim();
    return p;
}

void LPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& LPoly::operator[](int i) const {
    static const Int kZero = 0;
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

const Int& LPoly::leading() const {
    RBGS_CHECK(!c_.empty(), "leading of zero LPoly");
    return c_.back();
}

LPoly LPoly::operator+(const LPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return from_coeffs(std::move(r));
}

LPoly LPoly::operator-(const LPoly& o) const { return *this + (-o); }

LPoly LPoly::operator-() const {
    LPoly p = *this;
    for (auto& x : p.c_) x = -x;
    return p;
}

LPoly LPoly::operator*(const LPoly& o) const {
    if (is_zero() || o.is_zero()) return LPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return from_coeffs(std::move(r));
}

LPoly LPoly::divide_exact(const LPoly& d) const {
    RBGS_CHECK(!d.is_zero(), "divide_exact by zero");
    if (is_zero()) return LPoly();
    std::vector<Int> rem = c_;
    int dr = static_cast<int>(rem.size()) - 1;
    int dd = d.degree();
    RBGS_CHECK(dr >= dd, "divide_exact: degree too small");
    std::vector<Int> q(static_cast<size_t>(dr - dd) + 1, Int(0));
    for (int i = dr; i >= dd; --i) {
        Int& top = rem[static_cast<size_t>(i)];
        if (top == 0) continue;
        RBGS_CHECK(top % d.leading() == 0, "divide_exact: not divisible");
        Int f = top / d.leading();
        q[static_cast<size_t>(i - dd)] = f;
        for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(i - dd + j)] -= f * d[j];
    }
    for (const auto& x : rem) RBGS_CHECK(x == 0, "divide_exact: nonzero remainder");
    return from_coeffs(std::move(q));
}

Int LPoly::content() const {
    Int g = 0;
    for (const auto& x : c_) g = boost::multiprecision::gcd(g, x);
    if (!c_.empty() && c_.back() < 0) g = -g;
    return g;
}

LPoly LPoly::primitive_part() const {
    if (is_zero()) return LPoly();
    LPoly d(content());
    return divide_exact(d);
}

Rat LPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

namespace {

// Pseudo-remainder of a by b (lc(b)^(da-db+1) * a mod b).
LPoly prem(LPoly a, const LPoly& b) {
    int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        LPoly t = LPoly::monomial(a.leading(), a.degree() - db);
        a = a * LPoly(b.leading()) - t * b;
    }
    return a;
}

} // namespace

LPoly gcd(const LPoly& a, const LPoly& b) {
    if (a.is_zero()) {
        if (b.is_zero()) return LPoly();
        LPoly p = b.primitive_part();
        return p * LPoly(abs(b.content()));
    }
    if (b.is_zero()) return gcd(b, a);
    Int cg = boost::multiprecision::gcd(abs(a.content()), abs(b.content()));
    LPoly u = a.primitive_part(), v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        LPoly r = prem(u, v).primitive_part();
        u = std::move(v);
        v = std::move(r);
    }
    if (u.leading() < 0) u = -u;
    return u * LPoly(cg);
}

LambdaMode LambdaMode::numeric(const Rat& c) {
    if (c == 0) throw Error(Errc::InvalidParams, "Numeric lambda mode requires c != 0; use Zero");
    return {LambdaKind::Numeric, c};
}

Coeff::Coeff(const Rat& r)
    : num_(Int(boost::multiprecision::numerator(r))),
      den_(Int(boost::multiprecision::denominator(r))) {
    canon();
}

Coeff::Coeff(LPoly num, LPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(Errc::DivisionByZero, "zero denominator");
    canon();
}

void Coeff::canon() {
    RBGS_CHECK(!den_.is_zero(), "canon with zero denominator");
    if (num_.is_zero()) {
        den_ = LPoly(Int(1));
        return;
    }
    LPoly g = gcd(num_, den_);
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

bool Coeff::is_one() const {
    return den_.degree() == 0 && den_.leading() == 1 && num_.degree() == 0 && !num_.is_zero() &&
           num_.leading() == 1;
}

Coeff Coeff::operator+(const Coeff& o) const {
    return Coeff(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Coeff Coeff::operator-(const Coeff& o) const {
    return Coeff(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Coeff Coeff::operator*(const Coeff& o) const { return Coeff(num_ * o.num_, den_ * o.den_); }

Coeff Coeff::operator/(const Coeff& o) const { return *this * o.inv(); }

Coeff Coeff::operator-() const {
    Coeff c = *this;
    c.num_ = -c.num_;
    return c;
}

Coeff Coeff::inv() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero coefficient");
    return Coeff(den_, num_);
}

Rat Coeff::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) throw Error(Errc::PoleAtValue, "denominator vanishes at evaluation point");
    return num_.eval(x) / d;
}

Coeff Coeff::specialize(const LambdaMode& mode) const {
    switch (mode.kind) {
    case LambdaKind::Symbolic: return *this;
    case LambdaKind::Zero: return Coeff(eval(Rat(0)));
    case LambdaKind::Numeric: return Coeff(eval(mode.value));
    }
    throw Error(Errc::InvalidParams, "bad lambda mode");
}

std::optional<Rat> Coeff::as_rational() const {
    if (num_.degree() > 0 || den_.degree() > 0) return std::nullopt;
    if (num_.is_zero()) return Rat(0);
    return Rat(num_.leading()) / Rat(den_.leading());
}

Int binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

Coeff lambda_binom(int l, int t) {
    if (l < 1) throw Error(Errc::InvalidParams, "lambda_binom requires l >= 1");
    if (t < 0 || t > l) throw Error(Errc::OutOfRange, "lambda_binom requires 0 <= t <= l");
    return Coeff(LPoly::monomial(binom(l, t), l - t), LPoly(Int(1)));
}

Coeff pow_coeff(const Coeff& base, int e) {
    RBGS_CHECK(e >= 0, "negative coefficient power");
    Coeff r = Coeff::one();
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace rbgs
