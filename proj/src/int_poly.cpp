#include "csknot/int_poly.hpp"

#include <algorithm>

namespace csknot {

namespace {
const Int kZero = 0;

Int int_pow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

Int exact_div(const Int& a, const Int& b) {
    Int r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}
} // namespace

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::x_power(std::size_t k) {
    std::vector<Int> c(k + 1, Int(0));
    c[k] = 1;
    return IntPoly{std::move(c)};
}

const Int& IntPoly::coeff(std::size_t i) const {
    if (i >= c_.size()) return kZero;
    return c_[i];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
    return IntPoly{std::move(c)};
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
    return IntPoly{std::move(c)};
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly{};
    std::vector<Int> c(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return IntPoly{std::move(c)};
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> c(c_);
    for (auto& v : c) v = -v;
    return IntPoly{std::move(c)};
}

IntPoly IntPoly::operator*(const Int& s) const {
    if (s == 0) return IntPoly{};
    std::vector<Int> c(c_);
    for (auto& v : c) v *= s;
    return IntPoly{std::move(c)};
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + Rat(*it);
        acc.canonicalize();
    }
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly{};
    std::vector<Int> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Int(static_cast<long>(i));
    return IntPoly{std::move(c)};
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

IntPoly IntPoly::primitive_positive() const {
    if (is_zero()) return IntPoly{};
    Int g = content();
    if (c_.back() < 0) g = -g;
    std::vector<Int> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = exact_div(c_[i], g);
    return IntPoly{std::move(c)};
}

std::pair<IntPoly, IntPoly> divrem(const IntPoly& f, const IntPoly& g) {
    if (!g.is_monic()) throw NonMonicDivisorError("divrem: divisor must be monic");
    const int dg = g.degree();
    if (f.degree() < dg) return {IntPoly{}, f};
    std::vector<Int> rem(f.coeffs());
    std::vector<Int> quot(static_cast<std::size_t>(f.degree() - dg) + 1, Int(0));
    for (int i = f.degree(); i >= dg; --i) {
        Int c = rem[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        quot[static_cast<std::size_t>(i - dg)] = c;
        for (int j = 0; j <= dg; ++j)
            rem[static_cast<std::size_t>(i - dg + j)] -= c * g.coeff(static_cast<std::size_t>(j));
    }
    rem.resize(static_cast<std::size_t>(std::max(dg, 0)));
    return {IntPoly{std::move(quot)}, IntPoly{std::move(rem)}};
}

IntPoly signed_reciprocal(const IntPoly& f) {
    if (!f.is_monic()) throw NonMonicError("signed_reciprocal: input must be monic");
    const Int& c0 = f.coeff(0);
    if (c0 != 1 && c0 != -1)
        throw NonUnitConstantTermError("signed_reciprocal: constant term must be ±1");
    const std::size_t n = static_cast<std::size_t>(f.degree());
    std::vector<Int> c(n + 1);
    const bool odd = (n % 2) != 0;
    for (std::size_t j = 0; j <= n; ++j) c[j] = odd ? Int(-f.coeff(n - j)) : f.coeff(n - j);
    return IntPoly{std::move(c)};
}

namespace {

// lc(g)^{deg f - deg g + 1} * f = q*g + prem(f, g)
IntPoly pseudo_rem(const IntPoly& f, const IntPoly& g) {
    IntPoly r = f;
    const int dg = g.degree();
    const Int& lg = g.leading();
    int steps = f.degree() - dg + 1;
    while (r.degree() >= dg) {
        const Int c = r.leading();
        const IntPoly shifted = IntPoly::x_power(static_cast<std::size_t>(r.degree() - dg)) * g;
        r = r * lg - shifted * c;
        --steps;
    }
    while (steps-- > 0) r = r * lg;
    return r;
}

// divide by the positive content only, preserving signs
IntPoly divide_content(const IntPoly& f, const Int& c) {
    std::vector<Int> v(f.coeffs());
    for (auto& x : v) x = exact_div(x, c);
    return IntPoly{std::move(v)};
}

} // namespace

// Subresultant PRS, signs tracked at swaps and odd-degree steps.
Int resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    if (f.degree() == 0) return int_pow(f.coeff(0), static_cast<unsigned long>(g.degree()));
    if (g.degree() == 0) return int_pow(g.coeff(0), static_cast<unsigned long>(f.degree()));

    IntPoly A = f, B = g;
    Int s = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() % 2) && (B.degree() % 2)) s = -s;
        std::swap(A, B);
    }
    const Int ca = A.content(), cb = B.content();
    Int t = int_pow(ca, static_cast<unsigned long>(B.degree())) *
            int_pow(cb, static_cast<unsigned long>(A.degree()));
    A = divide_content(A, ca);
    B = divide_content(B, cb);

    Int gg = 1, h = 1;
    while (true) {
        const int delta = A.degree() - B.degree();
        if ((A.degree() % 2) && (B.degree() % 2)) s = -s;
        IntPoly R = pseudo_rem(A, B);
        if (R.is_zero()) return 0;
        A = B;
        const Int div = gg * int_pow(h, static_cast<unsigned long>(delta));
        B = divide_content(R, div < 0 ? Int(-div) : div);
        if (div < 0) B = -B;
        gg = A.leading();
        if (delta >= 1)
            h = exact_div(int_pow(gg, static_cast<unsigned long>(delta)),
                          int_pow(h, static_cast<unsigned long>(delta - 1)));
        if (B.degree() == 0) {
            const unsigned long da = static_cast<unsigned long>(A.degree());
            return s * t *
                   exact_div(int_pow(B.coeff(0), da), int_pow(h, da - 1));
        }
    }
}

Int discriminant(const IntPoly& f) {
    if (f.is_zero() || f.degree() < 1) return 0;
    const int n = f.degree();
    Int d = exact_div(resultant(f, f.derivative()), f.leading());
    if ((static_cast<long>(n) * (n - 1) / 2) % 2) d = -d;
    return d;
}

IntPoly poly_gcd(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() && g.is_zero()) return IntPoly{};
    if (f.is_zero()) return g.leading() > 0 ? g : -g;
    if (g.is_zero()) return f.leading() > 0 ? f : -f;
    Int c;
    const Int cf = f.content(), cg = g.content();
    mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    IntPoly a = f.primitive_positive(), b = g.primitive_positive();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b);
        r = r.is_zero() ? IntPoly{} : r.primitive_positive();
        a = b;
        b = r;
    }
    return a.primitive_positive() * c;
}

} // namespace csknot
