#include "csknot/mod_poly.hpp"

#include <algorithm>
#include <map>

namespace csknot {

namespace {
const Int kZero = 0;

Int mod_reduce(const Int& v, const Int& p) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    return r;
}

Int mod_inv(const Int& v, const Int& p) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()))
        throw Error("mod_inv: not invertible");
    return r;
}
} // namespace

void ModPoly::canonicalize() {
    for (auto& v : c_) v = mod_reduce(v, p_);
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& ModPoly::coeff(std::size_t i) const {
    if (i >= c_.size()) return kZero;
    return c_[i];
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
    return ModPoly{p_, std::move(c)};
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
    return ModPoly{p_, std::move(c)};
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
    if (is_zero() || o.is_zero()) return ModPoly{p_};
    std::vector<Int> c(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return ModPoly{p_, std::move(c)};
}

ModPoly ModPoly::operator*(const Int& s) const {
    std::vector<Int> c(c_);
    for (auto& v : c) v *= s;
    return ModPoly{p_, std::move(c)};
}

ModPoly ModPoly::derivative() const {
    if (c_.size() <= 1) return ModPoly{p_};
    std::vector<Int> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Int(static_cast<long>(i));
    return ModPoly{p_, std::move(c)};
}

ModPoly ModPoly::make_monic() const {
    if (is_zero() || is_monic()) return *this;
    return *this * mod_inv(leading(), p_);
}

IntPoly ModPoly::lift() const {
    return IntPoly{std::vector<Int>(c_)};
}

ModPoly reduce_mod(const IntPoly& f, const Int& p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw NotPrimeError("reduce_mod: modulus must be prime");
    return ModPoly{p, std::vector<Int>(f.coeffs())};
}

std::pair<ModPoly, ModPoly> mod_divrem(const ModPoly& f, const ModPoly& g) {
    if (g.is_zero()) throw Error("mod_divrem: division by zero");
    const Int& p = f.modulus();
    const int dg = g.degree();
    if (f.degree() < dg) return {ModPoly{p}, f};
    const Int linv = mod_inv(g.leading(), p);
    std::vector<Int> rem(f.coeffs());
    std::vector<Int> quot(static_cast<std::size_t>(f.degree() - dg) + 1, Int(0));
    for (int i = f.degree(); i >= dg; --i) {
        Int c = mod_reduce(rem[static_cast<std::size_t>(i)] * linv, p);
        if (c == 0) continue;
        quot[static_cast<std::size_t>(i - dg)] = c;
        for (int j = 0; j <= dg; ++j) {
            auto& t = rem[static_cast<std::size_t>(i - dg + j)];
            t = mod_reduce(t - c * g.coeff(static_cast<std::size_t>(j)), p);
        }
    }
    rem.resize(static_cast<std::size_t>(std::max(dg, 0)));
    return {ModPoly{p, std::move(quot)}, ModPoly{p, std::move(rem)}};
}

ModPoly mod_gcd(const ModPoly& f, const ModPoly& g) {
    ModPoly a = f, b = g;
    while (!b.is_zero()) {
        ModPoly r = mod_divrem(a, b).second;
        a = b;
        b = r;
    }
    return a.make_monic();
}

ModPoly mod_powmod(const ModPoly& base, const Int& e, const ModPoly& mod) {
    const Int& p = base.modulus();
    ModPoly result{p, {Int(1)}};
    ModPoly b = mod_divrem(base, mod).second;
    Int exp = e;
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t())) result = mod_divrem(result * b, mod).second;
        b = mod_divrem(b * b, mod).second;
        exp >>= 1;
    }
    return result;
}

namespace {

struct ModRng {
    gmp_randstate_t state;
    explicit ModRng(std::uint64_t seed) {
        gmp_randinit_mt(state);
        gmp_randseed_ui(state, static_cast<unsigned long>(seed ^ 0x9e3779b97f4a7c15ULL));
    }
    ~ModRng() { gmp_randclear(state); }
    Int below(const Int& p) {
        Int r;
        mpz_urandomm(r.get_mpz_t(), state, p.get_mpz_t());
        return r;
    }
    ModPoly poly(const Int& p, int max_deg) {
        std::vector<Int> c(static_cast<std::size_t>(max_deg) + 1);
        for (auto& v : c) v = below(p);
        return ModPoly{p, std::move(c)};
    }
};

// p-th root of a polynomial with zero derivative: in F_p[x], such a
// polynomial is g(x^p) and the root has coefficients c_{i*p}.
ModPoly pth_root(const ModPoly& f) {
    const Int& p = f.modulus();
    if (!mpz_fits_ulong_p(p.get_mpz_t())) throw Error("pth_root: modulus too large");
    const unsigned long pl = mpz_get_ui(p.get_mpz_t());
    std::vector<Int> c;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(f.degree()); i += pl)
        c.push_back(f.coeff(i));
    return ModPoly{p, std::move(c)};
}

// squarefree decomposition in characteristic p
void squarefree_decompose(const ModPoly& f, int outer_mult,
                          std::map<int, std::vector<ModPoly>>& out) {
    if (f.degree() <= 0) return;
    ModPoly fp = f.derivative();
    if (fp.is_zero()) {
        int pl = static_cast<int>(mpz_get_ui(f.modulus().get_mpz_t()));
        squarefree_decompose(pth_root(f), outer_mult * pl, out);
        return;
    }
    ModPoly t = mod_gcd(f, fp);
    ModPoly w = mod_divrem(f, t).first;
    int i = 1;
    while (w.degree() > 0) {
        ModPoly y = mod_gcd(w, t);
        ModPoly z = mod_divrem(w, y).first;
        if (z.degree() > 0) out[outer_mult * i].push_back(z.make_monic());
        w = y;
        t = mod_divrem(t, y).first;
        ++i;
    }
    if (t.degree() > 0) {
        int pl = static_cast<int>(mpz_get_ui(f.modulus().get_mpz_t()));
        squarefree_decompose(pth_root(t), outer_mult * pl, out);
    }
}

// distinct-degree: splits monic squarefree h into products of irreducibles
// of equal degree d
std::vector<std::pair<ModPoly, int>> distinct_degree(const ModPoly& h) {
    const Int& p = h.modulus();
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly rem = h;
    ModPoly x{p, {Int(0), Int(1)}};
    ModPoly u = mod_divrem(x, rem).second; // x^(p^0)... starts at x
    int d = 0;
    while (rem.degree() > 0) {
        ++d;
        if (2 * d > rem.degree()) {
            out.emplace_back(rem, rem.degree());
            break;
        }
        u = mod_powmod(u, p, rem);
        ModPoly g = mod_gcd(rem, u - x);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rem = mod_divrem(rem, g).first.make_monic();
            u = mod_divrem(u, rem).second;
        }
    }
    return out;
}

// Cantor-Zassenhaus equal-degree splitting
void equal_degree(const ModPoly& h, int d, ModRng& rng, std::vector<ModPoly>& out) {
    if (h.degree() == d) {
        out.push_back(h.make_monic());
        return;
    }
    const Int& p = h.modulus();
    while (true) {
        ModPoly a = rng.poly(p, h.degree() - 1);
        if (a.degree() < 1) continue;
        ModPoly g = mod_gcd(h, a);
        if (g.degree() > 0 && g.degree() < h.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(mod_divrem(h, g).first.make_monic(), d, rng, out);
            return;
        }
        ModPoly b{p};
        if (p == 2) {
            // trace map a + a^2 + ... + a^(2^(d-1))
            ModPoly t = a, acc = a;
            for (int i = 1; i < d; ++i) {
                t = mod_divrem(t * t, h).second;
                acc = acc + t;
            }
            b = acc;
        } else {
            Int e;
            mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            b = mod_powmod(a, e, h) - ModPoly{p, {Int(1)}};
        }
        ModPoly g2 = mod_gcd(h, b);
        if (g2.degree() > 0 && g2.degree() < h.degree()) {
            equal_degree(g2, d, rng, out);
            equal_degree(mod_divrem(h, g2).first.make_monic(), d, rng, out);
            return;
        }
    }
}

bool factor_less(const ModFactor& a, const ModFactor& b) {
    if (a.g.degree() != b.g.degree()) return a.g.degree() < b.g.degree();
    for (std::size_t i = 0; i <= static_cast<std::size_t>(a.g.degree()); ++i) {
        const int c = mpz_cmp(a.g.coeff(i).get_mpz_t(), b.g.coeff(i).get_mpz_t());
        if (c != 0) return c < 0;
    }
    return false;
}

} // namespace

ModFactorization factor_mod(const ModPoly& f, std::uint64_t seed) {
    if (f.is_zero()) throw Error("factor_mod: zero polynomial");
    ModFactorization res;
    res.p = f.modulus();
    res.unit = f.leading();
    if (f.degree() == 0) return res;
    ModRng rng(seed);
    std::map<int, std::vector<ModPoly>> sq;
    squarefree_decompose(f.make_monic(), 1, sq);
    for (const auto& [mult, parts] : sq)
        for (const ModPoly& part : parts)
            for (const auto& [prod, d] : distinct_degree(part)) {
                std::vector<ModPoly> irr;
                equal_degree(prod, d, rng, irr);
                for (ModPoly& g : irr) res.factors.push_back(ModFactor{std::move(g), mult});
            }
    std::sort(res.factors.begin(), res.factors.end(), factor_less);
    return res;
}

bool mod_is_irreducible(const ModPoly& f) {
    if (f.degree() < 1) return false;
    ModFactorization fac = factor_mod(f.make_monic());
    return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

IrredWitness irreducibility_witness(const IntPoly& f, unsigned long prime_bound) {
    if (!f.is_monic()) throw NonMonicError("irreducibility_witness: input must be monic");
    if (f.degree() < 1) throw DegreeTooSmallError("irreducibility_witness: degree must be >= 1");
    const Int disc = discriminant(f);
    if (disc == 0) return IrredWitness{}; // not squarefree, no valid prime
    Int p = 2;
    while (p <= static_cast<long>(prime_bound)) {
        if (!mpz_divisible_p(disc.get_mpz_t(), p.get_mpz_t())) {
            if (mod_is_irreducible(reduce_mod(f, p))) return IrredWitness{true, p};
        }
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    }
    return IrredWitness{};
}

} // namespace csknot
