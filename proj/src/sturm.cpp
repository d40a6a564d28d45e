#include "csknot/sturm.hpp"

#include <vector>

namespace csknot {

namespace {

// negated pseudo-remainder scaled by a positive constant only, so the sign
// pattern of the Sturm sequence is preserved
IntPoly sturm_next(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    const int db = b.degree();
    const Int& lb = b.leading();
    const Int lb2 = lb * lb; // positive scaling
    while (r.degree() >= db) {
        const Int c = r.leading();
        const IntPoly shifted = IntPoly::x_power(static_cast<std::size_t>(r.degree() - db)) * b;
        // multiply by lb^2 once per step: keeps scaling positive
        r = r * lb2 - shifted * (c * lb);
    }
    if (r.is_zero()) return r;
    return -(r.primitive_positive() * (r.leading() > 0 ? Int(1) : Int(-1)));
}

std::vector<IntPoly> sturm_sequence(const IntPoly& f) {
    std::vector<IntPoly> seq;
    seq.push_back(f);
    IntPoly d = f.derivative();
    if (d.is_zero()) return seq;
    seq.push_back(d);
    while (seq.back().degree() > 0) {
        IntPoly nxt = sturm_next(seq[seq.size() - 2], seq.back());
        if (nxt.is_zero()) break;
        seq.push_back(std::move(nxt));
    }
    return seq;
}

int sign_at(const IntPoly& p, const Rat& x) {
    const Rat v = p.eval(x);
    return mpq_sgn(v.get_mpq_t());
}

int sign_at_pos_inf(const IntPoly& p) { return mpz_sgn(p.leading().get_mpz_t()); }

int sign_at_neg_inf(const IntPoly& p) {
    const int s = mpz_sgn(p.leading().get_mpz_t());
    return (p.degree() % 2) ? -s : s;
}

unsigned variations(const std::vector<IntPoly>& seq, int (*sgn)(const IntPoly&)) {
    unsigned v = 0;
    int last = 0;
    for (const auto& p : seq) {
        const int s = sgn(p);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

unsigned variations_at(const std::vector<IntPoly>& seq, const Rat& x) {
    unsigned v = 0;
    int last = 0;
    for (const auto& p : seq) {
        const int s = sign_at(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

} // namespace

unsigned count_real_roots(const IntPoly& f, const Interval& iv) {
    if (f.is_zero()) throw NotSquarefreeError("count_real_roots: zero polynomial");
    if (f.degree() == 0) return 0;
    if (poly_gcd(f, f.derivative()).degree() > 0)
        throw NotSquarefreeError("count_real_roots: input has repeated roots");

    // degenerate finite intervals
    if (iv.lo && iv.hi) {
        if (*iv.lo > *iv.hi) return 0;
        if (*iv.lo == *iv.hi)
            return (iv.lo_closed && iv.hi_closed && f.eval(*iv.lo) == 0) ? 1u : 0u;
    }

    const auto seq = sturm_sequence(f);
    // Sturm counts distinct roots in (a, b]
    const unsigned va = iv.lo ? variations_at(seq, *iv.lo) : variations(seq, sign_at_neg_inf);
    const unsigned vb = iv.hi ? variations_at(seq, *iv.hi) : variations(seq, sign_at_pos_inf);
    unsigned count = va - vb;
    if (iv.hi && !iv.hi_closed && f.eval(*iv.hi) == 0) --count;
    if (iv.lo && iv.lo_closed && f.eval(*iv.lo) == 0) ++count;
    return count;
}

} // namespace csknot
