#include "csknot/cs.hpp"

#include "csknot/sturm.hpp"

namespace csknot {

IntMatrix companion_matrix(const IntPoly& f) {
    if (!f.is_monic()) throw NonMonicError("companion_matrix: polynomial must be monic");
    const int n = f.degree();
    if (n < 1) throw DegreeTooSmallError("companion_matrix: degree must be >= 1");
    IntMatrix c(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(n); ++i) c(i, i + 1) = 1;
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
        c(static_cast<std::size_t>(n) - 1, j) = -f.coeff(j);
    return c;
}

bool is_positive(const IntPoly& f) {
    if (!f.is_monic()) throw NonMonicError("is_positive: polynomial must be monic");
    if (f.coeff(0) == 0) throw ZeroConstantTermError("is_positive: constant term is zero");
    // count on the squarefree part; repeated roots count once either way
    IntPoly g = f;
    IntPoly common = poly_gcd(f, f.derivative());
    if (common.degree() > 0) {
        // exact division by a (made monic) common factor
        g = divrem(f, common.primitive_positive()).first;
    }
    return count_real_roots(g, Interval::below(Rat(0))) == 0;
}

CsReport is_cs_matrix(const IntMatrix& a) {
    if (!a.is_square()) throw NonSquareError("is_cs_matrix: matrix must be square");
    const std::size_t n = a.rows();
    if (n < 2) throw DegreeTooSmallError("is_cs_matrix: order must be >= 2");
    CsReport rep;
    rep.charpoly = charpoly(a);
    rep.is_sl = det(a) == 1;
    bool all = true;
    const IntMatrix id_n = IntMatrix::identity(n);
    for (std::size_t k = 1; k <= n / 2; ++k) {
        const IntMatrix w = exterior_power(a, k);
        const Int d = det(IntMatrix::identity(w.rows()) - w);
        const bool pass = (d == 1 || d == -1);
        all = all && pass;
        rep.cs_conditions.push_back(CsCondition{k, d, pass});
    }
    rep.is_cs = rep.is_sl && all;
    rep.is_positive = rep.charpoly.coeff(0) != 0 && is_positive(rep.charpoly);
    return rep;
}

CsReport is_cs_polynomial(const IntPoly& f) {
    if (!f.is_monic()) throw NonMonicError("is_cs_polynomial: polynomial must be monic");
    if (f.degree() < 2) throw DegreeTooSmallError("is_cs_polynomial: degree must be >= 2");
    return is_cs_matrix(companion_matrix(f));
}

} // namespace csknot
