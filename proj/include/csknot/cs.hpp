#ifndef CSKNOT_CS_HPP
#define CSKNOT_CS_HPP

#include <vector>

#include "csknot/int_matrix.hpp"
#include "csknot/int_poly.hpp"

namespace csknot {

struct CsCondition {
    std::size_t k;
    Int det_value; // det(I - extpow(A, k))
    bool pass;
};

struct CsReport {
    bool is_sl = false;
    std::vector<CsCondition> cs_conditions; // k = 1 .. floor(n/2)
    bool is_cs = false;
    bool is_positive = false;
    IntPoly charpoly;
};

/// Companion matrix of a monic f: superdiagonal ones, last row -c_0 .. -c_{n-1}.
IntMatrix companion_matrix(const IntPoly& f);

CsReport is_cs_matrix(const IntMatrix& a);
CsReport is_cs_polynomial(const IntPoly& f);

/// True iff f has no real root in (-inf, 0). Monic f with f(0) != 0 tends to
/// +inf times (-1)^deg as x -> -inf, so strict positivity of (-1)^n f on the
/// negative axis is exactly root-freeness there.
bool is_positive(const IntPoly& f);

} // namespace csknot

#endif
