#ifndef CSKNOT_FAMILY_HPP
#define CSKNOT_FAMILY_HPP

#include <string>
#include <utility>
#include <vector>

#include "csknot/cs.hpp"
#include "csknot/int_matrix.hpp"
#include "csknot/int_poly.hpp"

namespace csknot {

/// One of the four explicit families (degrees 4..7): parameter ranges,
/// the prime/shift of the associated non-invertible ideal (p, theta - b),
/// and the affine map l -> a used by the matrix-pair theorems.
struct FamilySpec {
    int n;
    // admissible parameter range: a <= a_max (n = 4, 5, 6) or a >= a_min (n = 7)
    bool a_bounded_above;
    Int a_limit;
    bool l_bounded_above; // l <= 0 for n = 4, 5, 6; l >= 0 for n = 7
    Int prime;
    Int shift_b;
};

FamilySpec family_spec(int n);

Int family_parameter_from_l(int n, const Int& l); // a(l)
bool family_parameter_in_range(int n, const Int& a);
bool family_l_in_range(int n, const Int& l);

IntPoly family_polynomial(int n, const Int& a);

/// The two theorem matrices (companion form and the ideal-class matrix).
std::pair<IntMatrix, IntMatrix> family_matrix_pair(int n, const Int& l);

/// Closed form of the division of f_{a(l)} by (x - b): f = q * (x - b) + r.
struct DivisionIdentity {
    IntPoly quotient;
    Int remainder;
};

DivisionIdentity family_division_identity(int n, const Int& l);

/// Expected factorization of f_{a(l)} mod p (independent of l):
/// list of (lifted monic factor, multiplicity), sorted like factor_mod output.
std::vector<std::pair<IntPoly, int>> family_expected_factorization(int n);

struct FamilyCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct FamilyReport {
    int n;
    Int l;
    Int a;
    bool in_range;
    std::vector<FamilyCheck> checks;
    bool all_pass = false;
};

/// Re-derives everything with exact arithmetic: f(m) = O for both matrices,
/// CS + positivity, the mod-p factorization shape, the division identity,
/// p^2 | r (non-invertibility of (p, theta - b)), and the certified
/// non-*-equivalence of the pair.
FamilyReport verify_family_theorem(int n, const Int& l, long search_radius = 5, long coeff_box = 3);

} // namespace csknot

#endif
