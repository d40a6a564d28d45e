#ifndef CSKNOT_TEST_ORACLES_HPP
#define CSKNOT_TEST_ORACLES_HPP

// Independent reference implementations used to freeze expected values.
// Everything here is deliberately naive (cofactor expansion, exhaustive
// enumeration, bisection) and shares no code path with the library versions
// it checks.

#include <cstdint>
#include <vector>

#include "csknot/int_matrix.hpp"
#include "csknot/int_poly.hpp"
#include "csknot/mod_poly.hpp"
#include "csknot/order.hpp"

namespace csknot::oracle {

/// determinant by recursive cofactor expansion
Int det_cofactor(const IntMatrix& m);

/// k-th exterior power by direct minor enumeration over lexicographic subsets,
/// minors by cofactor expansion
IntMatrix exterior_power_minors(const IntMatrix& m, std::size_t k);

/// charpoly coefficients by Lagrange interpolation of det(kI - A) at
/// k = 0..n, determinants by cofactor expansion
IntPoly charpoly_interpolate(const IntMatrix& m);

/// canonical form of a 2x2 row lattice by exhaustive unimodular row
/// operations within an entry box (small inputs only)
bool same_lattice_2x2(const IntMatrix& a, const IntMatrix& b);

/// integer kernel of a 1xN matrix by gcd reasoning (N = 2 only)
std::vector<Int> kernel_1x2(const Int& a, const Int& b);

/// 2D Gauss (Lagrange) reduction
IntMatrix gauss_reduce_2d(IntMatrix basis);

/// exhaustive small-box search for an integer solution of m x = rhs
bool solvable_in_box(const IntMatrix& m, const std::vector<Int>& rhs, long box);

/// resultant as the determinant of the Sylvester matrix (det by Bareiss from
/// the library is acceptable here: a different route than subresultants)
Int resultant_sylvester(const IntPoly& f, const IntPoly& g);

/// factor a ModPoly by exhaustive trial division over all monic polynomials
/// of ascending degree (tiny p and degree only)
std::vector<std::pair<ModPoly, int>> factor_trial_division(const ModPoly& f);

/// number of distinct real roots by sign-change bisection on a squarefree
/// polynomial, using exact rational arithmetic and the Cauchy root bound
unsigned count_roots_bisection(const IntPoly& f);

/// all theta-stable full-rank HNF sublattices with index <= bound, by brute
/// force over diagonals and off-diagonal residues (small bounds only)
std::vector<IntMatrix> sublattices_brute_force(const Order& o, const Int& bound);

/// deterministic pseudo-random unimodular matrix: a product of `ops`
/// elementary row operations with coefficients in [-2, 2]
IntMatrix random_unimodular(std::size_t n, int ops, std::uint64_t seed);

/// deterministic small random matrix with entries in [lo, hi]
IntMatrix random_matrix(std::size_t n, long lo, long hi, std::uint64_t seed);

/// deterministic small random polynomial of the given degree, monic if asked
IntPoly random_poly(int degree, long lo, long hi, bool monic, std::uint64_t seed);

} // namespace csknot::oracle

#endif
