#ifndef CSKNOT_IDEAL_HPP
#define CSKNOT_IDEAL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "csknot/hnf.hpp"
#include "csknot/mod_poly.hpp"
#include "csknot/order.hpp"

namespace csknot {

/// Nonzero ideal of Z[theta]: a theta-stable full-rank sublattice, stored
/// as its canonical row-HNF basis so equality is bit-equality.
class IdealLattice {
public:
    IdealLattice(OrderPtr order, IntMatrix basis_hnf);

    const OrderPtr& order() const { return order_; }
    const IntMatrix& basis_hnf() const { return basis_hnf_; }
    OrderElement basis_element(std::size_t i) const;

    bool operator==(const IdealLattice& o) const {
        return same_order(order_, o.order_) && basis_hnf_ == o.basis_hnf_;
    }

private:
    OrderPtr order_;
    IntMatrix basis_hnf_;
};

/// canonical ordering: by norm, then lexicographic HNF entries
bool ideal_less(const IdealLattice& a, const IdealLattice& b);

IdealLattice unit_ideal(OrderPtr o);
IdealLattice ideal_from_generators(OrderPtr o, const std::vector<OrderElement>& gens);
/// Rows spanning the lattice (any count); must produce full rank.
IdealLattice ideal_from_rows(OrderPtr o, const IntMatrix& rows);

Int ideal_norm(const IdealLattice& i);
IdealLattice ideal_product(const IdealLattice& i, const IdealLattice& j);
IdealLattice ideal_scale(const OrderElement& x, const IdealLattice& i);
IdealLattice ideal_int_scale(const Int& c, const IdealLattice& i);
bool ideal_contains(const IdealLattice& i, const OrderElement& x);

/// full independent re-check of theta-stability of an HNF basis
bool theta_stable(const Order& o, const IntMatrix& basis_hnf);

/// Fractional theta-stable lattice num/denom, canonical
/// (gcd(content(num), denom) = 1, denom > 0).
struct FracLattice {
    OrderPtr order;
    IntMatrix num_hnf;
    Int denom;

    bool operator==(const FracLattice& o) const {
        return same_order(order, o.order) && num_hnf == o.num_hnf && denom == o.denom;
    }
};

FracLattice make_frac(OrderPtr o, IntMatrix num_rows, Int denom);

/// (j : i) = { x in Frac(Z[theta]) : x * i ⊆ j }
FracLattice colon_lattice(const IdealLattice& j, const IdealLattice& i);

/// multiplier ring (i : i); a class invariant
FracLattice multiplier_ring(const IdealLattice& i);

/// i is invertible iff i * (O : i) = O
bool is_invertible_general(const IdealLattice& i);

enum class Invertibility { Invertible, NotInvertible };

struct KummerDedekindResult {
    Invertibility verdict;
    IntPoly remainder; // remainder of f by the lift of g
};

/// Criterion for the ideal (p, g(theta)), g a monic irreducible factor of
/// f mod p with multiplicity e: invertible iff e = 1 or p^2 does not divide
/// the remainder of f by a monic lift of g. The verdict is lift-independent
/// for e >= 2 (the quotient vanishes mod (p, g), so r moves by multiples of
/// p^2); the reported remainder is the one for the given lift.
KummerDedekindResult kummer_dedekind_lift(const OrderPtr& o, const Int& p, const IntPoly& lift,
                                          int e);
/// same, with the canonical [0, p) lift of g
KummerDedekindResult kummer_dedekind(const OrderPtr& o, const Int& p, const ModPoly& g, int e);

/// Z-basis {p, theta-b, theta(theta-b), ..., theta^{n-2}(theta-b)} of
/// (p, theta-b); requires (x-b)^2 | f mod p and p^2 | f(b).
IdealLattice corollary_basis(const OrderPtr& o, const Int& p, const Int& b);

bool is_maximal_at(const OrderPtr& o, const Int& p);

enum class Tri { Yes, No, Unknown };

struct Factorization {
    std::vector<std::pair<Int, int>> primes; // (p, exponent)
    Int cofactor = 1;                        // unfactored composite part (1 if complete)
    bool complete() const { return cofactor == 1; }
};

/// Trial division to 10^6, then Pollard rho (Brent) capped by budget.
Factorization factor_integer(Int n, std::uint64_t rho_budget = 2000000);

struct IntegralClosure {
    Tri verdict = Tri::Unknown;
    Factorization disc_factors;
    std::vector<Int> failing_primes; // primes where maximality fails
};

IntegralClosure is_integrally_closed(const OrderPtr& o, std::uint64_t factor_budget = 2000000);

} // namespace csknot

#endif
