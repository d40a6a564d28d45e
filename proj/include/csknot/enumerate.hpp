#ifndef CSKNOT_ENUMERATE_HPP
#define CSKNOT_ENUMERATE_HPP

#include <vector>

#include "csknot/budget.hpp"
#include "csknot/ideal.hpp"

namespace csknot {

/// All theta-stable full-rank sublattices of Z[theta] with index <= bound
/// (the unit ideal included), canonically sorted. Walks maximal-submodule
/// chains prime by prime and combines coprime parts by multiplication.
/// Throws BoundTooLargeError when the budget expires, unless partial_ok.
std::vector<IdealLattice> ideals_up_to_norm(const OrderPtr& o, const Int& bound,
                                            const Budget* budget = nullptr,
                                            bool partial_ok = false);

struct MinkowskiBound {
    bool applicable = false;
    Rat bound; // rational upper bound, >= the true Minkowski constant
};

/// (n!/n^n) (4/pi)^{r2} sqrt(|disc|), over-approximated by exact rationals.
/// Applicable only when the order is integrally closed.
MinkowskiBound minkowski_bound(const OrderPtr& o, const IntegralClosure& ic);
MinkowskiBound minkowski_bound(const OrderPtr& o);

} // namespace csknot

#endif
