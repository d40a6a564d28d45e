#ifndef CSKNOT_EQUIVALENCE_HPP
#define CSKNOT_EQUIVALENCE_HPP

#include <optional>
#include <string>
#include <utility>

#include "csknot/ideal.hpp"

namespace csknot {

enum class EquivKind { Equivalent, NotEquivalent, Unknown };

/// Witness for I ≈ J: nonzero alpha, beta in Z[theta] with alpha*I = beta*J.
struct EquivWitness {
    OrderElement alpha;
    OrderElement beta;
};

struct EquivVerdict {
    EquivKind kind = EquivKind::Unknown;
    std::optional<EquivWitness> witness; // set on Equivalent
    std::string certificate;             // set on NotEquivalent
};

/// class invariants, constant on { lambda * I }
struct IdealInvariants {
    bool invertible;
    FracLattice mult_ring;
};

IdealInvariants ideal_invariants(const IdealLattice& i);

/// exact re-check that alpha*I = beta*J
bool check_witness(const IdealLattice& i, const IdealLattice& j, const EquivWitness& w);

/// Any witness for I ≈ J is an element y of the colon lattice with
/// |N(y)| = t exactly; when the norm form restricted to that lattice misses
/// ±t modulo some m, no witness exists over Z. Returns the excluding modulus
/// (certificate), or nullopt when every probed modulus represents ±t.
std::optional<unsigned long> norm_form_excludes(const OrderPtr& o, const IntMatrix& lattice,
                                                const Int& t);

/// Three-valued pipeline: (1) invariants (invertibility, multiplier ring);
/// (2) bounded witness search over the LLL-reduced colon lattices, both
/// directions; (3) mod-m norm-form obstruction (when enabled); (4) Unknown.
EquivVerdict equivalence_test(const IdealLattice& i, const IdealLattice& j,
                              long search_radius = 5, bool norm_obstruction = true);

EquivVerdict equivalence_test_with_invariants(const IdealLattice& i, const IdealInvariants& ii,
                                              const IdealLattice& j, const IdealInvariants& ij,
                                              long search_radius = 5,
                                              bool norm_obstruction = true);

} // namespace csknot

#endif
