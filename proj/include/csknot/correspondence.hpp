#ifndef CSKNOT_CORRESPONDENCE_HPP
#define CSKNOT_CORRESPONDENCE_HPP

#include <optional>
#include <string>

#include "csknot/class_monoid.hpp"
#include "csknot/cs.hpp"

namespace csknot {

/// Lattice spanned by the entries of an integral eigenvector of a for the
/// eigenvalue theta; requires f(a) = O for f the order polynomial.
/// Class-well-defined: elimination choices move the result within its class.
IdealLattice matrix_to_ideal(const OrderPtr& o, const IntMatrix& a);

/// Integer matrix A with theta * v_i = sum_j A_ij v_j over the HNF basis
/// rows v_i; satisfies f(A) = O and inverts matrix_to_ideal up to class.
IntMatrix ideal_to_matrix(const IdealLattice& s);

/// Unimodular X with X a = b X found by enumerating the kernel lattice of
/// X -> Xa - bX over a coefficient box. NotFound is not a disproof.
std::optional<IntMatrix> conjugacy_oracle(const IntMatrix& a, const IntMatrix& b,
                                          long coeff_box = 3);

enum class StarRoute { CharpolyMismatch, IdealInvariant, IdealWitness, ConjugacyWitness };

struct StarVerdict {
    EquivKind kind = EquivKind::Unknown;
    StarRoute route = StarRoute::IdealWitness;
    std::optional<IntMatrix> conjugator;
    std::optional<EquivWitness> ideal_witness;
    std::string detail;
};

struct MatrixClassQuery {
    IntMatrix a;
    IntMatrix b;
    IntPoly f_a; // cached charpolys
    IntPoly f_b;
    long radius = 5;
    long coeff_box = 3;
};

MatrixClassQuery make_star_query(IntMatrix a, IntMatrix b, long radius = 5, long coeff_box = 3);

struct StarOptions {
    long radius = 5;
    long coeff_box = 3;
    /// resolve Unknown ideal comparisons through a Minkowski-complete class
    /// list of the ambient order when one is available within this cap
    bool use_class_list = true;
    Int class_bound_cap = Int(1000);
    /// precomputed class list for the order of charpoly(a); optional
    const ClassList* class_context = nullptr;
};

/// Decision pipeline for A ~* B (conjugate to B or B^{-1} over GL(n,Z)):
/// charpoly filter, ideal invariants, ideal witness search, conjugacy oracle,
/// then class-list separation; Unknown only when everything is inconclusive.
StarVerdict star_equivalent(const MatrixClassQuery& q, const StarOptions& opt = {});
StarVerdict star_equivalent(const IntMatrix& a, const IntMatrix& b, const StarOptions& opt = {});

struct KnotPairClass {
    IdealLattice ideal;
    IntMatrix matrix;
    Int norm;
    bool invertible;
    CsReport cs;
};

struct KnotPairReport {
    ClassList classes;
    std::vector<KnotPairClass> pairs;
};

/// One Cappell-Shaneson matrix per ideal class: the count of classes is the
/// count of inequivalent knot pairs sharing the Alexander polynomial f.
KnotPairReport classify_knot_pairs(const IntPoly& f, const Int& norm_bound, long radius = 5,
                                   int threads = 1, const Budget* budget = nullptr,
                                   std::uint64_t factor_budget = 2000000);

} // namespace csknot

#endif
