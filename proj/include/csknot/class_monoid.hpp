#ifndef CSKNOT_CLASS_MONOID_HPP
#define CSKNOT_CLASS_MONOID_HPP

#include <optional>
#include <string>
#include <vector>

#include "csknot/budget.hpp"
#include "csknot/enumerate.hpp"
#include "csknot/equivalence.hpp"

namespace csknot {

struct GroupInfo {
    bool is_group = false;
    std::vector<std::vector<std::size_t>> table; // class index products
    std::vector<unsigned> element_orders;
    std::string structure; // e.g. "C4 x C2"
};

struct ClassList {
    OrderPtr order;
    Int norm_bound;
    std::vector<IdealLattice> representatives; // canonically sorted
    std::vector<Int> norms;
    std::vector<bool> invertible;
    std::vector<std::vector<EquivKind>> pairwise; // reps x reps verdicts
    std::vector<std::pair<std::size_t, std::size_t>> unresolved; // Unknown rep pairs
    Tri integrally_closed = Tri::Unknown;
    std::optional<Rat> minkowski;
    bool complete = false;       // every class certified represented
    bool count_is_exact = false; // complete and no unresolved pairs
    bool budget_exhausted = false;
    std::size_t ideals_enumerated = 0;
    std::optional<GroupInfo> group;
};

/// Enumerate ideals up to the bound, dedupe by equivalence_test (Unknown is
/// surfaced, never merged), and report representatives. Complete exactly when
/// the order is integrally closed and the bound reaches the Minkowski bound.
ClassList class_monoid(const OrderPtr& o, const Int& norm_bound, long search_radius = 5,
                       int threads = 1, const Budget* budget = nullptr,
                       std::uint64_t factor_budget = 2000000);

/// Locate the class of an ideal in a computed list; nullopt when no
/// representative matches within the radius.
std::optional<std::size_t> locate_class(const ClassList& cl, const IdealLattice& ideal,
                                        long search_radius = 5);

} // namespace csknot

#endif
