#ifndef CSKNOT_HNF_HPP
#define CSKNOT_HNF_HPP

#include <optional>
#include <vector>

#include "csknot/int_matrix.hpp"

namespace csknot {

/// Row-style Hermite normal form: upper staircase, positive pivots,
/// entries above each pivot reduced into [0, pivot). transform is a
/// unimodular U with U * input = hnf; nonzero rows come first.
struct HnfResult {
    IntMatrix hnf;
    IntMatrix transform;
    std::size_t rank = 0;
};

HnfResult hnf(const IntMatrix& m);

/// Nonzero HNF rows only — the canonical basis of the row lattice.
IntMatrix hnf_basis(const IntMatrix& m);

/// Rows form a Z-basis of { x : m*x = 0 }; may have zero rows.
struct KernelLattice {
    IntMatrix basis;
};

KernelLattice kernel_lattice(const IntMatrix& m);

/// One integer solution of m*x = rhs, if any.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, const std::vector<Int>& rhs);

/// LLL reduction (delta = 3/4) with exact rational Gram-Schmidt.
/// Rows must be Z-linearly independent.
IntMatrix lll_reduce(const IntMatrix& basis);

} // namespace csknot

#endif
