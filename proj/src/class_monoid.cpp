#include "csknot/class_monoid.hpp"

#include <algorithm>
#include <exception>
#include <numeric>

#include "csknot/parallel.hpp"

namespace csknot {

namespace {

// greedy invariant factors: an element of maximal order spans a direct
// summand of a finite abelian group
void invariant_factors(const std::vector<std::vector<std::size_t>>& table, std::size_t identity,
                       std::vector<unsigned>& out) {
    const std::size_t k = table.size();
    if (k <= 1) return;
    std::vector<unsigned> orders(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t cur = i;
        unsigned ord = 1;
        while (cur != identity) {
            cur = table[cur][i];
            ++ord;
        }
        orders[i] = ord;
    }
    std::size_t best = identity;
    for (std::size_t i = 0; i < k; ++i)
        if (orders[i] > orders[best]) best = i;
    if (orders[best] == 1) return;
    out.push_back(orders[best]);

    // cosets of <best>
    std::vector<std::size_t> subgroup;
    std::size_t cur = identity;
    do {
        subgroup.push_back(cur);
        cur = table[cur][best];
    } while (cur != identity);
    std::vector<long> coset_of(k, -1);
    std::vector<std::size_t> coset_rep;
    for (std::size_t i = 0; i < k; ++i) {
        if (coset_of[i] >= 0) continue;
        const long id = static_cast<long>(coset_rep.size());
        coset_rep.push_back(i);
        for (std::size_t s : subgroup) coset_of[table[i][s]] = id;
    }
    const std::size_t q = coset_rep.size();
    if (q <= 1) return;
    std::vector<std::vector<std::size_t>> qtable(q, std::vector<std::size_t>(q));
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b)
            qtable[a][b] =
                static_cast<std::size_t>(coset_of[table[coset_rep[a]][coset_rep[b]]]);
    invariant_factors(qtable, static_cast<std::size_t>(coset_of[identity]), out);
}

} // namespace

ClassList class_monoid(const OrderPtr& o, const Int& norm_bound, long search_radius, int threads,
                       const Budget* budget, std::uint64_t factor_budget) {
    if (norm_bound < 1) throw Error("class_monoid: bound must be >= 1");
    ClassList cl;
    cl.order = o;
    cl.norm_bound = norm_bound;

    const IntegralClosure ic = is_integrally_closed(o, factor_budget);
    cl.integrally_closed = ic.verdict;
    const MinkowskiBound mink = minkowski_bound(o, ic);
    if (mink.applicable) cl.minkowski = mink.bound;

    std::vector<IdealLattice> ideals = ideals_up_to_norm(o, norm_bound, budget, true);
    if (budget && budget->expired()) cl.budget_exhausted = true;
    cl.ideals_enumerated = ideals.size();

    // per-ideal invariants are independent work items
    std::vector<IdealInvariants> inv;
    inv.reserve(ideals.size());
    for (std::size_t i = 0; i < ideals.size(); ++i)
        inv.push_back(IdealInvariants{false, FracLattice{o, IntMatrix::identity(o->degree()), 1}});
    {
        std::exception_ptr err;
        parallel_for(ideals.size(), threads, [&](std::size_t i) {
            try {
                inv[i] = ideal_invariants(ideals[i]);
            } catch (...) {
#pragma omp critical
                err = std::current_exception();
            }
        });
        if (err) std::rethrow_exception(err);
    }

    // sequential dedupe in canonical order keeps the result deterministic
    std::vector<std::size_t> rep_idx;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        if (budget && budget->expired()) {
            cl.budget_exhausted = true;
            break;
        }
        bool matched = false;
        for (std::size_t r : rep_idx) {
            // the cheap pipeline suffices here: Unknown already keeps the
            // ideal separate, certification happens on the final matrix
            const EquivVerdict v = equivalence_test_with_invariants(ideals[i], inv[i], ideals[r],
                                                                    inv[r], search_radius, false);
            if (v.kind == EquivKind::Equivalent) {
                matched = true;
                break;
            }
        }
        if (!matched) rep_idx.push_back(i);
    }

    for (std::size_t r : rep_idx) {
        cl.representatives.push_back(ideals[r]);
        cl.norms.push_back(ideal_norm(ideals[r]));
        cl.invertible.push_back(inv[r].invertible);
    }

    // pairwise verdicts between representatives
    const std::size_t k = cl.representatives.size();
    cl.pairwise.assign(k, std::vector<EquivKind>(k, EquivKind::Equivalent));
    {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b) pairs.emplace_back(a, b);
        std::exception_ptr err;
        parallel_for(pairs.size(), threads, [&](std::size_t t) {
            try {
                const auto [a, b] = pairs[t];
                const EquivVerdict v = equivalence_test_with_invariants(
                    cl.representatives[a], inv[rep_idx[a]], cl.representatives[b],
                    inv[rep_idx[b]], search_radius);
                cl.pairwise[a][b] = cl.pairwise[b][a] = v.kind;
            } catch (...) {
#pragma omp critical
                err = std::current_exception();
            }
        });
        if (err) std::rethrow_exception(err);
    }

    cl.complete = cl.integrally_closed == Tri::Yes && mink.applicable &&
                  Rat(norm_bound) >= mink.bound && !cl.budget_exhausted;

    // multiplication table in the certified-group case
    const bool all_invertible =
        std::all_of(cl.invertible.begin(), cl.invertible.end(), [](bool b) { return b; });
    std::optional<std::vector<std::vector<std::size_t>>> table;
    if (cl.complete && all_invertible && k >= 1) {
        std::vector<std::vector<std::size_t>> tab(k, std::vector<std::size_t>(k, 0));
        bool ok = true;
        for (std::size_t a = 0; a < k && ok; ++a)
            for (std::size_t b = a; b < k && ok; ++b) {
                const IdealLattice prod = ideal_product(cl.representatives[a],
                                                        cl.representatives[b]);
                const auto loc = locate_class(cl, prod, search_radius);
                if (!loc) {
                    ok = false;
                    break;
                }
                tab[a][b] = tab[b][a] = *loc;
            }
        if (ok) table = std::move(tab);
    }

    // separations propagate through the witnessed table: class multiplication
    // is well-defined, so [a].[c] != [b].[c] certified forces [a] != [b], and
    // likewise for powers [a]^m vs [b]^m
    if (table) {
        const auto power = [&](std::size_t base, unsigned m) {
            std::size_t acc = base;
            for (unsigned e = 1; e < m; ++e) acc = (*table)[acc][base];
            return acc;
        };
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = a + 1; b < k; ++b) {
                    if (cl.pairwise[a][b] != EquivKind::Unknown) continue;
                    bool separated = false;
                    for (std::size_t c = 0; c < k && !separated; ++c) {
                        const std::size_t x = (*table)[a][c], y = (*table)[b][c];
                        separated = x != y && cl.pairwise[x][y] == EquivKind::NotEquivalent;
                    }
                    for (unsigned m = 2; m <= k && !separated; ++m) {
                        const std::size_t x = power(a, m), y = power(b, m);
                        separated = x != y && cl.pairwise[x][y] == EquivKind::NotEquivalent;
                    }
                    if (separated) {
                        cl.pairwise[a][b] = cl.pairwise[b][a] = EquivKind::NotEquivalent;
                        changed = true;
                    }
                }
        }
    }

    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            if (cl.pairwise[a][b] == EquivKind::Unknown) cl.unresolved.emplace_back(a, b);
    cl.count_is_exact = cl.complete && cl.unresolved.empty();

    if (table) {
        GroupInfo gi;
        gi.table = *table;
        {
            gi.is_group = true;
            // identity is the class of the unit ideal = representative 0
            // (canonical order puts norm 1 first)
            for (std::size_t i = 0; i < k; ++i) {
                std::size_t cur = i;
                unsigned ord = 1;
                while (cur != 0) {
                    cur = gi.table[cur][i];
                    ++ord;
                }
                gi.element_orders.push_back(ord);
            }
            std::vector<unsigned> factors;
            invariant_factors(gi.table, 0, factors);
            if (factors.empty()) {
                gi.structure = "C1";
            } else {
                for (std::size_t i = 0; i < factors.size(); ++i) {
                    if (i) gi.structure += " x ";
                    gi.structure += "C" + std::to_string(factors[i]);
                }
            }
            cl.group = std::move(gi);
        }
    }
    return cl;
}

std::optional<std::size_t> locate_class(const ClassList& cl, const IdealLattice& ideal,
                                        long search_radius) {
    const IdealInvariants ii = ideal_invariants(ideal);
    for (std::size_t r = 0; r < cl.representatives.size(); ++r) {
        // only a positive match matters here; skip the obstruction scan
        const EquivVerdict v = equivalence_test_with_invariants(
            ideal, ii, cl.representatives[r], ideal_invariants(cl.representatives[r]),
            search_radius, false);
        if (v.kind == EquivKind::Equivalent) return r;
    }
    return std::nullopt;
}

} // namespace csknot
