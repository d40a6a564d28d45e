#include "csknot/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "csknot/sturm.hpp"

namespace csknot {

namespace {

Int mod_red(const Int& v, const Int& p) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    return r;
}

IntMatrix mat_mod(const IntMatrix& m, const Int& p) {
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = mod_red(m(i, j), p);
    return r;
}

IntMatrix mat_mul_mod(const IntMatrix& a, const IntMatrix& b, const Int& p) {
    return mat_mod(a * b, p);
}

IntMatrix poly_at_matrix_mod(const ModPoly& g, const IntMatrix& t, const Int& p) {
    const std::size_t n = t.rows();
    IntMatrix acc(n, n);
    for (int i = g.degree(); i >= 0; --i) {
        acc = mat_mul_mod(acc, t, p);
        for (std::size_t d = 0; d < n; ++d)
            acc(d, d) = mod_red(acc(d, d) + g.coeff(static_cast<std::size_t>(i)), p);
    }
    return acc;
}

// column nullspace of m over F_p, as rows of the returned matrix
std::vector<std::vector<Int>> nullspace_mod(const IntMatrix& m, const Int& p) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMatrix a = mat_mod(m, p);
    std::vector<long> pivot_col_of_row(rows, -1);
    std::vector<bool> col_is_pivot(cols, false);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        a.swap_rows(r, piv);
        Int inv;
        mpz_invert(inv.get_mpz_t(), a(r, c).get_mpz_t(), p.get_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) a(r, j) = mod_red(a(r, j) * inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            const Int f = a(i, c);
            for (std::size_t j = 0; j < cols; ++j) a(i, j) = mod_red(a(i, j) - f * a(r, j), p);
        }
        pivot_col_of_row[r] = static_cast<long>(c);
        col_is_pivot[c] = true;
        ++r;
    }
    std::vector<std::vector<Int>> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (col_is_pivot[c]) continue;
        std::vector<Int> v(cols, Int(0));
        v[c] = 1;
        for (std::size_t i = 0; i < r; ++i) {
            const long pc = pivot_col_of_row[i];
            if (a(i, c) != 0) v[static_cast<std::size_t>(pc)] = mod_red(-a(i, c), p);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// incremental F_p row space for rank/membership queries
struct ModRowSpace {
    Int p;
    std::vector<std::vector<Int>> rows; // reduced echelon, pivot normalized to 1
    std::vector<std::size_t> pivots;

    bool contains(std::vector<Int> v) const {
        reduce(v);
        return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
    }

    // returns true if v was independent (and adds it)
    bool add(std::vector<Int> v) {
        reduce(v);
        std::size_t c = 0;
        while (c < v.size() && v[c] == 0) ++c;
        if (c == v.size()) return false;
        Int inv;
        mpz_invert(inv.get_mpz_t(), v[c].get_mpz_t(), p.get_mpz_t());
        for (auto& x : v) x = mod_red(x * inv, p);
        rows.push_back(std::move(v));
        pivots.push_back(c);
        return true;
    }

    void reduce(std::vector<Int>& v) const {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Int& f = v[pivots[i]];
            if (f == 0) continue;
            const Int fv = f;
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] = mod_red(v[j] - fv * rows[i][j], p);
        }
    }

private:
    Int mod_red(const Int& v, const Int& pp) const {
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), pp.get_mpz_t());
        return r;
    }
};

std::vector<Int> mat_vec_mod(const IntMatrix& m, const std::vector<Int>& v, const Int& p) {
    std::vector<Int> r(m.rows(), Int(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
        r[i] = mod_red(r[i], p);
    }
    return r;
}

std::string hnf_key(const IntMatrix& m) {
    std::string k;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            k += m(i, j).get_str();
            k += ',';
        }
    return k;
}

// theta-action matrix on the basis of J (rows): T with T*B = B*C restricted,
// i.e. row i of T solves t * B = (row i of B) * C
IntMatrix theta_action_on(const IdealLattice& j) {
    const std::size_t n = j.order()->degree();
    const IntMatrix& b = j.basis_hnf();
    IntMatrix t(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto w = vec_mat(b.row(i), j.order()->mult_theta());
        auto y = solve_integer(b.transposed(), w);
        if (!y) throw Error("theta_action_on: lattice is not theta-stable");
        for (std::size_t k = 0; k < n; ++k) t(i, k) = (*y)[k];
    }
    return t;
}

// all maximal theta-stable sublattices of j with index a power of p
std::vector<IdealLattice> maximal_sublattices(const IdealLattice& j, const Int& p,
                                              const ModFactorization& f_factors) {
    const OrderPtr& o = j.order();
    const std::size_t n = o->degree();
    const IntMatrix t = theta_action_on(j);
    const IntMatrix tm = mat_mod(t, p); // adjoint action on dual columns is left-mult by t
    std::vector<IdealLattice> out;

    for (const auto& fct : f_factors.factors) {
        const int d = fct.g.degree();
        // simple quotients of type g correspond to simple submodules of the
        // dual lying in ker g(S)
        const IntMatrix gs = poly_at_matrix_mod(fct.g, tm, p);
        const auto kd = nullspace_mod(gs, p);
        if (kd.empty()) continue;

        // F_{p^d}-basis u_1..u_m of the kernel: grow cyclic spans
        std::vector<std::vector<Int>> gens;
        ModRowSpace seen{p, {}, {}};
        for (const auto& u : kd) {
            if (seen.contains(u)) continue;
            gens.push_back(u);
            std::vector<Int> w = u;
            for (int s = 0; s < d; ++s) {
                seen.add(w);
                if (s + 1 < d) w = mat_vec_mod(tm, w, p);
            }
        }
        const std::size_t m = gens.size();

        // lines of the F_{p^d}-space: last used generator has coefficient 1,
        // earlier generators run over all of F_{p^d} = polynomials in S of
        // degree < d applied to the generator
        const unsigned long pl = mpz_get_ui(p.get_mpz_t());
        std::vector<std::vector<std::vector<Int>>> spowers(m); // S^t u_j
        for (std::size_t jg = 0; jg < m; ++jg) {
            spowers[jg].push_back(gens[jg]);
            for (int s = 1; s < d; ++s)
                spowers[jg].push_back(mat_vec_mod(tm, spowers[jg].back(), p));
        }
        for (std::size_t lead = 0; lead < m; ++lead) {
            // coefficients: lambda_j in F_{p^d} for j < lead, lambda_lead = 1
            const std::size_t nfree = lead * static_cast<std::size_t>(d);
            std::vector<unsigned long> digits(nfree, 0);
            while (true) {
                // w = u_lead + sum_j lambda_j(S) u_j
                std::vector<Int> w = gens[lead];
                for (std::size_t jg = 0; jg < lead; ++jg)
                    for (int s = 0; s < d; ++s) {
                        const unsigned long cd = digits[jg * d + static_cast<std::size_t>(s)];
                        if (cd == 0) continue;
                        for (std::size_t c = 0; c < n; ++c)
                            w[c] = mod_red(w[c] + Int(cd) * spowers[jg][static_cast<std::size_t>(s)][c], p);
                    }
                // simple submodule spanned by w over F_p[S]
                ModRowSpace simple{p, {}, {}};
                std::vector<Int> cur = w;
                for (int s = 0; s < d; ++s) {
                    simple.add(cur);
                    if (s + 1 < d) cur = mat_vec_mod(tm, cur, p);
                }
                // maximal submodule = annihilator of the simple dual submodule
                IntMatrix ann(simple.rows.size(), n);
                for (std::size_t r = 0; r < simple.rows.size(); ++r)
                    for (std::size_t c = 0; c < n; ++c) ann(r, c) = simple.rows[r][c];
                const auto wbasis = nullspace_mod(ann, p);
                // lift: p*B plus the W vectors expressed through B
                IntMatrix rows(n + wbasis.size(), n);
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t c = 0; c < n; ++c) rows(r, c) = p * j.basis_hnf()(r, c);
                for (std::size_t r = 0; r < wbasis.size(); ++r) {
                    const auto lifted = vec_mat(wbasis[r], j.basis_hnf());
                    for (std::size_t c = 0; c < n; ++c) rows(n + r, c) = lifted[c];
                }
                out.emplace_back(o, hnf_basis(rows));

                // increment mixed-radix digits
                std::size_t pos = 0;
                while (pos < nfree) {
                    if (++digits[pos] < pl) break;
                    digits[pos] = 0;
                    ++pos;
                }
                if (pos == nfree) break;
                if (nfree == 0) break;
            }
        }
    }
    return out;
}

// all ideals of p-power index <= bound, excluding the unit ideal
std::vector<IdealLattice> p_power_ideals(const OrderPtr& o, const Int& p, const Int& bound,
                                         const Budget* budget, bool& expired) {
    std::vector<IdealLattice> out;
    const ModFactorization fac = factor_mod(reduce_mod(o->poly(), p));
    std::set<std::string> seen;
    std::vector<IdealLattice> frontier{unit_ideal(o)};
    while (!frontier.empty()) {
        std::vector<IdealLattice> next;
        for (const auto& j : frontier) {
            if (budget && budget->expired()) {
                expired = true;
                return out;
            }
            for (auto& child : maximal_sublattices(j, p, fac)) {
                if (ideal_norm(child) > bound) continue;
                auto key = hnf_key(child.basis_hnf());
                if (!seen.insert(std::move(key)).second) continue;
                out.push_back(child);
                next.push_back(child);
            }
        }
        frontier = std::move(next);
    }
    return out;
}

} // namespace

std::vector<IdealLattice> ideals_up_to_norm(const OrderPtr& o, const Int& bound,
                                            const Budget* budget, bool partial_ok) {
    if (bound < 1) throw Error("ideals_up_to_norm: bound must be >= 1");
    std::vector<IdealLattice> result{unit_ideal(o)};
    bool expired = false;
    Int p = 1;
    while (!expired) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (p > bound) break;
        const auto pid = p_power_ideals(o, p, bound, budget, expired);
        if (pid.empty()) continue;
        const std::size_t base_count = result.size();
        for (std::size_t i = 0; i < base_count; ++i) {
            const Int nr = ideal_norm(result[i]);
            for (const auto& q : pid) {
                if (budget && budget->expired()) {
                    expired = true;
                    break;
                }
                if (nr * ideal_norm(q) > bound) continue;
                result.push_back(ideal_product(result[i], q));
            }
            if (expired) break;
        }
    }
    if (expired && !partial_ok)
        throw BoundTooLargeError("ideals_up_to_norm: budget exhausted");
    std::sort(result.begin(), result.end(), ideal_less);
    return result;
}

MinkowskiBound minkowski_bound(const OrderPtr& o, const IntegralClosure& ic) {
    if (ic.verdict != Tri::Yes) return MinkowskiBound{};
    const std::size_t n = o->degree();
    const unsigned r1 = count_real_roots(o->poly(), Interval::whole_line());
    const unsigned r2 = (static_cast<unsigned>(n) - r1) / 2;

    Int adisc = o->disc() < 0 ? Int(-o->disc()) : o->disc();
    // rational upper bound of sqrt(|disc|): Newton from above
    Int s;
    mpz_sqrt(s.get_mpz_t(), adisc.get_mpz_t());
    Rat sq;
    if (s * s == adisc) {
        sq = Rat(s);
    } else {
        sq = Rat(s + 1);
        for (int it = 0; it < 4; ++it) {
            sq = (sq + Rat(adisc) / sq) / 2;
            sq.canonicalize();
        }
    }

    Int fact = 1, npow = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= static_cast<long>(i);
    for (std::size_t i = 0; i < n; ++i) npow *= static_cast<long>(n);
    Rat b = Rat(fact, npow);
    b.canonicalize();
    const Rat four_over_pi_upper(12732396, 10000000); // > 4/pi
    for (unsigned i = 0; i < r2; ++i) b *= four_over_pi_upper;
    b *= sq;
    b.canonicalize();
    return MinkowskiBound{true, b};
}

MinkowskiBound minkowski_bound(const OrderPtr& o) {
    return minkowski_bound(o, is_integrally_closed(o));
}

} // namespace csknot
