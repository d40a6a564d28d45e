#include "csknot/correspondence.hpp"

#include <algorithm>

namespace csknot {

namespace {

// arithmetic in K = Q[x]/(f): dense rational polynomials of degree < n
struct QPoly {
    std::vector<Rat> c;

    bool is_zero() const {
        return std::all_of(c.begin(), c.end(), [](const Rat& v) { return v == 0; });
    }
};

QPoly qp_zero(std::size_t n) { return QPoly{std::vector<Rat>(n, Rat(0))}; }

int qp_degree(const std::vector<Rat>& c) {
    for (std::size_t i = c.size(); i-- > 0;)
        if (c[i] != 0) return static_cast<int>(i);
    return -1;
}

// plain Q[x] division: returns remainder, any nonzero divisor
std::vector<Rat> qx_rem(std::vector<Rat> r, const std::vector<Rat>& g) {
    const int dg = qp_degree(g);
    while (qp_degree(r) >= dg && dg >= 0) {
        const int dr = qp_degree(r);
        Rat lead = r[static_cast<std::size_t>(dr)] / g[static_cast<std::size_t>(dg)];
        lead.canonicalize();
        for (int j = 0; j <= dg; ++j) {
            r[static_cast<std::size_t>(dr - dg + j)] -= lead * g[static_cast<std::size_t>(j)];
            r[static_cast<std::size_t>(dr - dg + j)].canonicalize();
        }
        r[static_cast<std::size_t>(dr)] = 0;
    }
    return r;
}

struct Field {
    std::size_t n;
    std::vector<Rat> f; // modulus, degree n, monic

    QPoly mul(const QPoly& a, const QPoly& b) const {
        std::vector<Rat> prod(2 * n, Rat(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                prod[i + j] += a.c[i] * b.c[j];
                prod[i + j].canonicalize();
            }
        }
        auto rem = qx_rem(std::move(prod), f);
        rem.resize(n);
        return QPoly{std::move(rem)};
    }

    QPoly sub_mul(const QPoly& a, const QPoly& b, const QPoly& c) const {
        // a - b*c
        QPoly bc = mul(b, c);
        QPoly r = a;
        for (std::size_t i = 0; i < n; ++i) {
            r.c[i] -= bc.c[i];
            r.c[i].canonicalize();
        }
        return r;
    }

    // inverse modulo f (f irreducible) by the extended Euclidean algorithm
    QPoly inv(const QPoly& a) const {
        std::vector<Rat> r0 = f, r1 = a.c;
        r1.resize(2 * n, Rat(0));
        std::vector<Rat> f2 = f;
        f2.resize(2 * n, Rat(0));
        r0 = f2;
        std::vector<Rat> s0(2 * n, Rat(0)), s1(2 * n, Rat(0));
        s1[0] = 1;
        while (true) {
            const int d1 = qp_degree(r1);
            if (d1 < 0) throw Error("field inverse of zero");
            if (d1 == 0) break;
            // r0 = q*r1 + r2
            std::vector<Rat> r2 = r0, q(2 * n, Rat(0));
            const int dg = d1;
            while (qp_degree(r2) >= dg) {
                const int dr = qp_degree(r2);
                Rat lead = r2[static_cast<std::size_t>(dr)] / r1[static_cast<std::size_t>(dg)];
                lead.canonicalize();
                q[static_cast<std::size_t>(dr - dg)] = lead;
                for (int j = 0; j <= dg; ++j) {
                    r2[static_cast<std::size_t>(dr - dg + j)] -=
                        lead * r1[static_cast<std::size_t>(j)];
                    r2[static_cast<std::size_t>(dr - dg + j)].canonicalize();
                }
            }
            // s2 = s0 - q*s1
            std::vector<Rat> qs(2 * n, Rat(0));
            for (std::size_t i = 0; i < 2 * n; ++i) {
                if (q[i] == 0) continue;
                for (std::size_t j = 0; j + i < 2 * n; ++j) {
                    qs[i + j] += q[i] * s1[j];
                    qs[i + j].canonicalize();
                }
            }
            std::vector<Rat> s2(2 * n);
            for (std::size_t i = 0; i < 2 * n; ++i) {
                s2[i] = s0[i] - qs[i];
                s2[i].canonicalize();
            }
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r1 is a nonzero constant: inverse = s1 / r1 mod f
        const Rat cinv = Rat(1) / r1[0];
        std::vector<Rat> res = qx_rem(std::move(s1), f);
        res.resize(n);
        for (auto& v : res) {
            v *= cinv;
            v.canonicalize();
        }
        return QPoly{std::move(res)};
    }
};

} // namespace

IdealLattice matrix_to_ideal(const OrderPtr& o, const IntMatrix& a) {
    const std::size_t n = o->degree();
    if (!a.is_square() || a.rows() != n)
        throw CharpolyMismatchError("matrix_to_ideal: wrong matrix order");
    if (!poly_at_matrix(o->poly(), a).is_zero())
        throw CharpolyMismatchError("matrix_to_ideal: f(A) != O");

    Field k{n, {}};
    k.f.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) k.f[i] = Rat(o->poly().coeff(i));

    // eigenvector for theta: kernel of (A - theta I) over K by Gaussian
    // elimination, pivot policy: first nonzero column, lowest row
    std::vector<std::vector<QPoly>> m(n, std::vector<QPoly>(n, qp_zero(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j].c[0] = Rat(a(i, j));
            if (i == j) m[i][j].c[1] -= 1; // subtract theta on the diagonal
        }
    std::vector<long> pivot_row_of_col(n, -1);
    std::size_t rank = 0;
    std::vector<bool> row_used(n, false);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!row_used[i] && !m[i][col].is_zero()) {
                piv = i;
                break;
            }
        if (piv == n) continue;
        row_used[piv] = true;
        pivot_row_of_col[col] = static_cast<long>(piv);
        ++rank;
        const QPoly pinv = k.inv(m[piv][col]);
        for (std::size_t j = 0; j < n; ++j) m[piv][j] = k.mul(m[piv][j], pinv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == piv || m[i][col].is_zero()) continue;
            const QPoly factor = m[i][col];
            for (std::size_t j = 0; j < n; ++j)
                m[i][j] = k.sub_mul(m[i][j], factor, m[piv][j]);
        }
    }
    if (rank != n - 1)
        throw CharpolyMismatchError("matrix_to_ideal: eigenspace is not one-dimensional");

    // free column -> eigenvector
    std::size_t free_col = n;
    for (std::size_t c = 0; c < n; ++c)
        if (pivot_row_of_col[c] < 0) {
            free_col = c;
            break;
        }
    std::vector<QPoly> v(n, qp_zero(n));
    v[free_col].c[0] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        if (pivot_row_of_col[c] < 0) continue;
        const std::size_t r = static_cast<std::size_t>(pivot_row_of_col[c]);
        // x_c = -m[r][free_col] (row is normalized)
        for (std::size_t t = 0; t < n; ++t) v[c].c[t] = -m[r][free_col].c[t];
    }

    // clear denominators, divide by content
    Int lcm = 1;
    for (const auto& e : v)
        for (const auto& q : e.c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    IntMatrix rows(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat scaled = v[i].c[j] * Rat(lcm);
            scaled.canonicalize();
            rows(i, j) = scaled.get_num();
        }
    Int g = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), rows(i, j).get_mpz_t());
    if (g > 1)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                mpz_divexact(rows(i, j).get_mpz_t(), rows(i, j).get_mpz_t(), g.get_mpz_t());
    return ideal_from_rows(o, rows);
}

IntMatrix ideal_to_matrix(const IdealLattice& s) {
    const std::size_t n = s.order()->degree();
    const IntMatrix& b = s.basis_hnf();
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto w = vec_mat(b.row(i), s.order()->mult_theta());
        const auto y = solve_integer(b.transposed(), w);
        if (!y) throw Error("ideal_to_matrix: lattice not theta-stable");
        for (std::size_t j = 0; j < n; ++j) a(i, j) = (*y)[j];
    }
    return a;
}

std::optional<IntMatrix> conjugacy_oracle(const IntMatrix& a, const IntMatrix& b,
                                          long coeff_box) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw ShapeError("conjugacy_oracle: orders differ");
    const std::size_t n = a.rows();
    // kernel of X -> X a - b X over Z, X vectorized row-major
    IntMatrix sys(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t ss = 0; ss < n; ++ss) {
                    Int val = 0;
                    if (i == r) val += a(ss, j);
                    if (ss == j) val -= b(i, r);
                    if (val != 0) sys(i * n + j, r * n + ss) = val;
                }
    const KernelLattice ker = kernel_lattice(sys);
    const std::size_t dim = ker.basis.rows();
    if (dim == 0) return std::nullopt;
    // short basis vectors keep the coefficient box small
    const IntMatrix basis = lll_reduce(ker.basis);

    std::vector<long> c(dim, 0);
    while (true) {
        std::size_t pos = 0;
        while (pos < dim) {
            if (++c[pos] <= coeff_box) break;
            c[pos] = -coeff_box;
            ++pos;
        }
        if (pos == dim) break;
        long first = 0;
        for (std::size_t k2 = dim; k2-- > 0;)
            if (c[k2] != 0) first = c[k2];
        if (first <= 0) continue; // X and -X conjugate identically

        IntMatrix x(n, n);
        for (std::size_t k2 = 0; k2 < dim; ++k2) {
            if (c[k2] == 0) continue;
            for (std::size_t t = 0; t < n * n; ++t)
                x(t / n, t % n) += Int(c[k2]) * basis(k2, t);
        }
        const Int d = det(x);
        if (d == 1 || d == -1) return x;
    }
    return std::nullopt;
}

namespace {

StarVerdict decide_via_ideals(const OrderPtr& o, const IntMatrix& a,
                              const std::vector<IntMatrix>& candidates, const StarOptions& opt) {
    StarVerdict out;
    const IdealLattice ia = matrix_to_ideal(o, a);
    const IdealInvariants inv_a = ideal_invariants(ia);
    bool all_certified_not = true;
    std::string last_cert;
    for (const IntMatrix& cand : candidates) {
        const IdealLattice ib = matrix_to_ideal(o, cand);
        const EquivVerdict v =
            equivalence_test_with_invariants(ia, inv_a, ib, ideal_invariants(ib), opt.radius);
        if (v.kind == EquivKind::Equivalent) {
            out.kind = EquivKind::Equivalent;
            out.route = StarRoute::IdealWitness;
            out.ideal_witness = v.witness;
            return out;
        }
        if (v.kind == EquivKind::NotEquivalent) {
            last_cert = v.certificate;
            continue;
        }
        // inconclusive pair: a conjugacy witness would settle it positively
        if (auto x = conjugacy_oracle(cand, a, opt.coeff_box)) {
            out.kind = EquivKind::Equivalent;
            out.route = StarRoute::ConjugacyWitness;
            out.conjugator = x;
            return out;
        }
        // a Minkowski-complete class list separates residual cases
        bool separated = false;
        if (opt.use_class_list) {
            const ClassList* cl = opt.class_context;
            ClassList local;
            if (!cl) {
                const IntegralClosure ic = is_integrally_closed(o);
                const MinkowskiBound mb = minkowski_bound(o, ic);
                if (mb.applicable) {
                    Int bound(mb.bound.get_num() / mb.bound.get_den() + 1);
                    if (bound <= opt.class_bound_cap) {
                        local = class_monoid(o, bound, opt.radius);
                        cl = &local;
                    }
                }
            }
            if (cl && cl->count_is_exact) {
                const auto ca = locate_class(*cl, ia, opt.radius);
                const auto cb = locate_class(*cl, ib, opt.radius);
                if (ca && cb && *ca != *cb) {
                    separated = true;
                    last_cert =
                        "distinct classes in the Minkowski-complete class group of order " +
                        std::to_string(cl->representatives.size());
                }
            }
        }
        if (!separated) all_certified_not = false;
    }
    if (all_certified_not && !candidates.empty()) {
        out.kind = EquivKind::NotEquivalent;
        out.route = StarRoute::IdealInvariant;
        out.detail = last_cert;
        return out;
    }
    out.kind = EquivKind::Unknown;
    return out;
}

} // namespace

MatrixClassQuery make_star_query(IntMatrix a, IntMatrix b, long radius, long coeff_box) {
    MatrixClassQuery q;
    q.f_a = charpoly(a);
    q.f_b = charpoly(b);
    q.a = std::move(a);
    q.b = std::move(b);
    q.radius = radius;
    q.coeff_box = coeff_box;
    return q;
}

StarVerdict star_equivalent(const MatrixClassQuery& q, const StarOptions& opt_in) {
    StarOptions opt = opt_in;
    opt.radius = q.radius;
    opt.coeff_box = q.coeff_box;
    if (!q.a.is_square() || !q.b.is_square() || q.a.rows() != q.b.rows())
        throw ShapeError("star_equivalent: matrix orders differ");
    const Int da = det(q.a), db = det(q.b);
    if (da != 1 && da != -1)
        throw NonInvertibleMatrixError("star_equivalent: A is not in GL(n,Z)");
    if (db != 1 && db != -1)
        throw NonInvertibleMatrixError("star_equivalent: B is not in GL(n,Z)");

    const IntPoly fstar = signed_reciprocal(q.f_a);
    std::vector<IntMatrix> candidates;
    if (q.f_b == q.f_a) candidates.push_back(q.b);
    if (q.f_b == fstar) candidates.push_back(inverse_unimodular(q.b));
    if (candidates.empty()) {
        StarVerdict v;
        v.kind = EquivKind::NotEquivalent;
        v.route = StarRoute::CharpolyMismatch;
        v.detail = "charpoly(B) is neither f nor f*";
        return v;
    }
    const OrderPtr o = make_order(q.f_a);
    return decide_via_ideals(o, q.a, candidates, opt);
}

StarVerdict star_equivalent(const IntMatrix& a, const IntMatrix& b, const StarOptions& opt) {
    return star_equivalent(make_star_query(a, b, opt.radius, opt.coeff_box), opt);
}

KnotPairReport classify_knot_pairs(const IntPoly& f, const Int& norm_bound, long radius,
                                   int threads, const Budget* budget, std::uint64_t factor_budget) {
    const CsReport cs = is_cs_polynomial(f);
    if (!cs.is_cs) throw NotCsPolynomialError("classify_knot_pairs: not a CS polynomial");
    KnotPairReport rep;
    const OrderPtr o = make_order(f);
    rep.classes = class_monoid(o, norm_bound, radius, threads, budget, factor_budget);
    for (std::size_t i = 0; i < rep.classes.representatives.size(); ++i) {
        const IdealLattice& s = rep.classes.representatives[i];
        IntMatrix m = ideal_to_matrix(s);
        KnotPairClass kp{s, m, rep.classes.norms[i], rep.classes.invertible[i], is_cs_matrix(m)};
        rep.pairs.push_back(std::move(kp));
    }
    return rep;
}

} // namespace csknot
