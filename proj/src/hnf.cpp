#include "csknot/hnf.hpp"

namespace csknot {

HnfResult hnf(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(rows);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        a.swap_rows(r, piv);
        u.swap_rows(r, piv);
        // gcd-combine the pivot row with every lower row
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a(i, c) == 0) continue;
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a(r, c).get_mpz_t(),
                       a(i, c).get_mpz_t());
            Int p, q;
            mpz_divexact(p.get_mpz_t(), a(r, c).get_mpz_t(), g.get_mpz_t());
            mpz_divexact(q.get_mpz_t(), a(i, c).get_mpz_t(), g.get_mpz_t());
            // [s t; -q p] has determinant s*p + t*q = 1
            for (std::size_t j = 0; j < cols; ++j) {
                Int na = s * a(r, j) + t * a(i, j);
                Int nb = p * a(i, j) - q * a(r, j);
                a(r, j) = std::move(na);
                a(i, j) = std::move(nb);
            }
            for (std::size_t j = 0; j < rows; ++j) {
                Int na = s * u(r, j) + t * u(i, j);
                Int nb = p * u(i, j) - q * u(r, j);
                u(r, j) = std::move(na);
                u(i, j) = std::move(nb);
            }
        }
        if (a(r, c) < 0) {
            a.negate_row(r);
            u.negate_row(r);
        }
        // reduce entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
            if (q != 0) {
                a.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
            }
        }
        ++r;
    }
    return HnfResult{std::move(a), std::move(u), r};
}

IntMatrix hnf_basis(const IntMatrix& m) {
    HnfResult h = hnf(m);
    IntMatrix b(h.rank, m.cols());
    for (std::size_t i = 0; i < h.rank; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) b(i, j) = h.hnf(i, j);
    return b;
}

KernelLattice kernel_lattice(const IntMatrix& m) {
    // U * m^T = H; rows of U facing zero rows of H are exactly
    // the integer vectors x with m * x = 0.
    HnfResult h = hnf(m.transposed());
    const std::size_t total = m.cols();
    IntMatrix ker(total - h.rank, total);
    for (std::size_t i = h.rank; i < total; ++i)
        for (std::size_t j = 0; j < total; ++j) ker(i - h.rank, j) = h.transform(i, j);
    return KernelLattice{hnf_basis(ker)};
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, const std::vector<Int>& rhs) {
    if (rhs.size() != m.rows()) throw ShapeError("solve_integer: rhs size mismatch");
    // Column lattice of m = row lattice of m^T; express rhs over the HNF
    // basis by staircase elimination, then pull back through the transform.
    HnfResult h = hnf(m.transposed());
    const std::size_t nc = m.cols();
    std::vector<Int> res = rhs;
    std::vector<Int> y(nc, Int(0));
    for (std::size_t i = 0; i < h.rank; ++i) {
        std::size_t pc = 0;
        while (pc < m.rows() && h.hnf(i, pc) == 0) ++pc;
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), res[pc].get_mpz_t(), h.hnf(i, pc).get_mpz_t());
        if (r != 0) return std::nullopt;
        y[i] = q;
        if (q != 0)
            for (std::size_t j = 0; j < m.rows(); ++j) res[j] -= q * h.hnf(i, j);
    }
    for (const Int& v : res)
        if (v != 0) return std::nullopt;
    // x = U^T * y
    std::vector<Int> x(nc, Int(0));
    for (std::size_t i = 0; i < nc; ++i)
        if (y[i] != 0)
            for (std::size_t j = 0; j < nc; ++j) x[j] += y[i] * h.transform(i, j);
    return x;
}

namespace {

Rat rat_round(const Rat& q) {
    // nearest integer, ties toward +infinity: floor((2n + d) / 2d)
    Int num = 2 * q.get_num() + q.get_den();
    Int den = 2 * q.get_den();
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return Rat(r);
}

struct Gso {
    std::vector<std::vector<Rat>> mu;
    std::vector<Rat> norm2; // squared lengths of the orthogonal vectors
};

Gso gram_schmidt(const IntMatrix& b) {
    const std::size_t m = b.rows(), n = b.cols();
    std::vector<std::vector<Rat>> star(m, std::vector<Rat>(n, Rat(0)));
    Gso g;
    g.mu.assign(m, std::vector<Rat>(m, Rat(0)));
    g.norm2.assign(m, Rat(0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) star[i][j] = Rat(b(i, j));
        for (std::size_t k = 0; k < i; ++k) {
            Rat dot(0);
            for (std::size_t j = 0; j < n; ++j) {
                dot += Rat(b(i, j)) * star[k][j];
                dot.canonicalize();
            }
            if (g.norm2[k] == 0) throw DependentRowsError("lll_reduce: dependent rows");
            Rat mu = dot / g.norm2[k];
            mu.canonicalize();
            g.mu[i][k] = mu;
            for (std::size_t j = 0; j < n; ++j) {
                star[i][j] -= mu * star[k][j];
                star[i][j].canonicalize();
            }
        }
        Rat n2(0);
        for (std::size_t j = 0; j < n; ++j) {
            n2 += star[i][j] * star[i][j];
            n2.canonicalize();
        }
        g.norm2[i] = n2;
        if (n2 == 0) throw DependentRowsError("lll_reduce: dependent rows");
    }
    return g;
}

} // namespace

IntMatrix lll_reduce(const IntMatrix& basis) {
    IntMatrix b = basis;
    const std::size_t m = b.rows();
    if (m <= 1) {
        gram_schmidt(b); // dependence check for the single-row case
        return b;
    }
    const Rat delta(3, 4);
    Gso g = gram_schmidt(b);
    std::size_t k = 1;
    while (k < m) {
        for (std::size_t j = k; j-- > 0;) {
            Rat r = rat_round(g.mu[k][j]);
            if (r != 0) {
                Int q(r.get_num());
                for (std::size_t c = 0; c < b.cols(); ++c) b(k, c) -= q * b(j, c);
                g = gram_schmidt(b);
            }
        }
        Rat lhs = g.norm2[k];
        Rat rhs = (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.norm2[k - 1];
        lhs.canonicalize();
        rhs.canonicalize();
        if (lhs >= rhs) {
            ++k;
        } else {
            b.swap_rows(k, k - 1);
            g = gram_schmidt(b);
            k = k > 1 ? k - 1 : 1;
        }
    }
    return b;
}

} // namespace csknot
