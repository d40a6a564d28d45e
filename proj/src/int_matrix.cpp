#include "csknot/int_matrix.hpp"

#include <algorithm>

namespace csknot {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw ShapeError("IntMatrix: ragged initializer");
        for (long v : r) e_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::vector<std::vector<Int>> rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw ShapeError("IntMatrix: ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = std::move(rows[i][j]);
    }
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Int& v) { return v == 0; });
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix +: shape mismatch");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix -: shape mismatch");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw ShapeError("matrix *: shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator*(const Int& s) const {
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    std::vector<Int> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += q * (*this)(src, j);
}

std::vector<Int> vec_mat(const std::vector<Int>& v, const IntMatrix& m) {
    if (v.size() != m.rows()) throw ShapeError("vec_mat: size mismatch");
    std::vector<Int> r(m.cols(), Int(0));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m(i, j);
    }
    return r;
}

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v) {
    if (v.size() != m.cols()) throw ShapeError("mat_vec: size mismatch");
    std::vector<Int> r(m.rows(), Int(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (v[j] != 0) r[i] += m(i, j) * v[j];
    return r;
}

Int det(const IntMatrix& m) {
    if (!m.is_square()) throw NonSquareError("det: matrix must be square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

// Berkowitz: extend the characteristic polynomial of the leading principal
// submatrix one row/column at a time via Toeplitz products. Division-free.
IntPoly charpoly(const IntMatrix& m) {
    if (!m.is_square()) throw NonSquareError("charpoly: matrix must be square");
    const std::size_t n = m.rows();
    if (n == 0) return IntPoly{Int(1)};
    // V: coefficients of det(xI - leading submatrix), descending
    std::vector<Int> V{Int(1), -m(0, 0)};
    for (std::size_t r = 1; r < n; ++r) {
        std::vector<Int> t(r + 2);
        t[0] = 1;
        t[1] = -m(r, r);
        // t[k] = -(R . M^{k-2} . C) with R the new row, C the new column
        std::vector<Int> vec(r);
        for (std::size_t i = 0; i < r; ++i) vec[i] = m(i, r);
        for (std::size_t k = 2; k <= r + 1; ++k) {
            Int dot = 0;
            for (std::size_t i = 0; i < r; ++i) dot += m(r, i) * vec[i];
            t[k] = -dot;
            if (k <= r) {
                std::vector<Int> nv(r, Int(0));
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j)
                        if (vec[j] != 0) nv[i] += m(i, j) * vec[j];
                vec = std::move(nv);
            }
        }
        std::vector<Int> nV(r + 2, Int(0));
        for (std::size_t j = 0; j < nV.size(); ++j)
            for (std::size_t k = 0; k < t.size() && k <= j; ++k)
                if (j - k < V.size()) nV[j] += t[k] * V[j - k];
        V = std::move(nV);
    }
    std::vector<Int> asc(n + 1);
    for (std::size_t i = 0; i <= n; ++i) asc[i] = V[n - i];
    return IntPoly{std::move(asc)};
}

namespace {
std::vector<std::vector<std::size_t>> lex_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}
} // namespace

IntMatrix exterior_power(const IntMatrix& m, std::size_t k) {
    if (!m.is_square()) throw NonSquareError("exterior_power: matrix must be square");
    const std::size_t n = m.rows();
    if (k < 1 || k > n) throw KOutOfRangeError("exterior_power: k out of range");
    const auto subs = lex_subsets(n, k);
    IntMatrix r(subs.size(), subs.size());
    for (std::size_t a = 0; a < subs.size(); ++a)
        for (std::size_t b = 0; b < subs.size(); ++b) {
            IntMatrix minor(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(subs[a][i], subs[b][j]);
            r(a, b) = det(minor);
        }
    return r;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
    if (!m.is_square()) throw NonSquareError("inverse: matrix must be square");
    const std::size_t n = m.rows();
    const Int d = det(m);
    if (d != 1 && d != -1)
        throw NonInvertibleMatrixError("inverse_unimodular: determinant is not ±1");
    IntMatrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            IntMatrix minor(n - 1, n - 1);
            for (std::size_t a = 0, ai = 0; a < n; ++a) {
                if (a == i) continue;
                for (std::size_t b = 0, bj = 0; b < n; ++b) {
                    if (b == j) continue;
                    minor(ai, bj) = m(a, b);
                    ++bj;
                }
                ++ai;
            }
            Int c = det(minor);
            if ((i + j) % 2) c = -c;
            adj(j, i) = c; // adjugate is the transposed cofactor matrix
        }
    return d == 1 ? adj : -adj;
}

IntMatrix poly_at_matrix(const IntPoly& f, const IntMatrix& m) {
    if (!m.is_square()) throw NonSquareError("poly_at_matrix: matrix must be square");
    const std::size_t n = m.rows();
    IntMatrix acc(n, n);
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * m;
        const Int& c = f.coeff(static_cast<std::size_t>(i));
        for (std::size_t d = 0; d < n; ++d) acc(d, d) += c;
    }
    return acc;
}

RatMatrix::RatMatrix(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
    e_.resize(rows_ * cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) e_[i * cols_ + j] = Rat(m(i, j));
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw ShapeError("rat matrix *: shape mismatch");
    RatMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                r(i, j) += a * o(k, j);
                r(i, j).canonicalize();
            }
        }
    return r;
}

RatMatrix RatMatrix::inverse() const {
    if (rows_ != cols_) throw NonSquareError("inverse: matrix must be square");
    const std::size_t n = rows_;
    RatMatrix a = *this, inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) throw DependentRowsError("inverse: singular matrix");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a(col, j), a(piv, j));
            std::swap(inv(col, j), inv(piv, j));
        }
        const Rat p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            a(col, j).canonicalize();
            inv(col, j) /= p;
            inv(col, j).canonicalize();
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            const Rat q = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= q * a(col, j);
                a(i, j).canonicalize();
                inv(i, j) -= q * inv(col, j);
                inv(i, j).canonicalize();
            }
        }
    }
    return inv;
}

Int RatMatrix::denominator_lcm() const {
    Int l = 1;
    for (const auto& v : e_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    return l;
}

} // namespace csknot
