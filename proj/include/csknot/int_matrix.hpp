#ifndef CSKNOT_INT_MATRIX_HPP
#define CSKNOT_INT_MATRIX_HPP

#include <cstddef>
#include <gmpxx.h>
#include <initializer_list>
#include <vector>

#include "csknot/errors.hpp"
#include "csknot/int_poly.hpp"

namespace csknot {

/// Dense matrix over Z, row-major, arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::vector<std::vector<Int>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    Int& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const IntMatrix&) const = default;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator*(const Int& s) const;
    IntMatrix operator-() const;

    IntMatrix transposed() const;
    std::vector<Int> row(std::size_t i) const;

    void swap_rows(std::size_t a, std::size_t b);
    void negate_row(std::size_t i);
    /// row(dst) += q * row(src)
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& q);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

/// row vector * matrix
std::vector<Int> vec_mat(const std::vector<Int>& v, const IntMatrix& m);
/// matrix * column vector
std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v);

/// Exact determinant, fraction-free (Bareiss).
Int det(const IntMatrix& m);

/// det(xI - m), monic, via the division-free Berkowitz recursion.
IntPoly charpoly(const IntMatrix& m);

/// k-th exterior power: C(n,k) x C(n,k) matrix of k x k minors,
/// rows/columns indexed by k-subsets in lexicographic order.
IntMatrix exterior_power(const IntMatrix& m, std::size_t k);

/// Exact inverse for |det| = 1 (adjugate route); throws otherwise.
IntMatrix inverse_unimodular(const IntMatrix& m);

/// Evaluate a polynomial at a square matrix (Horner).
IntMatrix poly_at_matrix(const IntPoly& f, const IntMatrix& m);

/// Dense matrix over Q; entries kept canonical.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Rat(0)) {}
    explicit RatMatrix(const IntMatrix& m);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const RatMatrix&) const = default;
    RatMatrix operator*(const RatMatrix& o) const;

    /// Gauss-Jordan inverse; throws NonSquareError / DependentRowsError.
    RatMatrix inverse() const;

    /// lcm of all entry denominators (positive).
    Int denominator_lcm() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

} // namespace csknot

#endif
