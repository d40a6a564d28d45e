#ifndef CSKNOT_INT_POLY_HPP
#define CSKNOT_INT_POLY_HPP

#include <gmpxx.h>
#include <initializer_list>
#include <utility>
#include <vector>

#include "csknot/errors.hpp"

namespace csknot {

using Int = mpz_class;
using Rat = mpq_class;

/// Univariate polynomial over Z, coefficients ascending, canonical
/// (no trailing zeros; the zero polynomial is the empty list).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<Int> coeffs) : c_(coeffs) { normalize(); }

    static IntPoly constant(Int v) { return IntPoly{std::vector<Int>{std::move(v)}}; }
    static IntPoly x_power(std::size_t k);

    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    const Int& coeff(std::size_t i) const;
    const Int& leading() const { return c_.back(); }
    const std::vector<Int>& coeffs() const { return c_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const Int& s) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    IntPoly derivative() const;

    // gcd of all coefficients, positive; 0 for the zero polynomial
    Int content() const;
    // divides by content and makes the leading coefficient positive
    IntPoly primitive_positive() const;

private:
    void normalize();
    std::vector<Int> c_;
};

/// Exact division with remainder by a monic divisor: f = q*g + r, deg r < deg g.
std::pair<IntPoly, IntPoly> divrem(const IntPoly& f, const IntPoly& g);

/// (-x)^n f(1/x) for monic f with f(0) = ±1; involutive on that domain.
IntPoly signed_reciprocal(const IntPoly& f);

/// Resultant by the subresultant PRS.
Int resultant(const IntPoly& f, const IntPoly& g);

/// disc(f) = (-1)^{n(n-1)/2} Res(f, f') for monic f (lc-normalized otherwise).
Int discriminant(const IntPoly& f);

/// gcd over Z via the primitive PRS, positive leading coefficient.
IntPoly poly_gcd(const IntPoly& f, const IntPoly& g);

} // namespace csknot

#endif
