#ifndef CSKNOT_MOD_POLY_HPP
#define CSKNOT_MOD_POLY_HPP

#include <cstdint>
#include <vector>

#include "csknot/int_poly.hpp"

namespace csknot {

/// Polynomial over F_p (p prime), residues in [0, p), ascending, canonical.
class ModPoly {
public:
    explicit ModPoly(Int p) : p_(std::move(p)) {}
    ModPoly(Int p, std::vector<Int> coeffs) : p_(std::move(p)), c_(std::move(coeffs)) {
        canonicalize();
    }

    const Int& modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Int& coeff(std::size_t i) const;
    const Int& leading() const { return c_.back(); }
    const std::vector<Int>& coeffs() const { return c_; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    ModPoly operator+(const ModPoly& o) const;
    ModPoly operator-(const ModPoly& o) const;
    ModPoly operator*(const ModPoly& o) const;
    ModPoly operator*(const Int& s) const;
    bool operator==(const ModPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

    ModPoly derivative() const;
    ModPoly make_monic() const;

    /// Lift to Z[x] with coefficients in [0, p).
    IntPoly lift() const;

private:
    void canonicalize();
    Int p_;
    std::vector<Int> c_;
};

/// Coefficientwise reduction; validates primality of p.
ModPoly reduce_mod(const IntPoly& f, const Int& p);

std::pair<ModPoly, ModPoly> mod_divrem(const ModPoly& f, const ModPoly& g);
ModPoly mod_gcd(const ModPoly& f, const ModPoly& g); // monic (or zero)
ModPoly mod_powmod(const ModPoly& base, const Int& e, const ModPoly& mod);

struct ModFactor {
    ModPoly g;
    int multiplicity;
};

/// unit * prod g_i^{e_i} == input; g_i monic irreducible, pairwise distinct,
/// sorted by (degree, coefficient sequence).
struct ModFactorization {
    Int p;
    Int unit;
    std::vector<ModFactor> factors;
};

ModFactorization factor_mod(const ModPoly& f, std::uint64_t seed = 0);

bool mod_is_irreducible(const ModPoly& f);

struct IrredWitness {
    bool certified = false;
    Int prime;
};

/// Certified(p) when f mod p is irreducible for some prime p <= bound
/// not dividing disc(f); sufficient condition only.
IrredWitness irreducibility_witness(const IntPoly& f, unsigned long prime_bound);

} // namespace csknot

#endif
