#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "csknot/family.hpp"
#include "csknot/int_poly.hpp"
#include "csknot/mod_poly.hpp"
#include "csknot/sturm.hpp"
#include "oracles.hpp"

using namespace csknot;

namespace {
const IntPoly f_m8{{1, -9, 14, -8, 1}};
const IntPoly f_m64{{1, -65, 126, -64, 1}};
const IntPoly f5_m6{{-1, 7, -11, 11, -6, 1}}; // x^5-6x^4+11x^3-11x^2+7x-1
} // namespace

TEST_CASE("divrem: f_{-64} by (x-2) gives the quoted quotient and remainder") {
    const auto [q, r] = divrem(f_m64, IntPoly{{-2, 1}});
    CHECK(q == IntPoly{{-61, 2, -62, 1}}); // x^3 - 62x^2 + 2x - 61
    CHECK(r == IntPoly{{-121}});
}

TEST_CASE("divrem: division by one, and the n=5 remainder") {
    const auto [q, r] = divrem(f_m8, IntPoly{{1}});
    CHECK(q == f_m8);
    CHECK(r.is_zero());
    const auto [q5, r5] = divrem(f5_m6, IntPoly{{2, 1}}); // divide by x+2
    CHECK(r5 == IntPoly{{-275}});
    CHECK(q5 * IntPoly{{2, 1}} + r5 == f5_m6);
}

TEST_CASE("divrem: reconstruction property on random input") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const IntPoly g = oracle::random_poly(2 + seed % 3, -5, 5, true, seed);
        const IntPoly f = oracle::random_poly(6, -9, 9, false, seed + 500);
        const auto [q, r] = divrem(f, g);
        CHECK(q * g + r == f);
        CHECK(r.degree() < g.degree());
    }
}

TEST_CASE("divrem rejects non-monic divisors") {
    CHECK_THROWS_AS(divrem(f_m8, IntPoly{{1, 2}}), NonMonicDivisorError);
}

TEST_CASE("signed_reciprocal: quartic, palindromic quadratic, quintic") {
    CHECK(signed_reciprocal(f_m8) == IntPoly{{1, -8, 14, -9, 1}});
    const IntPoly quad{{1, -3, 1}};
    CHECK(signed_reciprocal(quad) == quad);
    CHECK(signed_reciprocal(f5_m6) == IntPoly{{-1, 6, -11, 11, -7, 1}});
}

TEST_CASE("signed_reciprocal is an involution") {
    // inside the domain both ways: constant term (-1)^n keeps f* monic
    for (std::uint64_t seed = 40; seed < 70; ++seed) {
        const int deg = 2 + static_cast<int>(seed % 7);
        IntPoly f = oracle::random_poly(deg, -6, 6, true, seed);
        std::vector<Int> c(f.coeffs());
        c[0] = (deg % 2) ? -1 : 1;
        f = IntPoly{std::move(c)};
        CHECK(signed_reciprocal(signed_reciprocal(f)) == f);
    }
}

TEST_CASE("signed_reciprocal domain errors") {
    CHECK_THROWS_AS(signed_reciprocal(IntPoly{{2, 3, 1}}), NonUnitConstantTermError);
    CHECK_THROWS_AS(signed_reciprocal(IntPoly{{1, 3, 2}}), NonMonicError);
}

TEST_CASE("reduce_mod: quoted residues, zero reduction, prime check") {
    const ModPoly r = reduce_mod(f_m64, 11);
    CHECK(r == ModPoly(11, {1, 1, 5, 2, 1})); // x^4+2x^3+5x^2+x+1
    CHECK(reduce_mod(IntPoly{{22, 11}}, 11).is_zero());
    CHECK_THROWS_AS(reduce_mod(f_m8, 12), NotPrimeError);
    // n=5 family: f_{-6} mod 5 equals the expansion of (x+2)^2(x^3+2x+1)
    const ModPoly lhs = reduce_mod(f5_m6, 5);
    const ModPoly rhs = ModPoly(5, {2, 1}) * ModPoly(5, {2, 1}) * ModPoly(5, {1, 2, 0, 1});
    CHECK(lhs == rhs);
}

TEST_CASE("factor_mod: quoted factorizations") {
    const auto fac = factor_mod(reduce_mod(f_m64, 11));
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].g == ModPoly(11, {9, 1})); // x + 9 = x - 2
    CHECK(fac.factors[0].multiplicity == 2);
    CHECK(fac.factors[1].g == ModPoly(11, {3, 6, 1}));
    CHECK(fac.factors[1].multiplicity == 1);

    const auto fac2 = factor_mod(reduce_mod(IntPoly{{-1, 0, 1}}, 2)); // x^2 - 1 mod 2
    REQUIRE(fac2.factors.size() == 1);
    CHECK(fac2.factors[0].g == ModPoly(2, {1, 1}));
    CHECK(fac2.factors[0].multiplicity == 2);

    // n=7 family member at l=0: mod 11
    const IntPoly f7 = family_polynomial(7, 20);
    const auto fac7 = factor_mod(reduce_mod(f7, 11));
    REQUIRE(fac7.factors.size() == 2);
    CHECK(fac7.factors[0].g == ModPoly(11, {6, 1}));
    CHECK(fac7.factors[0].multiplicity == 2);
    CHECK(fac7.factors[1].g == ModPoly(11, {7, 8, 0, 3, 1, 1}));
    CHECK(fac7.factors[1].multiplicity == 1);
}

TEST_CASE("factor_mod: product reconstructs input; irreducible parts verified") {
    for (std::uint64_t seed = 100; seed < 130; ++seed) {
        const long p = (seed % 3 == 0) ? 2 : (seed % 3 == 1) ? 5 : 13;
        IntPoly f = oracle::random_poly(2 + static_cast<int>(seed % 5), -20, 20, false, seed);
        ModPoly fm = reduce_mod(f, p);
        if (fm.is_zero()) continue;
        const auto fac = factor_mod(fm, seed);
        ModPoly prod{Int(p), {fac.unit}};
        for (const auto& fct : fac.factors)
            for (int e = 0; e < fct.multiplicity; ++e) prod = prod * fct.g;
        CHECK(prod == fm);
        // cross-check the multiset against exhaustive trial division
        auto trial = oracle::factor_trial_division(fm);
        REQUIRE(trial.size() == fac.factors.size());
        std::sort(trial.begin(), trial.end(), [](const auto& a, const auto& b) {
            if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
            for (std::size_t i = 0; i <= static_cast<std::size_t>(a.first.degree()); ++i) {
                const int c = mpz_cmp(a.first.coeff(i).get_mpz_t(), b.first.coeff(i).get_mpz_t());
                if (c != 0) return c < 0;
            }
            return false;
        });
        for (std::size_t i = 0; i < trial.size(); ++i) {
            CHECK(trial[i].first == fac.factors[i].g);
            CHECK(trial[i].second == fac.factors[i].multiplicity);
        }
    }
}

TEST_CASE("factor_mod output is deterministic across seeds for the splitting rng") {
    const ModPoly fm = reduce_mod(f_m8, 17);
    const auto a = factor_mod(fm, 1);
    const auto b = factor_mod(fm, 999);
    REQUIRE(a.factors.size() == b.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        CHECK(a.factors[i].g == b.factors[i].g);
        CHECK(a.factors[i].multiplicity == b.factors[i].multiplicity);
    }
}

TEST_CASE("discriminant: classical formulas") {
    CHECK(discriminant(IntPoly{{1, -3, 1}}) == 5);    // b^2 - 4c
    CHECK(discriminant(IntPoly{{0, -1, 0, 1}}) == 4); // x^3 - x: -4p^3 - 27q^2
    // f_{-8} against the Sylvester-determinant oracle
    CHECK(oracle::resultant_sylvester(f_m8, f_m8.derivative()) ==
          resultant(f_m8, f_m8.derivative()));
    CHECK(discriminant(f_m8) == -17051); // frozen: -(17^2 * 59)
}

TEST_CASE("resultant agrees with Sylvester oracle on random pairs") {
    for (std::uint64_t seed = 200; seed < 230; ++seed) {
        const IntPoly f = oracle::random_poly(3 + static_cast<int>(seed % 3), -5, 5, false, seed);
        const IntPoly g = oracle::random_poly(2 + static_cast<int>(seed % 2), -5, 5, false, seed + 77);
        if (f.is_zero() || g.is_zero()) continue;
        CHECK(resultant(f, g) == oracle::resultant_sylvester(f, g));
    }
}

TEST_CASE("discriminant mod p vanishes exactly for repeated factors") {
    for (std::uint64_t seed = 300; seed < 320; ++seed) {
        const long p = (seed % 2) ? 5 : 7;
        const IntPoly f = oracle::random_poly(4, -10, 10, true, seed); // monic
        if (f.degree() < 2) continue;
        const bool divisible =
            mpz_divisible_ui_p(discriminant(f).get_mpz_t(), static_cast<unsigned long>(p)) != 0;
        const auto fac = factor_mod(reduce_mod(f, p));
        bool repeated = false;
        for (const auto& fct : fac.factors) repeated = repeated || fct.multiplicity > 1;
        CHECK(divisible == repeated);
    }
}

TEST_CASE("count_real_roots: trivial and family cases") {
    CHECK(count_real_roots(IntPoly{{-2, 0, 1}}, Interval::below(Rat(0))) == 1);
    CHECK(count_real_roots(IntPoly{{1, 0, 1}}, Interval::whole_line()) == 0);
    CHECK(count_real_roots(f_m8, Interval::below(Rat(0))) == 0);
    CHECK(count_real_roots(f_m8, Interval::whole_line()) == 2); // frozen via bisection oracle
    CHECK(oracle::count_roots_bisection(f_m8) == 2);
}

TEST_CASE("count_real_roots: interval endpoint semantics") {
    const IntPoly f{{0, -1, 0, 1}}; // x^3 - x: roots -1, 0, 1
    CHECK(count_real_roots(f, Interval::whole_line()) == 3);
    CHECK(count_real_roots(f, Interval::open(Rat(-1), Rat(1))) == 1);
    CHECK(count_real_roots(f, Interval::closed(Rat(-1), Rat(1))) == 3);
    CHECK(count_real_roots(f, Interval::below(Rat(0))) == 1);
    CHECK(count_real_roots(f, Interval::below(Rat(0), true)) == 2);
    CHECK(count_real_roots(f, Interval::above(Rat(0))) == 1);
    CHECK(count_real_roots(f, Interval::closed(Rat(1), Rat(1))) == 1);
    CHECK(count_real_roots(f, Interval::open(Rat(1), Rat(1))) == 0);
}

TEST_CASE("count_real_roots rejects non-squarefree input") {
    CHECK_THROWS_AS(count_real_roots(IntPoly{{1, 2, 1}}, Interval::whole_line()),
                    NotSquarefreeError);
}

TEST_CASE("real root count + complex pairs = degree on random squarefree input") {
    for (std::uint64_t seed = 400; seed < 430; ++seed) {
        const IntPoly f = oracle::random_poly(3 + static_cast<int>(seed % 4), -6, 6, true, seed);
        if (poly_gcd(f, f.derivative()).degree() > 0) continue;
        const unsigned r = count_real_roots(f, Interval::whole_line());
        CHECK(r == oracle::count_roots_bisection(f));
        CHECK((static_cast<int>(r) % 2) == (f.degree() % 2));
        CHECK(static_cast<int>(r) <= f.degree());
    }
}

TEST_CASE("irreducibility_witness") {
    const auto w = irreducibility_witness(IntPoly{{1, -3, 1}}, 50);
    CHECK(w.certified);
    // verified via factor_mod: single degree-2 factor at the witness prime
    const auto fac = factor_mod(reduce_mod(IntPoly{{1, -3, 1}}, w.prime));
    CHECK(fac.factors.size() == 1);
    CHECK(fac.factors[0].multiplicity == 1);
    CHECK(fac.factors[0].g.degree() == 2);

    CHECK_FALSE(irreducibility_witness(IntPoly{{-1, 0, 1}}, 200).certified); // x^2-1 reducible

    const auto w8 = irreducibility_witness(f_m8, 200);
    if (w8.certified) {
        const auto f8 = factor_mod(reduce_mod(f_m8, w8.prime));
        CHECK(f8.factors.size() == 1);
        CHECK(f8.factors[0].multiplicity == 1);
    }
}

TEST_CASE("division identities hold symbolically across the l range") {
    for (int n = 4; n <= 7; ++n) {
        for (long lv : {0L, -1L, -2L, -7L}) {
            const Int l = (n == 7) ? Int(-lv) : Int(lv); // n=7 uses l >= 0
            const Int a = family_parameter_from_l(n, l);
            const IntPoly f = family_polynomial(n, a);
            const auto id = family_division_identity(n, l);
            const Int b = family_spec(n).shift_b;
            CHECK(f == id.quotient * IntPoly{{-b, 1}} + IntPoly::constant(id.remainder));
            const auto [q, r] = divrem(f, IntPoly{{-b, 1}});
            CHECK(q == id.quotient);
            CHECK(r == IntPoly::constant(id.remainder));
        }
    }
}
