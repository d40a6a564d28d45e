#include "csknot/family.hpp"

#include "csknot/correspondence.hpp"

namespace csknot {

namespace {
FamilyCheck check(std::string name, bool pass, std::string detail = {}) {
    return FamilyCheck{std::move(name), pass, std::move(detail)};
}
} // namespace

FamilyReport verify_family_theorem(int n, const Int& l, long search_radius, long coeff_box) {
    FamilyReport rep;
    rep.n = n;
    rep.l = l;
    rep.a = family_parameter_from_l(n, l);
    rep.in_range = family_l_in_range(n, l);

    const FamilySpec spec = family_spec(n);
    const IntPoly f = family_polynomial(n, rep.a);
    const auto [m1, m2] = family_matrix_pair(n, l);

    // (1) both matrices annihilate f
    const bool ann1 = poly_at_matrix(f, m1).is_zero();
    const bool ann2 = poly_at_matrix(f, m2).is_zero();
    rep.checks.push_back(check("annihilation", ann1 && ann2,
                               ann1 ? (ann2 ? "f(M1) = O, f(M2) = O" : "f(M2) != O")
                                    : "f(M1) != O"));

    // (2) both are positive Cappell-Shaneson matrices
    const CsReport cs1 = is_cs_matrix(m1);
    const CsReport cs2 = is_cs_matrix(m2);
    rep.checks.push_back(check("cs_positive",
                               cs1.is_cs && cs1.is_positive && cs2.is_cs && cs2.is_positive));

    // (3) factorization of f mod p matches the stated shape, with the
    // repeated linear factor (x - b)^2
    bool shape_ok = false;
    {
        const ModFactorization fac = factor_mod(reduce_mod(f, spec.prime));
        const auto expected = family_expected_factorization(n);
        shape_ok = fac.factors.size() == expected.size();
        if (shape_ok)
            for (std::size_t i = 0; i < expected.size(); ++i)
                shape_ok = shape_ok &&
                           fac.factors[i].g == ModPoly(spec.prime,
                                                       std::vector<Int>(expected[i].first.coeffs())) &&
                           fac.factors[i].multiplicity == expected[i].second;
    }
    rep.checks.push_back(check("mod_p_factorization", shape_ok));

    // (4) division identity f = q (x - b) + r, closed forms re-derived by
    // exact division
    const DivisionIdentity id = family_division_identity(n, l);
    const IntPoly linear{{-spec.shift_b, Int(1)}};
    const auto [q, r] = divrem(f, linear);
    const bool div_ok = q == id.quotient && r == IntPoly::constant(id.remainder) &&
                        f == id.quotient * linear + IntPoly::constant(id.remainder);
    rep.checks.push_back(check("division_identity", div_ok));

    // (5) p^2 | r, so the corollary applies and (p, theta - b) is not
    // invertible; both criteria must agree
    const OrderPtr o = make_order(f);
    bool noninv_ok = false;
    std::string noninv_detail;
    try {
        const Int p2 = spec.prime * spec.prime;
        const bool p2_div = mpz_divisible_p(id.remainder.get_mpz_t(), p2.get_mpz_t()) != 0;
        const KummerDedekindResult kd =
            kummer_dedekind_lift(o, spec.prime, IntPoly{{-spec.shift_b, Int(1)}}, 2);
        const IdealLattice ideal = corollary_basis(o, spec.prime, spec.shift_b);
        const bool general = is_invertible_general(ideal);
        noninv_ok = p2_div && kd.verdict == Invertibility::NotInvertible && !general;
        noninv_detail = "remainder " + id.remainder.get_str();
    } catch (const Error& e) {
        noninv_detail = e.what();
    }
    rep.checks.push_back(check("non_invertible_ideal", noninv_ok, noninv_detail));

    // (6) the pair is certified not *-equivalent
    StarOptions opt;
    opt.radius = search_radius;
    opt.coeff_box = coeff_box;
    opt.use_class_list = false; // the invertibility invariant must decide
    const StarVerdict sv = star_equivalent(m1, m2, opt);
    rep.checks.push_back(check("not_star_equivalent",
                               sv.kind == EquivKind::NotEquivalent &&
                                   sv.route == StarRoute::IdealInvariant,
                               sv.detail));

    rep.all_pass = true;
    for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

} // namespace csknot
