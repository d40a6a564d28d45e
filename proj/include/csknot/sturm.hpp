#ifndef CSKNOT_STURM_HPP
#define CSKNOT_STURM_HPP

#include <optional>

#include "csknot/int_poly.hpp"

namespace csknot {

/// Interval with optional rational endpoints (nullopt = infinite) and
/// per-endpoint closedness. Infinite endpoints are always open.
struct Interval {
    std::optional<Rat> lo;
    std::optional<Rat> hi;
    bool lo_closed = false;
    bool hi_closed = false;

    static Interval whole_line() { return {}; }
    static Interval open(Rat a, Rat b) { return {std::move(a), std::move(b), false, false}; }
    static Interval closed(Rat a, Rat b) { return {std::move(a), std::move(b), true, true}; }
    static Interval below(Rat b, bool closed = false) {
        return {std::nullopt, std::move(b), false, closed};
    }
    static Interval above(Rat a, bool closed = false) {
        return {std::move(a), std::nullopt, closed, false};
    }
};

/// Number of distinct real roots of a squarefree f in the interval,
/// by Sturm sequences over exact rationals. Throws NotSquarefreeError.
unsigned count_real_roots(const IntPoly& f, const Interval& iv);

} // namespace csknot

#endif
