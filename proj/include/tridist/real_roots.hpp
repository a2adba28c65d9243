#ifndef TRIDIST_REAL_ROOTS_HPP
#define TRIDIST_REAL_ROOTS_HPP

#include <vector>

#include "tridist/upoly.hpp"

namespace tridist {

// One isolated real root: either exact (lo == hi) or an open-ended rational
// interval of width <= the requested tolerance containing exactly one root.
struct RootInterval {
    Rational lo, hi;
    bool exact() const { return lo == hi; }
    Rational mid() const { return (lo + hi) / 2; }
};

// Default isolation tolerance 2^-40.
Rational default_root_tolerance();

// Sturm-based isolation of the distinct real roots of f in [lo, hi].
// Multiple roots are removed by squarefree reduction first. Throws on a zero
// polynomial or nonpositive tolerance. Intervals are returned sorted and
// pairwise disjoint, one per root, each of width <= tol.
std::vector<RootInterval> isolate_real_roots(const UPoly& f, const Rational& lo,
                                             const Rational& hi, const Rational& tol);

// Isolation over (-B, B) for the Cauchy root bound B of f.
std::vector<RootInterval> isolate_all_real_roots(const UPoly& f, const Rational& tol);

// Number of distinct real roots in [lo, hi] (Sturm count; squarefree
// reduction applied internally).
int count_real_roots(const UPoly& f, const Rational& lo, const Rational& hi);

// Cauchy bound: all real roots of f lie in (-B, B).
Rational cauchy_root_bound(const UPoly& f);

// Exact rational roots of f, ascending. Uses isolation plus
// simplest-rational probing of each interval, so roots of any height are
// found as long as the tolerance pins them down; each candidate is verified
// by exact evaluation.
std::vector<Rational> rational_roots(const UPoly& f, const Rational& tol);

}  // namespace tridist

#endif
