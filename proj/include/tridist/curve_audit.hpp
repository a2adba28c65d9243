#ifndef TRIDIST_CURVE_AUDIT_HPP
#define TRIDIST_CURVE_AUDIT_HPP

#include <cstddef>
#include <vector>

#include "tridist/curve.hpp"
#include "tridist/exec.hpp"

namespace tridist {

// Partition of curve labels by identical canonical H. Labels stay distinct
// even when the polynomials coincide (Gamma is a multiset).
struct CoincidenceGroups {
    std::vector<int> group_of;             // curve index -> group id
    std::vector<std::vector<int>> groups;  // group id -> member curve indices
    std::size_t max_size = 0;
};

CoincidenceGroups coincidence_groups(const std::vector<CurvePoly>& curves);

// A nonconstant polynomial factor shared by at least two distinct curves,
// with the full list of curves it divides.
struct SharedFactor {
    BiPoly factor;                // canonical form of the pairwise gcd
    std::vector<int> containing;  // indices of all curves the factor divides
    bool mirror_line = false;     // the a = 0 symmetry line U = Y (see below)
};

// Pairwise gcd audit over the canonical polynomials. Every nonconstant gcd
// found is tested for exact divisibility against every curve. For b != 0 the
// containing sets are expected to have size <= 4, with one known exception:
// when a = 0 the reflection about the y-axis fixes p3 and swaps p1 with p2,
// so every diagonal curve gamma_{X,X} picks up the line U = Y as a
// component; such factors are flagged as mirror_line instead.
std::vector<SharedFactor> overlap_audit(const std::vector<CurvePoly>& curves,
                                        Exec exec = Exec::parallel);

struct GuardResult {
    int degree = -1;  // degree of Res_U(H1, H2); -1 when identically zero
    bool overlap = false;
};

// Bezout guard: the resultant of two distinct quartics has degree <= 16;
// an identically zero resultant certifies a shared component.
GuardResult intersection_guard(const CurvePoly& c1, const CurvePoly& c2);

struct CollinearLine {
    bool vertical = false;      // a = -1: the line Y = V
    Rational slope;             // (1-a)/(1+a) otherwise
    Rational intercept;         // U = slope * Y + intercept (or Y-value when vertical)
    bool quartic = false;       // H equals scale * R^4 exactly
    Rational scale;             // the constant c with H = c * R^4
};

// b = 0 degeneration: H collapses to a multiplicity-4 line. Throws when
// b != 0.
CollinearLine collinear_diagnostics(const AnchorFrame& frame, const Rational& X,
                                    const Rational& V);

}  // namespace tridist

#endif
