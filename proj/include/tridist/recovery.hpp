#ifndef TRIDIST_RECOVERY_HPP
#define TRIDIST_RECOVERY_HPP

#include <vector>

#include "tridist/curve.hpp"
#include "tridist/real_roots.hpp"

namespace tridist {

// A real algebraic value: exact rational, or an isolating interval of width
// bounded by the requested tolerance.
struct RootValue {
    bool exact = false;
    Rational value;        // meaningful when exact
    Rational lo, hi;       // meaningful otherwise
    double approx() const {
        if (exact) return value.get_d();
        Rational mid = (lo + hi) / 2;
        return mid.get_d();
    }
};

struct RecoveredPair {
    RootValue X, V;
};

// The curve-label recovery procedure at a Y-extremal point (Y0, U0): solve
// the quadratic  V - (V-U0+4)^2/4 = (b/(1+a))^2 (V-U0+4)^2  for V (single
// branch V = U0 - 4 when a = -1), then for each V square the remaining
// radical equation into a quadratic in X. Returns every real candidate pair,
// at most four. The input point is not certified to be extremal; candidates
// at boundary-extremal points (vanishing radicand) may omit the original
// label.
std::vector<RecoveredPair> recover_from_extremal(const AnchorFrame& frame, const Rational& Y0,
                                                 const Rational& U0, const Rational& tol);

struct ExtremalPoint {
    Rational Y0, U0;  // verified: H(Y0,U0) = H_U(Y0,U0) = 0 exactly
};

struct ExtremalReport {
    bool degenerate = false;            // H_U identically zero
    bool repeated_factor = false;       // gcd(H, H_U) nonconstant
    std::vector<ExtremalPoint> rational_points;
    int irrational_y_roots = 0;         // isolated but not rational
    int irrational_u_roots = 0;         // at rational Y0 slices
};

// Locates candidates for Y-extremal points of the algebraic curve H = 0 by
// eliminating U from {H = 0, H_U = 0} (resultant + Sturm isolation), after
// dividing out gcd(H, H_U). Rational solutions are verified exactly;
// irrational ones are counted.
ExtremalReport locate_extremal(const CurvePoly& curve, const Rational& tol);

}  // namespace tridist

#endif
