#ifndef TRIDIST_CURVE_HPP
#define TRIDIST_CURVE_HPP

#include <optional>
#include <vector>

#include "tridist/bipoly.hpp"
#include "tridist/census.hpp"
#include "tridist/frame.hpp"

namespace tridist {

// One curve gamma_{X,V} in the (Y,U) parameter plane. The real curve is the
// semialgebraic set H = 0, A >= 0, B >= 0, where
//   A(Y) = X - ((Y-X)/4 - 1)^2     (radicand of y)
//   B(U) = V - ((V-U)/4 + 1)^2     (radicand of v)
//   R(Y,U) = (V-X)/2 - (1-a)(Y-X)/4 - (1+a)(V-U)/4
//   H = (b^2 A + b^2 B - R^2)^2 - 4 b^4 A B,
// the product of the four sign-conjugates of R - b(v - y). H has total
// degree <= 4; exactly 4 in each variable once b != 0.
struct CurvePoly {
    Rational X, V;
    AnchorFrame frame;
    BiPoly Arad;       // in (Y,U), depends on Y only
    BiPoly Brad;       // depends on U only
    BiPoly R;          // affine
    BiPoly H;          // quartic
    BiPoly canonical;  // canonical form of H, used for coincidence grouping
};

// Throws on negative X or V.
CurvePoly build_curve(const AnchorFrame& frame, const Rational& X, const Rational& V);

// The semialgebraic membership test: H(Y,U) = 0 together with both radicand
// conditions. H = 0 alone admits ghost branches with no real witnesses.
bool membership(const CurvePoly& curve, const Rational& Y, const Rational& U);

struct MembershipDetail {
    bool h_zero = false;
    int sign_a = 0, sign_b = 0;
    bool member = false;
    bool ghost = false;  // H = 0 but some radicand negative
};
MembershipDetail membership_detail(const CurvePoly& curve, const Rational& Y, const Rational& U);

// A reconstructed pair (q1, q2) realizing a quadruple. x and u are exact;
// y and v are stored as their squares plus a sign, since they may be square
// roots (y_sign/v_sign is 0 exactly when the square vanishes).
struct WitnessPair {
    Rational x, u;
    Rational y_squared, v_squared;
    int y_sign = 0, v_sign = 0;
    // exact rational y when y_squared is a perfect square
    std::optional<Rational> y_exact() const;
    std::optional<Rational> v_exact() const;
};

// Inverts Eq.-style recovery: x and u from Y = X + 4x, U = V - 4u; y^2, v^2
// from the radicands; keeps exactly the sign choices satisfying the p3
// equation. Nonempty whenever membership holds; at most 4 entries. Throws if
// membership fails (including negative radicands).
std::vector<WitnessPair> reconstruct_witnesses(const AnchorFrame& frame, const Quadruple& quad);

// The dual curve gamma*_{Y,U} in the (X,V) plane for a fixed point (Y,U);
// var1 is X and var2 is V. Same algebraic shape with the roles of the label
// and the running point exchanged.
CurvePoly build_dual_curve(const AnchorFrame& frame, const Rational& Ypt, const Rational& Upt);

// (X,V) in gamma*_{Y,U}; by the symmetry of the definition this must agree
// with membership(build_curve(X,V), Y, U) on every input. Evaluated through
// the dual construction so the two routes stay independent.
bool dual_membership(const AnchorFrame& frame, const Rational& Ypt, const Rational& Upt,
                     const Rational& X, const Rational& V);

}  // namespace tridist

#endif
