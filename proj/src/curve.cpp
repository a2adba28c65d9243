#include "tridist/curve.hpp"

#include <stdexcept>

namespace tridist {

namespace {

BiPoly compose_h(const BiPoly& A, const BiPoly& B, const BiPoly& R, const Rational& b) {
    Rational b2 = b * b;
    BiPoly inner = (A + B) * BiPoly::constant(b2) - R * R;
    return inner * inner - BiPoly::constant(4 * b2 * b2) * A * B;
}

}  // namespace

CurvePoly build_curve(const AnchorFrame& frame, const Rational& X, const Rational& V) {
    if (sgn(X) < 0 || sgn(V) < 0)
        throw std::invalid_argument("build_curve: squared distances must be nonnegative");
    CurvePoly c;
    c.X = X;
    c.V = V;
    c.frame = frame;
    const Rational quarter(1, 4);
    // A = X - ((Y - X - 4)/4)^2
    BiPoly ty = (BiPoly::var1() - BiPoly::constant(X + 4)) * BiPoly::constant(quarter);
    c.Arad = BiPoly::constant(X) - ty * ty;
    // B = V - ((V - U + 4)/4)^2
    BiPoly tu = (BiPoly::constant(V + 4) - BiPoly::var2()) * BiPoly::constant(quarter);
    c.Brad = BiPoly::constant(V) - tu * tu;
    // R = (V-X)/2 - (1-a)(Y-X)/4 - (1+a)(V-U)/4
    c.R = BiPoly::constant((V - X) / 2) -
          (BiPoly::var1() - BiPoly::constant(X)) * BiPoly::constant((1 - frame.a) / 4) -
          (BiPoly::constant(V) - BiPoly::var2()) * BiPoly::constant((1 + frame.a) / 4);
    c.H = compose_h(c.Arad, c.Brad, c.R, frame.b);
    c.canonical = c.H.canonical();
    return c;
}

bool membership(const CurvePoly& curve, const Rational& Y, const Rational& U) {
    return membership_detail(curve, Y, U).member;
}

MembershipDetail membership_detail(const CurvePoly& curve, const Rational& Y, const Rational& U) {
    MembershipDetail d;
    d.h_zero = sgn(curve.H.eval(Y, U)) == 0;
    d.sign_a = sgn(curve.Arad.eval(Y, U));
    d.sign_b = sgn(curve.Brad.eval(Y, U));
    d.member = d.h_zero && d.sign_a >= 0 && d.sign_b >= 0;
    d.ghost = d.h_zero && !d.member;
    return d;
}

std::optional<Rational> WitnessPair::y_exact() const {
    auto r = rational_sqrt_exact(y_squared);
    if (!r) return std::nullopt;
    return *r * y_sign;
}

std::optional<Rational> WitnessPair::v_exact() const {
    auto r = rational_sqrt_exact(v_squared);
    if (!r) return std::nullopt;
    return *r * v_sign;
}

std::vector<WitnessPair> reconstruct_witnesses(const AnchorFrame& frame, const Quadruple& quad) {
    CurvePoly c = build_curve(frame, quad.X, quad.V);
    Rational A = c.Arad.eval(quad.Y, quad.U);
    Rational B = c.Brad.eval(quad.Y, quad.U);
    if (sgn(A) < 0 || sgn(B) < 0)
        throw std::domain_error("reconstruct_witnesses: negative radicand");
    if (sgn(c.H.eval(quad.Y, quad.U)) != 0)
        throw std::domain_error("reconstruct_witnesses: membership fails");
    Rational x = (quad.Y - quad.X) / 4;
    Rational u = (quad.V - quad.U) / 4;
    Rational R = c.R.eval(quad.Y, quad.U);

    std::vector<WitnessPair> out;
    auto push = [&](int ys, int vs) { out.push_back({x, u, A, B, ys, vs}); };

    if (sgn(frame.b) == 0) {
        // the p3 equation degenerates to R = 0, so every sign choice works
        int ys_list[2] = {1, -1};
        int vs_list[2] = {1, -1};
        int ny = sgn(A) > 0 ? 2 : 1, nv = sgn(B) > 0 ? 2 : 1;
        for (int i = 0; i < ny; ++i)
            for (int j = 0; j < nv; ++j)
                push(sgn(A) > 0 ? ys_list[i] : 0, sgn(B) > 0 ? vs_list[j] : 0);
        return out;
    }

    Rational r = R / frame.b;  // v - y
    if (sgn(r) == 0) {
        // v = y, hence A = B (forced by H = 0)
        if (sgn(A) == 0) {
            push(0, 0);
        } else {
            push(1, 1);
            push(-1, -1);
        }
        return out;
    }
    // v - y = r and v^2 - y^2 = B - A pin down a unique rational pair
    Rational y0 = ((B - A) / r - r) / 2;
    Rational v0 = y0 + r;
    if (y0 * y0 != A || v0 * v0 != B)
        throw std::logic_error("reconstruct_witnesses: inconsistent radicands despite membership");
    out.push_back({x, u, A, B, sgn(y0), sgn(v0)});
    return out;
}

CurvePoly build_dual_curve(const AnchorFrame& frame, const Rational& Ypt, const Rational& Upt) {
    CurvePoly c;
    c.X = Ypt;  // the dual label is the primal point
    c.V = Upt;
    c.frame = frame;
    const Rational quarter(1, 4);
    // A*(X) = X - ((Ypt - X - 4)/4)^2, X is var1 of the dual plane
    BiPoly tx = (BiPoly::constant(Ypt - 4) - BiPoly::var1()) * BiPoly::constant(quarter);
    c.Arad = BiPoly::var1() - tx * tx;
    // B*(V) = V - ((V - Upt + 4)/4)^2, V is var2
    BiPoly tv = (BiPoly::var2() - BiPoly::constant(Upt - 4)) * BiPoly::constant(quarter);
    c.Brad = BiPoly::var2() - tv * tv;
    // R*(X,V) = (V-X)/2 - (1-a)(Ypt-X)/4 - (1+a)(V-Upt)/4
    c.R = (BiPoly::var2() - BiPoly::var1()) * BiPoly::constant(Rational(1, 2)) -
          (BiPoly::constant(Ypt) - BiPoly::var1()) * BiPoly::constant((1 - frame.a) / 4) -
          (BiPoly::var2() - BiPoly::constant(Upt)) * BiPoly::constant((1 + frame.a) / 4);
    c.H = compose_h(c.Arad, c.Brad, c.R, frame.b);
    c.canonical = c.H.canonical();
    return c;
}

bool dual_membership(const AnchorFrame& frame, const Rational& Ypt, const Rational& Upt,
                     const Rational& X, const Rational& V) {
    CurvePoly dual = build_dual_curve(frame, Ypt, Upt);
    MembershipDetail d = membership_detail(dual, X, V);
    return d.member;
}

}  // namespace tridist
