#include "tridist/recovery.hpp"

#include <stdexcept>

namespace tridist {

namespace {

// Arithmetic in Q(sqrt(d)) for a fixed nonnegative rational d. Values are
// p + q*sqrt(d); signs are decided exactly, so bisection on these values
// never needs floating point.
struct QuadExt {
    Rational p, q, d;

    static QuadExt of(const Rational& r, const Rational& d) { return {r, Rational(0), d}; }
    static QuadExt root(const Rational& d) { return {Rational(0), Rational(1), d}; }

    QuadExt operator+(const QuadExt& o) const { return {p + o.p, q + o.q, d}; }
    QuadExt operator-(const QuadExt& o) const { return {p - o.p, q - o.q, d}; }
    QuadExt operator*(const QuadExt& o) const {
        return {p * o.p + q * o.q * d, p * o.q + q * o.p, d};
    }
    QuadExt operator*(const Rational& s) const { return {p * s, q * s, d}; }
    QuadExt operator-() const { return {-p, -q, d}; }

    bool is_rational() const { return sgn(q) == 0 || sgn(d) == 0; }
    Rational rational_value() const { return p; }

    int sign() const {
        if (sgn(q) == 0 || sgn(d) == 0) return sgn(p);
        if (sgn(p) == 0) return sgn(q);
        if (sgn(p) == sgn(q)) return sgn(p);
        Rational cmp = p * p - q * q * d;  // |p| vs |q| sqrt(d)
        if (sgn(cmp) == 0) return 0;
        return sgn(cmp) > 0 ? sgn(p) : sgn(q);
    }
};

// upper bound for |v|, cheap and rational
Rational magnitude_bound(const QuadExt& v) {
    Rational b = rat_abs(v.p);
    if (sgn(v.q) != 0 && sgn(v.d) > 0) {
        // sqrt(d) <= (isqrt(num*den) + 1)/den
        mpz_class nd = v.d.get_num() * v.d.get_den(), s;
        mpz_sqrt(s.get_mpz_t(), nd.get_mpz_t());
        Rational ub(s + 1, v.d.get_den());
        ub.canonicalize();
        b += rat_abs(v.q) * ub;
    }
    return b;
}

// isolating interval of width <= tol around a Q(sqrt(d)) value
RootValue pin_down(const QuadExt& v, const Rational& tol) {
    if (v.is_rational()) return {true, v.rational_value(), Rational(0), Rational(0)};
    Rational lo = -magnitude_bound(v), hi = magnitude_bound(v);
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        int s = (v - QuadExt::of(mid, v.d)).sign();
        if (s == 0) return {true, mid, Rational(0), Rational(0)};
        if (s > 0) lo = mid;
        else hi = mid;
    }
    return {false, Rational(0), lo, hi};
}

struct ExtQuadratic {
    QuadExt c2, c1, c0;  // c2 x^2 + c1 x + c0, coefficients in one Q(sqrt(d))
    QuadExt eval(const Rational& x) const {
        QuadExt xx = QuadExt::of(x, c2.d);
        return (c2 * xx + c1) * xx + c0;
    }
};

// real roots of an ExtQuadratic as RootValues (exact where rational)
std::vector<RootValue> solve_ext_quadratic(const ExtQuadratic& g, const Rational& tol) {
    std::vector<RootValue> out;
    if (g.c2.sign() == 0) {
        if (g.c1.sign() == 0) return out;  // constant: no isolated roots
        // linear: root = -c0/c1; rational only when both parts are
        if (g.c1.is_rational() && g.c0.is_rational()) {
            out.push_back({true, -g.c0.rational_value() / g.c1.rational_value(), Rational(0),
                           Rational(0)});
            return out;
        }
        // bisect on the exact sign of c1 x + c0; find a bracket by doubling
        Rational lo(-1), hi(1);
        auto sgn_at = [&](const Rational& x) { return (g.c1 * QuadExt::of(x, g.c1.d) + g.c0).sign(); };
        int il = sgn_at(lo), ih = sgn_at(hi);
        int guard = 0;
        while (il == ih && guard < 4096) {
            lo *= 2;
            hi *= 2;
            il = sgn_at(lo);
            ih = sgn_at(hi);
            ++guard;
        }
        if (il == ih) return out;
        while (hi - lo > tol) {
            Rational mid = (lo + hi) / 2;
            int sm = sgn_at(mid);
            if (sm == 0) {
                out.push_back({true, mid, Rational(0), Rational(0)});
                return out;
            }
            if (sm == il) lo = mid;
            else hi = mid;
        }
        out.push_back({false, Rational(0), lo, hi});
        return out;
    }
    QuadExt disc = g.c1 * g.c1 - g.c2 * g.c0 * Rational(4);
    int sd = disc.sign();
    if (sd < 0) return out;
    // rational-coefficient fast path
    if (g.c2.is_rational() && g.c1.is_rational() && g.c0.is_rational()) {
        Rational a = g.c2.rational_value(), b = g.c1.rational_value(), c = g.c0.rational_value();
        Rational dr = b * b - 4 * a * c;
        if (sd == 0) {
            out.push_back({true, -b / (2 * a), Rational(0), Rational(0)});
            return out;
        }
        if (auto sq = rational_sqrt_exact(dr)) {
            Rational r1 = (-b - *sq) / (2 * a), r2 = (-b + *sq) / (2 * a);
            if (r1 > r2) std::swap(r1, r2);
            out.push_back({true, r1, Rational(0), Rational(0)});
            out.push_back({true, r2, Rational(0), Rational(0)});
            return out;
        }
        // irrational pair over a fresh extension sqrt(dr)
        QuadExt mid{-b / (2 * a), Rational(0), dr};
        QuadExt half{Rational(0), Rational(1, 2) / a, dr};
        QuadExt r1 = mid - half, r2 = mid + half;
        if (sgn(half.q) < 0) std::swap(r1, r2);
        out.push_back(pin_down(r1, tol));
        out.push_back(pin_down(r2, tol));
        return out;
    }
    if (sd == 0) {
        // vertex = -c1/(2 c2); invert c2 via its conjugate
        QuadExt c2c{g.c2.p, -g.c2.q, g.c2.d};
        Rational n = (g.c2 * c2c).rational_value();
        QuadExt root = -g.c1 * Rational(1, 2) * (c2c * (Rational(1) / n));
        out.push_back(pin_down(root, tol));
        return out;
    }
    // two distinct real roots; bracket them with exact sign bisection.
    // downward or upward parabola: g(x) has the sign of c2 outside the roots
    // and the opposite sign strictly between them.
    int lead = g.c2.sign();
    // find a rational point strictly between the roots: near the vertex
    QuadExt c2c{g.c2.p, -g.c2.q, g.c2.d};
    Rational n = (g.c2 * c2c).rational_value();
    QuadExt inv = c2c * (Rational(1) / n);
    QuadExt vertex = -g.c1 * Rational(1, 2) * inv;
    RootValue vx = pin_down(vertex, Rational(1, 1024));
    Rational between = vx.exact ? vx.value : (vx.lo + vx.hi) / 2;
    {
        // refine until the sign at the probe flips away from the leading sign
        Rational width(1, 1024);
        int guard = 0;
        while (g.eval(between).sign() == lead && guard < 200) {
            width = width / 16;
            RootValue finer = pin_down(vertex, width);
            between = finer.exact ? finer.value : (finer.lo + finer.hi) / 2;
            ++guard;
            if (finer.exact) break;
        }
        if (g.eval(between).sign() == lead) {
            // vertex is rational and is itself the midpoint between roots
            // with g(vertex) opposite in sign; reaching here means numeric
            // trouble that exact arithmetic should preclude
            throw std::logic_error("failed to separate quadratic roots");
        }
    }
    Rational big = magnitude_bound(g.c0) + magnitude_bound(g.c1) + magnitude_bound(g.c2) + 1;
    Rational blo = between, bhi = between;
    while (g.eval(blo).sign() != lead) blo -= big;
    while (g.eval(bhi).sign() != lead) bhi += big;
    auto bisect = [&](Rational lo, Rational hi) -> RootValue {
        int sl = g.eval(lo).sign();
        while (hi - lo > tol) {
            Rational mid = (lo + hi) / 2;
            int sm = g.eval(mid).sign();
            if (sm == 0) return {true, mid, Rational(0), Rational(0)};
            if (sm == sl) lo = mid;
            else hi = mid;
        }
        return {false, Rational(0), lo, hi};
    };
    out.push_back(bisect(blo, between));
    out.push_back(bisect(between, bhi));
    return out;
}

}  // namespace

std::vector<RecoveredPair> recover_from_extremal(const AnchorFrame& frame, const Rational& Y0,
                                                 const Rational& U0, const Rational& tol) {
    std::vector<RecoveredPair> out;
    const Rational a = frame.a, b = frame.b;

    struct VCand {
        QuadExt v;
        QuadExt sqrtB;  // principal square root of B(V) in the same field
    };
    std::vector<VCand> vs;

    if (frame.covertical_p2()) {
        // a = -1: the single branch V = U0 - 4
        Rational V = U0 - 4;
        Rational Bval = V;  // B(V) = V - (V-U0+4)^2/4 = V
        if (sgn(Bval) >= 0) {
            if (auto sq = rational_sqrt_exact(Bval)) {
                vs.push_back({QuadExt::of(V, Rational(0)), QuadExt::of(*sq, Rational(0))});
            } else {
                vs.push_back({QuadExt::of(V, Bval), QuadExt::root(Bval)});
            }
        }
    } else {
        Rational beta = (b / (1 + a)) * (b / (1 + a));
        Rational lead = Rational(1, 4) + beta;
        Rational w0 = U0 - 4;
        // (1/4 + beta)(V - w0)^2 - V = 0
        Rational c2 = lead, c1 = -2 * lead * w0 - 1, c0 = lead * w0 * w0;
        Rational disc = c1 * c1 - 4 * c2 * c0;
        Rational sqb = rat_abs(b / (1 + a));  // sqrt(beta)
        auto push_v = [&](const QuadExt& V) {
            // B(V) = beta (V - w0)^2, so sqrt(B) = sqrt(beta) |V - w0|
            QuadExt w = V - QuadExt::of(w0, V.d);
            QuadExt absw = w.sign() >= 0 ? w : -w;
            vs.push_back({V, absw * sqb});
        };
        if (sgn(disc) == 0) {
            push_v(QuadExt::of(-c1 / (2 * c2), Rational(0)));
        } else if (sgn(disc) > 0) {
            if (auto sq = rational_sqrt_exact(disc)) {
                push_v(QuadExt::of((-c1 - *sq) / (2 * c2), Rational(0)));
                push_v(QuadExt::of((-c1 + *sq) / (2 * c2), Rational(0)));
            } else {
                QuadExt mid = QuadExt::of(-c1 / (2 * c2), disc);
                QuadExt half = QuadExt::root(disc) * (Rational(1) / (2 * c2));
                push_v(mid - half);
                push_v(mid + half);
            }
        }
        // disc < 0: no real V, no candidates
    }

    for (const auto& vc : vs) {
        const Rational d = vc.v.d;
        auto lift = [&](const Rational& r) { return QuadExt::of(r, d); };
        // delta = (1-a)Y0/4 + (1+a)(V-U0)/4 - V/2 + b sqrt(B)
        QuadExt delta = lift((1 - a) * Y0 / 4) + (vc.v - lift(U0)) * ((1 + a) / 4) -
                        vc.v * Rational(1, 2) + vc.sqrtB * b;
        Rational alpha = (1 + a) / 4;
        // b^2 A(X) = (alpha X + delta)^2 with A(X) = X - (Y0 - X - 4)^2/16
        Rational b2 = b * b;
        Rational k = Y0 - 4;
        // A(X) = -X^2/16 + (1 + k/8) X - k^2/16
        ExtQuadratic g;
        g.c2 = lift(-b2 / 16 - alpha * alpha);
        g.c1 = lift(b2 * (1 + k / 8)) - delta * (2 * alpha);
        g.c0 = lift(-b2 * k * k / 16) - delta * delta;
        for (const auto& xroot : solve_ext_quadratic(g, tol)) {
            RecoveredPair rp;
            rp.X = xroot;
            rp.V = pin_down(vc.v, tol);
            out.push_back(rp);
            if (out.size() >= 4) return out;
        }
    }
    return out;
}

ExtremalReport locate_extremal(const CurvePoly& curve, const Rational& tol) {
    ExtremalReport rep;
    const BiPoly& H = curve.H;
    BiPoly HU = H.derivative_var2();
    if (HU.is_zero()) {
        rep.degenerate = true;
        return rep;
    }
    BiPoly W = bipoly_gcd(H, HU);
    BiPoly Hs = H;
    if (W.total_degree() > 0) {
        rep.repeated_factor = true;
        auto q = H.divided_exactly_by(W);
        if (!q) throw std::logic_error("gcd does not divide H");
        Hs = q->canonical();
    }
    if (Hs.deg2() == 0) return rep;  // nothing extremal in U after reduction
    BiPoly HsU = Hs.derivative_var2();
    UPoly S = resultant_var2(Hs, HsU);
    if (S.is_zero()) throw std::logic_error("squarefree reduction failed");
    auto yroots = rational_roots(S, tol);
    rep.irrational_y_roots =
        static_cast<int>(isolate_all_real_roots(S, tol).size() - yroots.size());
    for (const auto& y0 : yroots) {
        UPoly h0 = H.eval_var1(y0);
        UPoly hu0 = HU.eval_var1(y0);
        if (h0.is_zero() || hu0.is_zero()) continue;  // whole slice degenerate
        UPoly g = upoly_gcd(h0, hu0);
        if (g.degree() < 1) continue;
        auto uroots = rational_roots(g, tol);
        rep.irrational_u_roots +=
            static_cast<int>(isolate_all_real_roots(g, tol).size() - uroots.size());
        for (const auto& u0 : uroots) {
            // verified exactly
            if (sgn(H.eval(y0, u0)) == 0 && sgn(HU.eval(y0, u0)) == 0)
                rep.rational_points.push_back({y0, u0});
        }
    }
    return rep;
}

}  // namespace tridist
