#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "tridist/curve.hpp"
#include "tridist/curve_audit.hpp"
#include "tridist/rng.hpp"

using namespace tridist;

namespace {

Rational Q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

PlanePoint P(long x, long y) { return {Q(x), Q(y)}; }

const AnchorFrame kUnit{Q(0), Q(1)};

Configuration unit_config(std::vector<PlanePoint> pts) {
    Configuration c;
    c.frame = kUnit;
    c.points = std::move(pts);
    return c;
}

}  // namespace

TEST_CASE("curve construction: radicands, R and spot values of H") {
    CurvePoly c = build_curve(kUnit, Q(1), Q(1));
    // A = 1 - ((Y-5)/4)^2, B = 1 - ((U-5)/4)^2, R = (U-Y)/4
    CHECK(c.Arad.eval(Q(1), Q(0)) == 0);
    CHECK(c.Arad.eval(Q(5), Q(0)) == 1);
    CHECK(c.Brad.eval(Q(0), Q(5)) == 1);
    CHECK(c.Brad.eval(Q(0), Q(1)) == 0);
    CHECK(c.R.eval(Q(1), Q(5)) == 1);
    CHECK(c.H.eval(Q(1), Q(1)) == 0);
    CHECK(c.H.eval(Q(1), Q(5)) == 0);
    CHECK(c.H.eval(Q(1), Q(2)) == Q(9, 64));
    CHECK_THROWS_AS(build_curve(kUnit, Q(-1), Q(1)), std::invalid_argument);
}

TEST_CASE("membership: real points, interior points, non-points") {
    CurvePoly c = build_curve(kUnit, Q(1), Q(1));
    CHECK(membership(c, Q(5), Q(5)));
    CHECK(membership(c, Q(2), Q(2)));  // witness with y = v = sqrt(7)/4 heights
    CHECK_FALSE(membership(c, Q(1), Q(2)));
    auto d = membership_detail(c, Q(1), Q(2));
    CHECK_FALSE(d.h_zero);
    CHECK_FALSE(d.ghost);
}

TEST_CASE("witness reconstruction: symmetric pair") {
    auto ws = reconstruct_witnesses(kUnit, {Q(1), Q(5), Q(5), Q(1)});
    REQUIRE(ws.size() == 2);
    // ((1,1),(-1,1)) and ((1,-1),(-1,-1))
    for (const auto& w : ws) {
        CHECK(w.x == 1);
        CHECK(w.u == -1);
        CHECK(w.y_squared == 1);
        CHECK(w.v_squared == 1);
        CHECK(w.y_sign == w.v_sign);
    }
    CHECK(ws[0].y_sign != ws[1].y_sign);
}

TEST_CASE("witness reconstruction: degenerate single point") {
    auto ws = reconstruct_witnesses(kUnit, {Q(1), Q(1), Q(1), Q(1)});
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].x == 0);
    CHECK(ws[0].u == 0);
    CHECK(ws[0].y_squared == 0);
    CHECK(ws[0].v_squared == 0);
    CHECK(ws[0].y_sign == 0);
    CHECK(ws[0].v_sign == 0);
}

TEST_CASE("witness reconstruction: horizontal pair on the axis") {
    auto ws = reconstruct_witnesses(kUnit, {Q(1), Q(9), Q(9), Q(1)});
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].x == 2);
    CHECK(ws[0].u == -2);
    CHECK(ws[0].y_squared == 0);
    CHECK(ws[0].v_squared == 0);
}

TEST_CASE("witness reconstruction rejects non-members") {
    CHECK_THROWS_AS(reconstruct_witnesses(kUnit, {Q(1), Q(1), Q(2), Q(1)}), std::domain_error);
}

TEST_CASE("geometric soundness: every equal-p3 pair yields a member quadruple") {
    Rng rng(99);
    for (int it = 0; it < 15; ++it) {
        Configuration cfg;
        cfg.frame = AnchorFrame{rng.rational(3, 2), rng.nonzero_rational(3, 2)};
        while (cfg.points.size() < 8) {
            PlanePoint q{rng.rational(6, 2), rng.rational(6, 2)};
            bool bad = q == cfg.frame.p1() || q == cfg.frame.p2() || q == cfg.frame.p3();
            for (const auto& p : cfg.points) bad = bad || p == q;
            if (!bad) cfg.points.push_back(q);
        }
        auto census = build_census(cfg);
        for (const auto& e : enumerate_equal_pairs(census, cfg)) {
            CurvePoly c = build_curve(cfg.frame, e.quad.X, e.quad.V);
            CHECK(membership(c, e.quad.Y, e.quad.U));
            auto ws = reconstruct_witnesses(cfg.frame, e.quad);
            CHECK(ws.size() >= 1);
            CHECK(ws.size() <= 4);
            // the generating pair appears among the witnesses
            const PlanePoint& q1 = cfg.points[static_cast<std::size_t>(e.first)];
            const PlanePoint& q2 = cfg.points[static_cast<std::size_t>(e.second)];
            bool found = false;
            for (const auto& w : ws)
                found = found || (w.x == q1.x && w.u == q2.x && w.y_squared == q1.y * q1.y &&
                                  w.v_squared == q2.y * q2.y && w.y_sign == sgn(q1.y) &&
                                  w.v_sign == sgn(q2.y));
            CHECK(found);
        }
    }
}

TEST_CASE("duality: membership equals dual membership on random 6-tuples") {
    Rng rng(424242);
    int checked = 0;
    while (checked < 1000) {
        AnchorFrame f{rng.rational(4, 3), rng.nonzero_rational(4, 3)};
        Rational X = rat_abs(rng.rational(8, 3));
        Rational V = rat_abs(rng.rational(8, 3));
        Rational Y = rng.rational(10, 3);
        Rational U = rng.rational(10, 3);
        bool prim = membership(build_curve(f, X, V), Y, U);
        bool dual = dual_membership(f, Y, U, X, V);
        CHECK(prim == dual);
        ++checked;
    }
}

TEST_CASE("duality on known incidences") {
    CHECK(dual_membership(kUnit, Q(5), Q(5), Q(1), Q(1)));
    CHECK_FALSE(dual_membership(kUnit, Q(1), Q(2), Q(1), Q(1)));
}

TEST_CASE("degree: exactly 4 in each variable off the degenerate set") {
    Rng rng(5150);
    int checked = 0;
    while (checked < 100) {
        Rational a = rng.rational(4, 3);
        Rational b = rng.nonzero_rational(4, 3);
        if (a == 1 || a == -1) continue;
        Rational X = rat_abs(rng.rational(9, 4));
        Rational V = rat_abs(rng.rational(9, 4));
        CurvePoly c = build_curve(AnchorFrame{a, b}, X, V);
        CHECK(c.H.deg1() == 4);
        CHECK(c.H.deg2() == 4);
        CHECK(c.H.total_degree() <= 4);
        ++checked;
    }
}

TEST_CASE("collinear degeneration: H = R^4 exactly and the line slope") {
    Rng rng(777);
    int checked = 0;
    while (checked < 100) {
        Rational a = rng.rational(4, 3);
        if (a == -1) continue;
        Rational X = rat_abs(rng.rational(9, 4));
        Rational V = rat_abs(rng.rational(9, 4));
        AnchorFrame f{a, Q(0)};
        CurvePoly c = build_curve(f, X, V);
        BiPoly r4 = c.R * c.R;
        r4 = r4 * r4;
        CHECK(c.H == r4);
        auto line = collinear_diagnostics(f, X, V);
        CHECK(line.quartic);
        CHECK_FALSE(line.vertical);
        CHECK(line.slope == (1 - a) / (1 + a));
        ++checked;
    }
}

TEST_CASE("collinear diagnostics: worked lines") {
    AnchorFrame f{Q(0), Q(0)};
    auto line = collinear_diagnostics(f, Q(1), Q(3));
    CHECK(line.slope == 1);
    CHECK(line.intercept == -2);  // U = Y - 2
    auto diag = collinear_diagnostics(f, Q(2), Q(2));
    CHECK(diag.slope == 1);
    CHECK(diag.intercept == 0);  // U = Y
    auto third = collinear_diagnostics(AnchorFrame{Q(1, 3), Q(0)}, Q(1), Q(2));
    CHECK(third.slope == Q(1, 2));
    auto vert = collinear_diagnostics(AnchorFrame{Q(-1), Q(0)}, Q(1), Q(3));
    CHECK(vert.vertical);
    CHECK(vert.intercept == 3);  // the line Y = V
    CHECK_THROWS_AS(collinear_diagnostics(kUnit, Q(1), Q(1)), std::invalid_argument);
}

TEST_CASE("boundedness: members satisfy Y <= (2+sqrt(X))^2 via the radicand") {
    Rng rng(31337);
    for (int it = 0; it < 300; ++it) {
        Rational X = rat_abs(rng.rational(9, 4));
        Rational V = rat_abs(rng.rational(9, 4));
        Rational Y = rng.rational(14, 3);
        Rational U = rng.rational(14, 3);
        AnchorFrame f{rng.rational(3, 2), rng.nonzero_rational(3, 2)};
        CurvePoly c = build_curve(f, X, V);
        if (!membership(c, Y, U)) continue;
        // A >= 0 is equivalent to (Y - X - 4)^2 <= 16 X, the squared form of
        // Y <= (2 + sqrt X)^2 given Y >= X... both directions checked squared
        Rational lhs = (Y - X - 4) * (Y - X - 4);
        CHECK(lhs <= 16 * X);
        Rational lhsU = (U - V - 4) * (U - V - 4);
        CHECK(lhsU <= 16 * V);
    }
}

TEST_CASE("swap symmetry: (Y,U) on gamma_{X,V} iff (V,X) on gamma_{U,Y}") {
    auto cfg = unit_config({P(1, 1), P(-1, 1), P(0, 2), P(2, 0), P(0, 0)});
    auto census = build_census(cfg);
    for (const auto& x : census.D)
        for (const auto& v : census.D) {
            CurvePoly c = build_curve(kUnit, x, v);
            for (const auto& y : census.D)
                for (const auto& u : census.D) {
                    bool direct = membership(c, y, u);
                    bool swapped = membership(build_curve(kUnit, u, y), v, x);
                    CHECK(direct == swapped);
                }
        }
}

TEST_CASE("coincidence groups: collinear frames collapse by X - V") {
    AnchorFrame f{Q(0), Q(0)};
    std::vector<CurvePoly> curves;
    curves.push_back(build_curve(f, Q(1), Q(3)));
    curves.push_back(build_curve(f, Q(2), Q(4)));
    curves.push_back(build_curve(f, Q(5), Q(7)));
    auto groups = coincidence_groups(curves);
    CHECK(groups.groups.size() == 1);
    CHECK(groups.max_size == 3);
}

TEST_CASE("coincidence groups: distinct noncollinear curves stay distinct") {
    std::vector<CurvePoly> curves;
    curves.push_back(build_curve(kUnit, Q(1), Q(1)));
    curves.push_back(build_curve(kUnit, Q(1), Q(5)));
    auto groups = coincidence_groups(curves);
    CHECK(groups.groups.size() == 2);
    CHECK(groups.max_size == 1);

    std::vector<CurvePoly> single;
    single.push_back(build_curve(kUnit, Q(2), Q(3)));
    auto g1 = coincidence_groups(single);
    CHECK(g1.groups.size() == 1);
    CHECK(g1.max_size == 1);
}

TEST_CASE("coincidence groups reject mixed frames") {
    std::vector<CurvePoly> curves;
    curves.push_back(build_curve(kUnit, Q(1), Q(1)));
    curves.push_back(build_curve(AnchorFrame{Q(1, 2), Q(1)}, Q(1), Q(1)));
    CHECK_THROWS_AS(coincidence_groups(curves), std::invalid_argument);
}

TEST_CASE("overlap audit: duplicated label shares its whole polynomial") {
    std::vector<CurvePoly> curves;
    curves.push_back(build_curve(kUnit, Q(1), Q(5)));
    curves.push_back(build_curve(kUnit, Q(1), Q(5)));
    curves.push_back(build_curve(kUnit, Q(5), Q(1)));
    auto audit = overlap_audit(curves);
    bool whole = false;
    for (const auto& sf : audit) {
        if (sf.factor == curves[0].canonical) {
            whole = true;
            CHECK(sf.containing == std::vector<int>{0, 1});
            CHECK(std::find(sf.containing.begin(), sf.containing.end(), 2) ==
                  sf.containing.end());
        }
    }
    CHECK(whole);
}

TEST_CASE("overlap audit: collinear curves with equal X - V share the line") {
    AnchorFrame f{Q(0), Q(0)};
    std::vector<CurvePoly> curves;
    curves.push_back(build_curve(f, Q(1), Q(3)));   // X - V = -2
    curves.push_back(build_curve(f, Q(2), Q(4)));   // X - V = -2
    curves.push_back(build_curve(f, Q(1), Q(2)));   // X - V = -1
    auto audit = overlap_audit(curves);
    bool found = false;
    for (const auto& sf : audit) {
        std::vector<int> expect{0, 1};
        if (sf.containing == expect) found = true;
    }
    CHECK(found);
}

TEST_CASE("overlap audit on the kappa^2 = 4 suite over D = {1,5}") {
    std::vector<CurvePoly> curves;
    for (long x : {1, 5})
        for (long v : {1, 5}) curves.push_back(build_curve(kUnit, Q(x), Q(v)));
    auto audit = overlap_audit(curves);
    // frozen by the development-time audit: the only shared factor is the
    // a = 0 mirror line (U - Y)^2, a component of both diagonal curves
    REQUIRE(audit.size() == 1);
    CHECK(audit[0].mirror_line);
    CHECK(audit[0].containing == std::vector<int>{0, 3});
    CHECK(audit[0].factor.total_degree() == 2);
    for (const auto& sf : audit) CHECK(sf.containing.size() <= 4);
    // serial and parallel audits agree
    auto serial = overlap_audit(curves, Exec::serial);
    REQUIRE(serial.size() == audit.size());
    CHECK(serial[0].factor == audit[0].factor);
    CHECK(serial[0].containing == audit[0].containing);
}

TEST_CASE("intersection guard: identical curves overlap, distinct ones obey Bezout") {
    CurvePoly c11 = build_curve(kUnit, Q(1), Q(1));
    CurvePoly c15 = build_curve(kUnit, Q(1), Q(5));
    auto same = intersection_guard(c11, c11);
    CHECK(same.overlap);
    auto guard = intersection_guard(c11, c15);
    CHECK_FALSE(guard.overlap);
    CHECK(guard.degree >= 0);
    CHECK(guard.degree <= 16);

    Rng rng(8080);
    for (int it = 0; it < 10; ++it) {
        AnchorFrame f{rng.rational(3, 2), rng.nonzero_rational(3, 2)};
        CurvePoly a = build_curve(f, rat_abs(rng.rational(7, 2)), rat_abs(rng.rational(7, 2)));
        CurvePoly b = build_curve(f, rat_abs(rng.rational(7, 2)), rat_abs(rng.rational(7, 2)));
        if (a.canonical == b.canonical) continue;
        auto g = intersection_guard(a, b);
        if (!g.overlap) CHECK(g.degree <= 16);
    }
}
