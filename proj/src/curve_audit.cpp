#include "tridist/curve_audit.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tridist {

CoincidenceGroups coincidence_groups(const std::vector<CurvePoly>& curves) {
    for (const auto& c : curves)
        if (!(c.frame == curves.front().frame))
            throw std::invalid_argument("coincidence_groups: mixed frames");
    CoincidenceGroups out;
    out.group_of.assign(curves.size(), -1);
    std::map<BiPoly, int> by_canonical;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        auto [it, inserted] =
            by_canonical.try_emplace(curves[i].canonical, static_cast<int>(out.groups.size()));
        if (inserted) out.groups.emplace_back();
        out.group_of[i] = it->second;
        out.groups[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(i));
    }
    for (const auto& g : out.groups) out.max_size = std::max(out.max_size, g.size());
    return out;
}

namespace {

// Cheap certain coprimality check: specialize Y at sample points where both
// leading U-coefficients survive; a nonzero univariate resultant proves that
// Res_U is not identically zero, hence no common factor of positive
// U-degree. Falls back to "unknown" (false) if no sample works.
bool definitely_coprime_in_var2(const BiPoly& f, const BiPoly& g) {
    const UPoly lf = f.coeffs_in_var2().back();
    const UPoly lg = g.coeffs_in_var2().back();
    static const long samples[] = {0, 1, -1, 2, -2, 3, 5, 7};
    for (long s : samples) {
        Rational y0(s);
        if (sgn(lf.eval(y0)) == 0 || sgn(lg.eval(y0)) == 0) continue;
        UPoly fu = f.eval_var1(y0);
        UPoly gu = g.eval_var1(y0);
        if (sgn(upoly_resultant(fu, gu)) != 0) return true;
        return false;  // resultant vanishes at a valid sample: investigate properly
    }
    return false;
}

bool is_mirror_line_factor(const BiPoly& factor, const AnchorFrame& frame) {
    if (sgn(frame.a) != 0 || sgn(frame.b) == 0) return false;
    // the line U = Y, possibly to a power
    BiPoly line = (BiPoly::var1() - BiPoly::var2()).canonical();
    BiPoly rest = factor;
    while (!rest.is_zero() && rest.total_degree() > 0) {
        auto q = rest.divided_exactly_by(line);
        if (!q) return false;
        rest = q->canonical();
    }
    return rest.total_degree() == 0;
}

}  // namespace

std::vector<SharedFactor> overlap_audit(const std::vector<CurvePoly>& curves, Exec exec) {
    for (const auto& c : curves)
        if (!(c.frame == curves.front().frame))
            throw std::invalid_argument("overlap_audit: mixed frames");
    if (curves.empty()) return {};

    // dedupe identical canonical forms; a gcd only depends on the form
    CoincidenceGroups groups = coincidence_groups(curves);
    std::vector<int> rep;  // one curve index per group
    rep.reserve(groups.groups.size());
    for (const auto& g : groups.groups) rep.push_back(g.front());
    const int m = static_cast<int>(rep.size());

    // pairwise gcds over group representatives
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    std::vector<BiPoly> pair_gcd(pairs.size());

    auto work = [&](std::size_t k) {
        const BiPoly& f = curves[static_cast<std::size_t>(rep[static_cast<std::size_t>(pairs[k].first)])].canonical;
        const BiPoly& g = curves[static_cast<std::size_t>(rep[static_cast<std::size_t>(pairs[k].second)])].canonical;
        if (f.is_zero() || g.is_zero()) return;
        if (f.deg2() > 0 && g.deg2() > 0 && definitely_coprime_in_var2(f, g)) {
            // only a pure-Y common factor is still possible
            UPoly c = upoly_gcd(f.content_var2(), g.content_var2());
            if (c.degree() > 0) pair_gcd[k] = BiPoly::from_upoly_var1(c).canonical();
            return;
        }
        BiPoly gcd = bipoly_gcd(f, g);
        if (gcd.total_degree() > 0) pair_gcd[k] = gcd;
    };

    if (exec == Exec::serial) {
        for (std::size_t k = 0; k < pairs.size(); ++k) work(k);
    } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
        for (std::int64_t k = 0; k < static_cast<std::int64_t>(pairs.size()); ++k)
            work(static_cast<std::size_t>(k));
    }

    // collect distinct nonconstant factors, then record full containment
    std::map<BiPoly, SharedFactor> factors;
    for (const auto& g : pair_gcd) {
        if (g.is_zero() || g.total_degree() == 0) continue;
        factors.try_emplace(g, SharedFactor{g, {}, false});
    }
    // exact coincidences: the gcd of two equal curves is the curve itself
    for (const auto& g : groups.groups) {
        if (g.size() < 2) continue;
        const BiPoly& whole = curves[static_cast<std::size_t>(g.front())].canonical;
        if (whole.total_degree() > 0) factors.try_emplace(whole, SharedFactor{whole, {}, false});
    }
    std::vector<SharedFactor> out;
    for (auto& [form, sf] : factors) {
        for (int gi = 0; gi < m; ++gi) {
            const BiPoly& h = curves[static_cast<std::size_t>(rep[static_cast<std::size_t>(gi)])].canonical;
            if (h.divided_exactly_by(form).has_value())
                for (int label : groups.groups[static_cast<std::size_t>(gi)])
                    sf.containing.push_back(label);
        }
        std::sort(sf.containing.begin(), sf.containing.end());
        sf.mirror_line = is_mirror_line_factor(form, curves.front().frame);
        out.push_back(std::move(sf));
    }
    return out;
}

GuardResult intersection_guard(const CurvePoly& c1, const CurvePoly& c2) {
    GuardResult r;
    UPoly res = resultant_var2(c1.canonical, c2.canonical);
    if (res.is_zero()) {
        r.overlap = true;
        return r;
    }
    r.degree = res.degree();
    return r;
}

CollinearLine collinear_diagnostics(const AnchorFrame& frame, const Rational& X,
                                    const Rational& V) {
    if (sgn(frame.b) != 0)
        throw std::invalid_argument("collinear_diagnostics: frame is not collinear (b != 0)");
    CurvePoly c = build_curve(frame, X, V);
    CollinearLine line;
    BiPoly r4 = c.R * c.R;
    r4 = r4 * r4;
    // H = scale * R^4 exactly; with the four-conjugate construction scale = 1
    line.quartic = (c.H == r4);
    line.scale = Rational(1);
    if (!line.quartic) {
        // tolerate an overall constant (e.g. when comparing canonical forms)
        if (!r4.is_zero() && !c.H.is_zero()) {
            Rational ratio = c.H.coeff(c.H.deg1(), c.H.deg2()) / r4.coeff(r4.deg1(), r4.deg2());
            line.quartic = (c.H == r4 * ratio);
            line.scale = ratio;
        }
        if (!line.quartic) throw std::logic_error("collinear frame but H is not a power of R");
    }
    if (frame.covertical_p2()) {
        // R = (V - Y)/2: the vertical line Y = V
        line.vertical = true;
        line.intercept = V;
        return line;
    }
    line.slope = (1 - frame.a) / (1 + frame.a);
    // R = rY*Y + rU*U + r0 with rU = (1+a)/4
    Rational rU = (1 + frame.a) / 4;
    Rational r0 = (V - X) / 2 + (1 - frame.a) * X / 4 - (1 + frame.a) * V / 4;
    line.intercept = -r0 / rU;
    return line;
}

}  // namespace tridist
