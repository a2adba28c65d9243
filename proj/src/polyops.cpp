#include <stdexcept>
#include <vector>

#include "tridist/bipoly.hpp"

namespace tridist {

namespace {

// Fraction-free Gaussian elimination (Bareiss). Ring must provide mul, sub,
// divexact, is_zero and one via the traits below; all divisions come out
// exact in an integral domain.
template <class Ring>
struct RingOps;

template <>
struct RingOps<UPoly> {
    static UPoly one() { return UPoly::constant(Rational(1)); }
    static bool is_zero(const UPoly& x) { return x.is_zero(); }
    static UPoly mul(const UPoly& a, const UPoly& b) { return a * b; }
    static UPoly sub(const UPoly& a, const UPoly& b) { return a - b; }
    static UPoly divexact(const UPoly& a, const UPoly& b) { return a.divexact(b); }
    static UPoly neg(const UPoly& a) { return -a; }
};

template <>
struct RingOps<Rational> {
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static Rational mul(const Rational& a, const Rational& b) { return a * b; }
    static Rational sub(const Rational& a, const Rational& b) { return a - b; }
    static Rational divexact(const Rational& a, const Rational& b) { return a / b; }
    static Rational neg(const Rational& a) { return -a; }
};

template <>
struct RingOps<BiPoly> {
    static BiPoly one() { return BiPoly::constant(Rational(1)); }
    static bool is_zero(const BiPoly& x) { return x.is_zero(); }
    static BiPoly mul(const BiPoly& a, const BiPoly& b) { return a * b; }
    static BiPoly sub(const BiPoly& a, const BiPoly& b) { return a - b; }
    static BiPoly divexact(const BiPoly& a, const BiPoly& b) {
        auto q = a.divided_exactly_by(b);
        if (!q) throw std::logic_error("Bareiss division not exact");
        return *q;
    }
    static BiPoly neg(const BiPoly& a) { return -a; }
};

template <class Ring>
Ring bareiss_det(std::vector<std::vector<Ring>> m) {
    using Ops = RingOps<Ring>;
    const std::size_t n = m.size();
    if (n == 0) return Ops::one();
    Ring prev = Ops::one();
    int sign_flips = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (Ops::is_zero(m[k][k])) {
            std::size_t r = k + 1;
            while (r < n && Ops::is_zero(m[r][k])) ++r;
            if (r == n) return Ring{};  // zero column -> zero determinant
            std::swap(m[k], m[r]);
            ++sign_flips;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Ring t = Ops::sub(Ops::mul(m[k][k], m[i][j]), Ops::mul(m[i][k], m[k][j]));
                m[i][j] = Ops::divexact(t, prev);
            }
            m[i][k] = Ring{};
        }
        prev = m[k][k];
    }
    Ring det = m[n - 1][n - 1];
    return (sign_flips % 2 == 0) ? det : Ops::neg(det);
}

// Sylvester matrix rows for coefficient lists given lowest-degree-first.
template <class Ring>
std::vector<std::vector<Ring>> sylvester(const std::vector<Ring>& f, const std::vector<Ring>& g) {
    const int m = static_cast<int>(f.size()) - 1;
    const int n = static_cast<int>(g.size()) - 1;
    const int sz = m + n;
    std::vector<std::vector<Ring>> s(static_cast<std::size_t>(sz),
                                     std::vector<Ring>(static_cast<std::size_t>(sz)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) s[i][i + k] = f[static_cast<std::size_t>(m - k)];
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) s[n + i][i + k] = g[static_cast<std::size_t>(n - k)];
    return s;
}

UPoly upoly_pow(const UPoly& p, int e) {
    UPoly r = UPoly::constant(Rational(1));
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

}  // namespace

Rational upoly_resultant(const UPoly& f, const UPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("resultant of zero polynomial");
    const int m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) return Rational(1);
    if (m == 0) return rat_pow(f.leading(), static_cast<unsigned>(n));
    if (n == 0) return rat_pow(g.leading(), static_cast<unsigned>(m));
    return bareiss_det(sylvester(f.coeffs(), g.coeffs()));
}

UPoly resultant_var2(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("resultant of zero polynomial");
    const int m = f.deg2(), n = g.deg2();
    if (m == 0 && n == 0) return UPoly::constant(Rational(1));
    if (m == 0) return upoly_pow(f.eval_var2(Rational(0)), n);
    if (n == 0) return upoly_pow(g.eval_var2(Rational(0)), m);
    auto s = sylvester(f.coeffs_in_var2(), g.coeffs_in_var2());
    return bareiss_det(std::move(s));
}

BiPoly resultant_mixed(const std::vector<UPoly>& f_zcoeffs, const std::vector<UPoly>& g_zcoeffs) {
    std::vector<BiPoly> f, g;
    for (const auto& c : f_zcoeffs) f.push_back(BiPoly::from_upoly_var1(c));
    for (const auto& c : g_zcoeffs) g.push_back(BiPoly::from_upoly_var2(c));
    while (!f.empty() && f.back().is_zero()) f.pop_back();
    while (!g.empty() && g.back().is_zero()) g.pop_back();
    if (f.empty() || g.empty())
        throw std::invalid_argument("resultant of zero polynomial");
    const int m = static_cast<int>(f.size()) - 1;
    const int n = static_cast<int>(g.size()) - 1;
    if (m == 0 && n == 0) return BiPoly::constant(Rational(1));
    if (m == 0) {
        BiPoly r = BiPoly::constant(Rational(1));
        for (int i = 0; i < n; ++i) r = r * f[0];
        return r;
    }
    if (n == 0) {
        BiPoly r = BiPoly::constant(Rational(1));
        for (int i = 0; i < m; ++i) r = r * g[0];
        return r;
    }
    return bareiss_det(sylvester(f, g));
}

namespace {

// v2-pseudo-remainder: lc2(g)^(deg2 f - deg2 g + 1) * f reduced modulo g.
BiPoly prem_var2(const BiPoly& f, const BiPoly& g) {
    BiPoly r = f;
    const BiPoly d = BiPoly::from_upoly_var1(g.coeffs_in_var2().back());
    int e = f.deg2() - g.deg2() + 1;
    while (!r.is_zero() && r.deg2() >= g.deg2()) {
        BiPoly t = BiPoly::from_upoly_var1(r.coeffs_in_var2().back()) *
                   BiPoly::monomial(Rational(1), 0, r.deg2() - g.deg2());
        r = r * d - t * g;
        --e;
    }
    for (int i = 0; i < e; ++i) r = r * d;
    return r;
}

BiPoly primitive_var2(const BiPoly& f) {
    if (f.is_zero()) return f;
    UPoly c = f.content_var2();
    auto q = f.divided_exactly_by(BiPoly::from_upoly_var1(c));
    if (!q) throw std::logic_error("content division not exact");
    return q->canonical();
}

}  // namespace

BiPoly bipoly_gcd(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero() && g.is_zero()) return BiPoly();
    if (f.is_zero()) return g.canonical();
    if (g.is_zero()) return f.canonical();
    if (f.deg2() == 0 && g.deg2() == 0)
        return BiPoly::from_upoly_var1(
                   upoly_gcd(f.eval_var2(Rational(0)), g.eval_var2(Rational(0))))
            .canonical();
    if (f.deg2() == 0)
        return BiPoly::from_upoly_var1(upoly_gcd(f.eval_var2(Rational(0)), g.content_var2()))
            .canonical();
    if (g.deg2() == 0)
        return BiPoly::from_upoly_var1(upoly_gcd(g.eval_var2(Rational(0)), f.content_var2()))
            .canonical();

    UPoly cont = upoly_gcd(f.content_var2(), g.content_var2());
    BiPoly a = primitive_var2(f), b = primitive_var2(g);
    if (a.deg2() < b.deg2()) std::swap(a, b);
    // primitive PRS; degrees here are small enough that per-step content
    // removal is cheaper than subresultant bookkeeping
    BiPoly gcd_pp;
    while (true) {
        BiPoly r = prem_var2(a, b);
        if (r.is_zero()) {
            gcd_pp = primitive_var2(b);
            break;
        }
        if (r.deg2() == 0) {
            gcd_pp = BiPoly::constant(Rational(1));
            break;
        }
        a = std::move(b);
        b = primitive_var2(r);
    }
    return (BiPoly::from_upoly_var1(cont) * gcd_pp).canonical();
}

}  // namespace tridist
