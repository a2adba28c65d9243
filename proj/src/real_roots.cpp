#include "tridist/real_roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace tridist {

Rational default_root_tolerance() {
    mpz_class d(1);
    mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), 40);
    Rational t(1, d);
    t.canonicalize();
    return t;
}

namespace {

// positive rescale to integer content-1 coefficients; keeps all signs
UPoly normalize_positive(const UPoly& p) {
    if (p.is_zero()) return p;
    UPoly pr = p.primitive();
    if (sgn(p.leading()) < 0 && sgn(pr.leading()) > 0) return -pr;
    return pr;
}

std::vector<UPoly> sturm_chain(const UPoly& fsq) {
    std::vector<UPoly> chain;
    chain.push_back(fsq);
    if (fsq.degree() >= 1) {
        chain.push_back(normalize_positive(fsq.derivative()));
        while (chain.back().degree() >= 1) {
            UPoly rem = chain[chain.size() - 2].divrem(chain.back()).second;
            if (rem.is_zero()) break;
            chain.push_back(normalize_positive(-rem));
        }
    }
    return chain;
}

int sign_variations(const std::vector<UPoly>& chain, const Rational& x) {
    int vars = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

struct Isolator {
    const UPoly& fsq;
    const std::vector<UPoly>& chain;
    const Rational& tol;
    std::vector<RootInterval>& out;

    // number of roots in the open interval (lo, hi)
    int count_open(const Rational& lo, const Rational& hi) const {
        int c = sign_variations(chain, lo) - sign_variations(chain, hi);
        if (sgn(fsq.eval(hi)) == 0) --c;
        return c;
    }

    void isolate_open(const Rational& lo, const Rational& hi) {
        int k = count_open(lo, hi);
        if (k == 0) return;
        if (k == 1 && hi - lo <= tol) {
            out.push_back({lo, hi});
            return;
        }
        Rational mid = (lo + hi) / 2;
        if (sgn(fsq.eval(mid)) == 0) out.push_back({mid, mid});
        isolate_open(lo, mid);
        isolate_open(mid, hi);
    }
};

}  // namespace

std::vector<RootInterval> isolate_real_roots(const UPoly& f, const Rational& lo,
                                             const Rational& hi, const Rational& tol) {
    if (f.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    if (sgn(tol) <= 0) throw std::invalid_argument("isolate_real_roots: tolerance must be positive");
    if (lo > hi) throw std::invalid_argument("isolate_real_roots: empty range");
    std::vector<RootInterval> out;
    UPoly fsq = f.squarefree_part();
    if (fsq.degree() == 0) return out;
    if (sgn(fsq.eval(lo)) == 0) out.push_back({lo, lo});
    if (hi != lo && sgn(fsq.eval(hi)) == 0) out.push_back({hi, hi});
    auto chain = sturm_chain(fsq);
    Isolator iso{fsq, chain, tol, out};
    if (lo < hi) iso.isolate_open(lo, hi);
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

Rational cauchy_root_bound(const UPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("cauchy_root_bound: zero polynomial");
    Rational m(0);
    for (int k = 0; k < f.degree(); ++k) {
        Rational r = rat_abs(f.coeff(k) / f.leading());
        if (r > m) m = r;
    }
    return m + 1;
}

std::vector<RootInterval> isolate_all_real_roots(const UPoly& f, const Rational& tol) {
    Rational b = cauchy_root_bound(f);
    return isolate_real_roots(f, -b, b, tol);
}

int count_real_roots(const UPoly& f, const Rational& lo, const Rational& hi) {
    if (f.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
    UPoly fsq = f.squarefree_part();
    if (fsq.degree() == 0) return 0;
    auto chain = sturm_chain(fsq);
    int c = sign_variations(chain, lo) - sign_variations(chain, hi);
    if (sgn(fsq.eval(lo)) == 0) ++c;
    return c;
}

std::vector<Rational> rational_roots(const UPoly& f, const Rational& tol) {
    if (f.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<Rational> roots;
    UPoly fsq = f.squarefree_part();
    if (fsq.degree() == 0) return roots;
    Rational b = cauchy_root_bound(fsq);
    auto intervals = isolate_real_roots(fsq, -b, b, tol);
    for (const auto& iv : intervals) {
        if (iv.exact()) {
            roots.push_back(iv.lo);
            continue;
        }
        // probe with the simplest rational; refine a few times in case the
        // root is rational but not yet pinned down by the interval
        Rational lo = iv.lo, hi = iv.hi, t = tol;
        for (int round = 0; round < 3; ++round) {
            Rational cand = simplest_rational_in(lo, hi);
            if (sgn(fsq.eval(cand)) == 0) {
                roots.push_back(cand);
                break;
            }
            t = t * t;
            auto finer = isolate_real_roots(fsq, lo, hi, t);
            if (finer.size() != 1) break;
            if (finer[0].exact()) {
                roots.push_back(finer[0].lo);
                break;
            }
            lo = finer[0].lo;
            hi = finer[0].hi;
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace tridist
