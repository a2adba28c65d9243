#include "tridist/rational.hpp"

#include <stdexcept>

namespace tridist {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + text);
    if (sgn(q.get_den()) == 0)
        throw std::invalid_argument("zero denominator in rational literal: " + text);
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) {
    return q.get_str();
}

std::optional<Rational> rational_sqrt_exact(const Rational& q) {
    if (sgn(q) < 0) throw std::invalid_argument("rational_sqrt_exact: negative input");
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), q.get_den_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

Rational rat_pow(const Rational& q, unsigned e) {
    Rational r(1);
    Rational base = q;
    while (e > 0) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

namespace {

// Continued-fraction descent: simplest rational in [a, b], 0 <= a < b.
Rational simplest_nonneg(const Rational& a, const Rational& b) {
    // any integer in range wins; take the smallest
    mpz_class ceil_a;
    mpz_cdiv_q(ceil_a.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    if (Rational(ceil_a) <= b) return Rational(ceil_a);
    // no integer inside, so floor(a) == floor(b); recurse on reciprocals
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    Rational fa = a - Rational(fl);
    Rational fb = b - Rational(fl);
    Rational inner = simplest_nonneg(1 / fb, 1 / fa);
    return Rational(fl) + 1 / inner;
}

}  // namespace

Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::invalid_argument("simplest_rational_in: empty interval");
    if (lo == hi) return lo;
    if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rational(0);
    if (sgn(hi) < 0) return -simplest_nonneg(-hi, -lo);
    return simplest_nonneg(lo, hi);
}

}  // namespace tridist
