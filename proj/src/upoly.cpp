#include "tridist/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace tridist {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

UPoly UPoly::constant(const Rational& c) {
    UPoly p;
    if (sgn(c) != 0) p.c_.push_back(c);
    return p;
}

UPoly UPoly::monomial(const Rational& c, int k) {
    UPoly p;
    if (sgn(c) != 0) {
        p.c_.assign(static_cast<std::size_t>(k) + 1, Rational(0));
        p.c_.back() = c;
    }
    return p;
}

void UPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational UPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(k)];
}

const Rational& UPoly::leading() const {
    if (c_.empty()) throw std::domain_error("leading() of zero polynomial");
    return c_.back();
}

Rational UPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

UPoly UPoly::derivative() const {
    UPoly d;
    if (c_.size() <= 1) return d;
    d.c_.resize(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        d.c_[k - 1] = c_[k] * Rational(static_cast<long>(k));
    d.trim();
    return d;
}

UPoly UPoly::operator-() const {
    UPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

UPoly operator*(const UPoly& a, const Rational& s) {
    if (sgn(s) == 0) return UPoly();
    UPoly r(a);
    for (auto& x : r.c_) x *= s;
    return r;
}

std::pair<UPoly, UPoly> UPoly::divrem(const UPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    UPoly rem(*this), quot;
    int dd = divisor.degree();
    if (rem.degree() >= dd) quot.c_.assign(static_cast<std::size_t>(rem.degree() - dd) + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= dd) {
        int k = rem.degree() - dd;
        Rational f = rem.leading() / divisor.leading();
        quot.c_[static_cast<std::size_t>(k)] = f;
        for (int i = 0; i <= dd; ++i)
            rem.c_[static_cast<std::size_t>(k + i)] -= f * divisor.c_[static_cast<std::size_t>(i)];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

UPoly UPoly::divexact(const UPoly& divisor) const {
    auto [q, r] = divrem(divisor);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

UPoly UPoly::primitive() const {
    if (is_zero()) return UPoly();
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& x : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    for (const auto& x : c_) {
        mpz_class n = x.get_num() * den_lcm / x.get_den();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    UPoly r = *this * scale;
    if (sgn(r.leading()) < 0) r = -r;
    return r;
}

UPoly UPoly::squarefree_part() const {
    if (is_zero()) throw std::domain_error("squarefree_part of zero polynomial");
    if (degree() == 0) return primitive();
    UPoly g = upoly_gcd(*this, derivative());
    return divexact(g).primitive();
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& a = coeff(k);
        if (sgn(a) == 0) continue;
        if (!first) os << (sgn(a) > 0 ? " + " : " - ");
        else if (sgn(a) < 0) os << "-";
        first = false;
        Rational mag = rat_abs(a);
        if (k == 0 || mag != 1) os << rational_str(mag) << (k > 0 ? "*" : "");
        if (k > 0) {
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
    UPoly f = a.primitive(), g = b.primitive();
    while (!g.is_zero()) {
        UPoly r = f.divrem(g).second;
        f = std::move(g);
        g = r.primitive();
    }
    return f.primitive();
}

}  // namespace tridist
