#ifndef TRIDIST_UPOLY_HPP
#define TRIDIST_UPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "tridist/rational.hpp"

namespace tridist {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// The zero polynomial has an empty coefficient vector; otherwise the
// leading coefficient is nonzero.
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    UPoly(std::initializer_list<Rational> coeffs);

    static UPoly zero() { return UPoly(); }
    static UPoly constant(const Rational& c);
    // c * x^k
    static UPoly monomial(const Rational& c, int k);

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int k) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;
    UPoly derivative() const;

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const Rational& s);
    friend UPoly operator*(const Rational& s, const UPoly& a) { return a * s; }
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    // Euclidean division over Q; divisor must be nonzero.
    std::pair<UPoly, UPoly> divrem(const UPoly& divisor) const;
    // Division that must be exact; throws std::domain_error on a nonzero
    // remainder.
    UPoly divexact(const UPoly& divisor) const;

    // Scales to integer coefficients with content 1 and positive leading
    // coefficient; zero stays zero.
    UPoly primitive() const;
    // f / gcd(f, f')
    UPoly squarefree_part() const;

    std::string str(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Rational> c_;
};

// GCD over Q, returned integer-primitive with positive leading coefficient;
// gcd(f, 0) = primitive(f), gcd(0, 0) = 0.
UPoly upoly_gcd(const UPoly& a, const UPoly& b);

// Scalar Sylvester resultant of two univariate polynomials (both nonzero).
Rational upoly_resultant(const UPoly& f, const UPoly& g);

}  // namespace tridist

#endif
