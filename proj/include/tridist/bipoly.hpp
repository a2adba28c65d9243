#ifndef TRIDIST_BIPOLY_HPP
#define TRIDIST_BIPOLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "tridist/upoly.hpp"

namespace tridist {

// Dense bivariate polynomial over Q with a tight (deg1 x deg2) coefficient
// grid. Variable 1 is the "surviving" variable in eliminations; variable 2
// is the main variable for GCD/resultant work. The zero polynomial has an
// empty grid and degrees -1.
class BiPoly {
  public:
    BiPoly() = default;

    static BiPoly zero() { return BiPoly(); }
    static BiPoly constant(const Rational& c);
    // c * v1^i * v2^j
    static BiPoly monomial(const Rational& c, int i, int j);
    static BiPoly var1() { return monomial(Rational(1), 1, 0); }
    static BiPoly var2() { return monomial(Rational(1), 0, 1); }
    // embed a univariate polynomial as a polynomial in v1 (resp. v2)
    static BiPoly from_upoly_var1(const UPoly& p);
    static BiPoly from_upoly_var2(const UPoly& p);
    // grid[i][j] = coefficient of v1^i v2^j
    static BiPoly from_grid(const std::vector<std::vector<Rational>>& grid);

    bool is_zero() const { return c_.empty(); }
    int deg1() const { return d1_; }
    int deg2() const { return d2_; }
    int total_degree() const;
    Rational coeff(int i, int j) const;

    Rational eval(const Rational& x1, const Rational& x2) const;
    // substitute v1 = x1, leaving a univariate polynomial in v2 (and vice versa)
    UPoly eval_var1(const Rational& x1) const;
    UPoly eval_var2(const Rational& x2) const;
    // coefficients with respect to v2: entry j is a UPoly in v1
    std::vector<UPoly> coeffs_in_var2() const;
    UPoly content_var2() const;  // gcd of the v2-coefficients, in v1

    BiPoly derivative_var1() const;
    BiPoly derivative_var2() const;
    BiPoly swap_vars() const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const Rational& s);
    friend BiPoly operator*(const Rational& s, const BiPoly& a) { return a * s; }
    bool operator==(const BiPoly& o) const { return d1_ == o.d1_ && d2_ == o.d2_ && c_ == o.c_; }
    // arbitrary total order (degrees, then coefficients); canonical forms of
    // equal polynomials compare equal, which is what grouping needs
    bool operator<(const BiPoly& o) const {
        if (d1_ != o.d1_) return d1_ < o.d1_;
        if (d2_ != o.d2_) return d2_ < o.d2_;
        return c_ < o.c_;
    }

    // Exact division in Q[v1][v2]; nullopt when the division does not come
    // out exact.
    std::optional<BiPoly> divided_exactly_by(const BiPoly& divisor) const;

    // Canonical form: integer coefficients with content 1 and the leading
    // coefficient under graded-lexicographic order (v1 before v2) positive.
    BiPoly canonical() const;

    std::string str(const std::string& v1 = "Y", const std::string& v2 = "U") const;

  private:
    void trim();
    Rational& at(int i, int j) { return c_[static_cast<std::size_t>(i) * (d2_ + 1) + j]; }
    const Rational& at(int i, int j) const {
        return c_[static_cast<std::size_t>(i) * (d2_ + 1) + j];
    }
    int d1_ = -1, d2_ = -1;
    std::vector<Rational> c_;
};

// Sylvester resultant eliminating v2; f and g must be nonzero. The result is
// a univariate polynomial in v1. Identically zero iff f and g share a factor
// of positive degree in v2.
UPoly resultant_var2(const BiPoly& f, const BiPoly& g);

// Resultant of f(x, z) and g(y, z) eliminating the shared variable z. The
// inputs are given by their z-coefficient lists (entry k = coefficient of
// z^k, a univariate polynomial in x resp. y); the result lives in (x, y).
BiPoly resultant_mixed(const std::vector<UPoly>& f_zcoeffs, const std::vector<UPoly>& g_zcoeffs);

// GCD via subresultant pseudo-remainders in v2 with content handling;
// integer-primitive canonical-sign output. gcd(f, 0) = canonical(f).
BiPoly bipoly_gcd(const BiPoly& f, const BiPoly& g);

}  // namespace tridist

#endif
