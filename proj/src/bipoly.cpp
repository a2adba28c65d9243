#include "tridist/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tridist {

BiPoly BiPoly::constant(const Rational& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const Rational& c, int i, int j) {
    BiPoly p;
    if (sgn(c) == 0) return p;
    p.d1_ = i;
    p.d2_ = j;
    p.c_.assign(static_cast<std::size_t>(i + 1) * (j + 1), Rational(0));
    p.at(i, j) = c;
    return p;
}

BiPoly BiPoly::from_upoly_var1(const UPoly& p) {
    BiPoly r;
    if (p.is_zero()) return r;
    r.d1_ = p.degree();
    r.d2_ = 0;
    r.c_.resize(static_cast<std::size_t>(r.d1_) + 1);
    for (int i = 0; i <= r.d1_; ++i) r.at(i, 0) = p.coeff(i);
    return r;
}

BiPoly BiPoly::from_upoly_var2(const UPoly& p) {
    BiPoly r;
    if (p.is_zero()) return r;
    r.d1_ = 0;
    r.d2_ = p.degree();
    r.c_.resize(static_cast<std::size_t>(r.d2_) + 1);
    for (int j = 0; j <= r.d2_; ++j) r.at(0, j) = p.coeff(j);
    return r;
}

BiPoly BiPoly::from_grid(const std::vector<std::vector<Rational>>& grid) {
    BiPoly r;
    if (grid.empty()) return r;
    std::size_t cols = 0;
    for (const auto& row : grid) cols = std::max(cols, row.size());
    if (cols == 0) return r;
    r.d1_ = static_cast<int>(grid.size()) - 1;
    r.d2_ = static_cast<int>(cols) - 1;
    r.c_.assign(grid.size() * cols, Rational(0));
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = 0; j < grid[i].size(); ++j) r.at(static_cast<int>(i), static_cast<int>(j)) = grid[i][j];
    r.trim();
    return r;
}

void BiPoly::trim() {
    if (c_.empty()) {
        d1_ = d2_ = -1;
        return;
    }
    auto row_nonzero = [&](int i) {
        for (int j = 0; j <= d2_; ++j)
            if (sgn(at(i, j)) != 0) return true;
        return false;
    };
    int n1 = d1_;
    while (n1 >= 0 && !row_nonzero(n1)) --n1;
    if (n1 < 0) {
        c_.clear();
        d1_ = d2_ = -1;
        return;
    }
    auto col_nonzero = [&](int j) {
        for (int i = 0; i <= n1; ++i)
            if (sgn(at(i, j)) != 0) return true;
        return false;
    };
    int n2 = d2_;
    while (n2 >= 0 && !col_nonzero(n2)) --n2;
    if (n1 != d1_ || n2 != d2_) {
        std::vector<Rational> nc(static_cast<std::size_t>(n1 + 1) * (n2 + 1));
        for (int i = 0; i <= n1; ++i)
            for (int j = 0; j <= n2; ++j) nc[static_cast<std::size_t>(i) * (n2 + 1) + j] = at(i, j);
        c_ = std::move(nc);
        d1_ = n1;
        d2_ = n2;
    }
}

int BiPoly::total_degree() const {
    int td = -1;
    for (int i = 0; i <= d1_; ++i)
        for (int j = 0; j <= d2_; ++j)
            if (sgn(at(i, j)) != 0) td = std::max(td, i + j);
    return td;
}

Rational BiPoly::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i > d1_ || j > d2_) return Rational(0);
    return at(i, j);
}

Rational BiPoly::eval(const Rational& x1, const Rational& x2) const {
    return eval_var1(x1).eval(x2);
}

UPoly BiPoly::eval_var1(const Rational& x1) const {
    if (is_zero()) return UPoly();
    std::vector<Rational> out(static_cast<std::size_t>(d2_) + 1, Rational(0));
    for (int j = 0; j <= d2_; ++j) {
        Rational acc(0);
        for (int i = d1_; i >= 0; --i) {
            acc *= x1;
            acc += at(i, j);
        }
        out[static_cast<std::size_t>(j)] = acc;
    }
    return UPoly(std::move(out));
}

UPoly BiPoly::eval_var2(const Rational& x2) const {
    if (is_zero()) return UPoly();
    std::vector<Rational> out(static_cast<std::size_t>(d1_) + 1, Rational(0));
    for (int i = 0; i <= d1_; ++i) {
        Rational acc(0);
        for (int j = d2_; j >= 0; --j) {
            acc *= x2;
            acc += at(i, j);
        }
        out[static_cast<std::size_t>(i)] = acc;
    }
    return UPoly(std::move(out));
}

std::vector<UPoly> BiPoly::coeffs_in_var2() const {
    std::vector<UPoly> out;
    if (is_zero()) return out;
    out.reserve(static_cast<std::size_t>(d2_) + 1);
    for (int j = 0; j <= d2_; ++j) {
        std::vector<Rational> col(static_cast<std::size_t>(d1_) + 1);
        for (int i = 0; i <= d1_; ++i) col[static_cast<std::size_t>(i)] = at(i, j);
        out.emplace_back(std::move(col));
    }
    return out;
}

UPoly BiPoly::content_var2() const {
    UPoly g;
    for (const auto& c : coeffs_in_var2()) g = upoly_gcd(g, c);
    return g;
}

BiPoly BiPoly::derivative_var1() const {
    BiPoly r;
    if (d1_ < 1) return r;
    r.d1_ = d1_ - 1;
    r.d2_ = d2_;
    r.c_.assign(static_cast<std::size_t>(r.d1_ + 1) * (r.d2_ + 1), Rational(0));
    for (int i = 1; i <= d1_; ++i)
        for (int j = 0; j <= d2_; ++j) r.at(i - 1, j) = at(i, j) * Rational(i);
    r.trim();
    return r;
}

BiPoly BiPoly::derivative_var2() const {
    BiPoly r;
    if (d2_ < 1) return r;
    r.d1_ = d1_;
    r.d2_ = d2_ - 1;
    r.c_.assign(static_cast<std::size_t>(r.d1_ + 1) * (r.d2_ + 1), Rational(0));
    for (int i = 0; i <= d1_; ++i)
        for (int j = 1; j <= d2_; ++j) r.at(i, j - 1) = at(i, j) * Rational(j);
    r.trim();
    return r;
}

BiPoly BiPoly::swap_vars() const {
    BiPoly r;
    if (is_zero()) return r;
    r.d1_ = d2_;
    r.d2_ = d1_;
    r.c_.assign(c_.size(), Rational(0));
    for (int i = 0; i <= d1_; ++i)
        for (int j = 0; j <= d2_; ++j) r.at(j, i) = at(i, j);
    return r;
}

BiPoly BiPoly::operator-() const {
    BiPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

namespace {

void accumulate(BiPoly& dst, const BiPoly& src, int sign_flip);

}  // namespace

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    accumulate(*this, o, +1);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    accumulate(*this, o, -1);
    return *this;
}

namespace {

void accumulate(BiPoly& dst, const BiPoly& src, int sign_flip) {
    if (src.is_zero()) return;
    std::vector<std::vector<Rational>> grid(
        static_cast<std::size_t>(std::max(dst.deg1(), src.deg1())) + 1,
        std::vector<Rational>(static_cast<std::size_t>(std::max(dst.deg2(), src.deg2())) + 1,
                              Rational(0)));
    for (int i = 0; i <= dst.deg1(); ++i)
        for (int j = 0; j <= dst.deg2(); ++j) grid[i][j] = dst.coeff(i, j);
    for (int i = 0; i <= src.deg1(); ++i)
        for (int j = 0; j <= src.deg2(); ++j)
            grid[i][j] += (sign_flip > 0 ? src.coeff(i, j) : Rational(-src.coeff(i, j)));
    dst = BiPoly::from_grid(grid);
}

}  // namespace

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return BiPoly();
    std::vector<std::vector<Rational>> grid(
        static_cast<std::size_t>(a.deg1() + b.deg1()) + 1,
        std::vector<Rational>(static_cast<std::size_t>(a.deg2() + b.deg2()) + 1, Rational(0)));
    for (int i = 0; i <= a.deg1(); ++i)
        for (int j = 0; j <= a.deg2(); ++j) {
            Rational ca = a.coeff(i, j);
            if (sgn(ca) == 0) continue;
            for (int k = 0; k <= b.deg1(); ++k)
                for (int l = 0; l <= b.deg2(); ++l) {
                    Rational cb = b.coeff(k, l);
                    if (sgn(cb) == 0) continue;
                    grid[i + k][j + l] += ca * cb;
                }
        }
    return BiPoly::from_grid(grid);
}

BiPoly operator*(const BiPoly& a, const Rational& s) {
    if (sgn(s) == 0) return BiPoly();
    BiPoly r(a);
    for (auto& x : r.c_) x *= s;
    return r;
}

std::optional<BiPoly> BiPoly::divided_exactly_by(const BiPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (is_zero()) return BiPoly();
    // divisor independent of v2: divide every v2-coefficient in Q[v1]
    if (divisor.deg2() == 0) {
        UPoly d = divisor.eval_var2(Rational(0));
        std::vector<UPoly> cols = coeffs_in_var2();
        BiPoly out;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            auto [q, r] = cols[j].divrem(d);
            if (!r.is_zero()) return std::nullopt;
            out += BiPoly::from_upoly_var1(q) * BiPoly::monomial(Rational(1), 0, static_cast<int>(j));
        }
        return out;
    }
    BiPoly rem(*this), quot;
    const auto dcols = divisor.coeffs_in_var2();
    const UPoly& dlead = dcols.back();
    while (!rem.is_zero() && rem.deg2() >= divisor.deg2()) {
        auto rcols = rem.coeffs_in_var2();
        auto [qc, rc] = rcols.back().divrem(dlead);
        if (!rc.is_zero()) return std::nullopt;
        BiPoly term = BiPoly::from_upoly_var1(qc) *
                      BiPoly::monomial(Rational(1), 0, rem.deg2() - divisor.deg2());
        quot += term;
        rem -= term * divisor;  // leading v2-coefficient cancels, deg2 drops
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

BiPoly BiPoly::canonical() const {
    if (is_zero()) return BiPoly();
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& x : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    for (const auto& x : c_) {
        mpz_class n = x.get_num() * den_lcm / x.get_den();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    BiPoly r = *this * scale;
    // leading coefficient under graded-lex (total degree, then v1-degree)
    int bi = -1, bj = -1;
    for (int i = 0; i <= r.d1_; ++i)
        for (int j = 0; j <= r.d2_; ++j) {
            if (sgn(r.at(i, j)) == 0) continue;
            if (bi < 0 || i + j > bi + bj || (i + j == bi + bj && i > bi)) {
                bi = i;
                bj = j;
            }
        }
    if (sgn(r.at(bi, bj)) < 0) r = -r;
    return r;
}

std::string BiPoly::str(const std::string& v1, const std::string& v2) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = d1_; i >= 0; --i)
        for (int j = d2_; j >= 0; --j) {
            const Rational& a = at(i, j);
            if (sgn(a) == 0) continue;
            if (!first) os << (sgn(a) > 0 ? " + " : " - ");
            else if (sgn(a) < 0) os << "-";
            first = false;
            Rational mag = rat_abs(a);
            bool has_var = i > 0 || j > 0;
            if (!has_var || mag != 1) os << rational_str(mag);
            if (i > 0) {
                os << (mag != 1 ? "*" : "") << v1;
                if (i > 1) os << "^" << i;
            }
            if (j > 0) {
                os << (i > 0 || mag != 1 ? "*" : "") << v2;
                if (j > 1) os << "^" << j;
            }
        }
    return os.str();
}

}  // namespace tridist
