// Exact bivariate polynomials over Q. A BiPoly is kept as a sparse map from
// y-exponent to an XPoly coefficient, i.e. an element of Q[x][y]; that view
// matches every algorithm here (y-division, adic expansions, resultants,
// approximate roots).
#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "equising/xpoly.hpp"

namespace equising {

class BiPoly {
public:
    using Rows = std::map<long long, XPoly>;  // y-exponent -> nonzero x-poly

    BiPoly() = default;
    explicit BiPoly(const Rat& c) {
        if (c != 0) rows_[0] = XPoly(c);
    }
    explicit BiPoly(const XPoly& p) {
        if (!p.is_zero()) rows_[0] = p;
    }

    static BiPoly var_x() { return monomial(1, 0, Rat(1)); }
    static BiPoly var_y() { return monomial(0, 1, Rat(1)); }
    static BiPoly monomial(long long xe, long long ye, const Rat& c) {
        BiPoly p;
        if (c != 0) {
            if (ye < 0) throw std::invalid_argument("BiPoly: negative exponent");
            p.rows_[ye] = XPoly::monomial(xe, c);
        }
        return p;
    }
    // c(x) * y^ye
    static BiPoly row(long long ye, const XPoly& c) {
        BiPoly p;
        if (!c.is_zero()) p.rows_[ye] = c;
        return p;
    }

    bool is_zero() const { return rows_.empty(); }

    // y-degree; -1 for the zero polynomial.
    long long y_degree() const { return rows_.empty() ? -1 : rows_.rbegin()->first; }

    XPoly y_coeff(long long j) const {
        auto it = rows_.find(j);
        return it == rows_.end() ? XPoly() : it->second;
    }

    // Leading coefficient as a polynomial in y.
    XPoly lead_y() const { return rows_.empty() ? XPoly() : rows_.rbegin()->second; }

    bool is_monic_in_y() const {
        return !rows_.empty() && rows_.rbegin()->second.is_one();
    }

    const Rows& rows() const { return rows_; }

    Rat coeff(long long xe, long long ye) const { return y_coeff(ye).coeff(xe); }

    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [j, c] : o.rows_) add_row(j, c);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [j, c] : o.rows_) add_row(j, -c);
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator-(const BiPoly& a) {
        BiPoly r;
        for (const auto& [j, c] : a.rows_) r.rows_[j] = -c;
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ja, ca] : a.rows_)
            for (const auto& [jb, cb] : b.rows_) r.add_row(ja + jb, ca * cb);
        return r;
    }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
    friend BiPoly operator*(const BiPoly& a, const Rat& c) {
        BiPoly r;
        if (c != 0)
            for (const auto& [j, v] : a.rows_) r.rows_[j] = v * c;
        return r;
    }

    BiPoly pow(unsigned long e) const {
        BiPoly r(Rat(1)), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b = (e >>= 1) ? b * b : b;
        }
        return r;
    }

    BiPoly derivative_x() const {
        BiPoly r;
        for (const auto& [j, c] : rows_) {
            XPoly d = c.derivative();
            if (!d.is_zero()) r.rows_[j] = d;
        }
        return r;
    }

    BiPoly derivative_y() const {
        BiPoly r;
        for (const auto& [j, c] : rows_)
            if (j > 0) r.rows_[j - 1] = c * Rat(static_cast<long>(j));
        return r;
    }

    // Substitute y -> y + t(x) (Horner in y).
    BiPoly shift_y(const XPoly& t) const;

    void add_row(long long j, const XPoly& c) {
        if (c.is_zero()) return;
        auto it = rows_.find(j);
        if (it == rows_.end()) {
            rows_[j] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) rows_.erase(it);
        }
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.rows_ == b.rows_; }

private:
    Rows rows_;
};

// Division by a monic divisor in y: a = q*g + r with deg_y r < deg_y g.
std::pair<BiPoly, BiPoly> y_divmod(const BiPoly& a, const BiPoly& g);

// Digits of p in powers of a monic q: p = sum digits[t] * q^t, each digit of
// y-degree below deg_y q. digits.size() == 1 + deg_y p / deg_y q slots (may
// end in zero entries trimmed away).
std::vector<BiPoly> q_adic_digits(const BiPoly& p, const BiPoly& q);

// One monomial a(x) * g1^b1 ... gL^bL of a mixed-basis expansion.
struct AdicDigit {
    XPoly coeff;                       // pure-x factor, nonzero
    std::vector<long long> exponents;  // one entry per basis element
    XOrder b0() const { return coeff.x_order(); }
};

struct AdicExpansion {
    std::vector<BiPoly> basis;
    std::vector<AdicDigit> digits;
    BiPoly reconstruct() const;
};

// Expansion of p in the mixed basis g1,...,gL: every digit exponent of g_i
// (i < L) is below deg g_{i+1} / deg g_i, the last exponent is unbounded.
// Requires: basis monic, deg_y basis[0] == 1, strictly increasing y-degrees
// with each dividing the next.
AdicExpansion adic_expand(const BiPoly& p, const std::vector<BiPoly>& basis);

// Coordinate change killing the y^(n-1) coefficient: y -> y - a1(x)/n.
BiPoly normalize_tschirnhausen(const BiPoly& p);

// The d-th approximate root of a monic f (d | deg_y f): the unique monic g of
// y-degree n/d whose g-adic expansion of f has vanishing second coefficient.
BiPoly approximate_root(const BiPoly& f, const Int& d);

// Exact resultant with respect to y (subresultant PRS over Q[x]).
XPoly resultant_y(const BiPoly& a, const BiPoly& b);

}  // namespace equising
