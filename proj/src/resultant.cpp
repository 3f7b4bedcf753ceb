// Resultant with respect to y via the subresultant polynomial remainder
// sequence over Q[x]. All interior divisions are exact; the value returned
// is the true resultant (Sylvester determinant), not a scalar multiple.
#include "equising/bipoly.hpp"

namespace equising {

namespace {

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B.
BiPoly prem(const BiPoly& a, const BiPoly& b) {
    const long long db = b.y_degree();
    const XPoly lcb = b.lead_y();
    BiPoly r = a;
    long long e = a.y_degree() - db + 1;
    while (!r.is_zero() && r.y_degree() >= db) {
        const BiPoly t = BiPoly::row(r.y_degree() - db, r.lead_y()) * b;
        r = r * BiPoly(lcb) - t;
        --e;
    }
    if (e > 0) {
        const BiPoly scale(lcb.pow(static_cast<unsigned long>(e)));
        r = r * scale;
    }
    return r;
}

BiPoly divide_rows_exact(const BiPoly& p, const XPoly& d) {
    BiPoly r;
    for (const auto& [j, c] : p.rows()) r.add_row(j, c.divide_exact(d));
    return r;
}

}  // namespace

XPoly resultant_y(const BiPoly& a_in, const BiPoly& b_in) {
    if (a_in.is_zero() || b_in.is_zero()) return XPoly();

    BiPoly a = a_in, b = b_in;
    bool negate = false;
    if (a.y_degree() < b.y_degree()) {
        std::swap(a, b);
        negate = (a.y_degree() % 2 != 0) && (b.y_degree() % 2 != 0);
    }
    if (b.y_degree() == 0) {
        // Res(A, c(x)) = c(x)^deg A; covers two constants (empty matrix -> 1).
        return b.y_coeff(0).pow(static_cast<unsigned long>(a.y_degree()));
    }

    int sign = negate ? -1 : 1;
    XPoly g(Rat(1)), h(Rat(1));
    for (;;) {
        const long long da = a.y_degree(), db = b.y_degree();
        const long long delta = da - db;
        if (da % 2 != 0 && db % 2 != 0) sign = -sign;
        BiPoly r = prem(a, b);
        if (r.is_zero()) return XPoly();  // common factor
        a = b;
        const XPoly divisor = g * h.pow(static_cast<unsigned long>(delta));
        b = divide_rows_exact(r, divisor);
        g = a.lead_y();
        // h = h^(1-delta) g^delta
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = g.pow(static_cast<unsigned long>(delta))
                    .divide_exact(h.pow(static_cast<unsigned long>(delta - 1)));
        if (b.y_degree() == 0) {
            const long long dA = a.y_degree();
            XPoly res = b.y_coeff(0).pow(static_cast<unsigned long>(dA));
            if (dA > 1) res = res.divide_exact(h.pow(static_cast<unsigned long>(dA - 1)));
            if (sign < 0) res = -res;
            return res;
        }
    }
}

}  // namespace equising
