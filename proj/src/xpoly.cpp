#include "equising/xpoly.hpp"

namespace equising {

XPoly XPoly::divide_exact(const XPoly& b) const {
    if (b.is_zero()) throw std::logic_error("XPoly: division by zero");
    XPoly rem = *this, quot;
    const long long db = b.degree();
    const Rat lb = b.leading_coeff();
    while (!rem.is_zero()) {
        const long long da = rem.degree();
        if (da < db) throw std::logic_error("XPoly: division not exact");
        XPoly t = XPoly::monomial(da - db, rem.leading_coeff() / lb);
        quot += t;
        rem -= t * b;
    }
    return quot;
}

}  // namespace equising
