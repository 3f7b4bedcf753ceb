#include "equising/bipoly.hpp"

namespace equising {

BiPoly BiPoly::shift_y(const XPoly& t) const {
    if (t.is_zero()) return *this;
    // Horner: p(x, y+t) = (...((c_n)(y+t) + c_{n-1})(y+t) + ...) + c_0
    const BiPoly base = var_y() + BiPoly(t);
    BiPoly res;
    long long prev = -1;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        const auto& [j, c] = *it;
        if (prev >= 0)
            for (long long s = 0; s < prev - j; ++s) res *= base;
        res += BiPoly(c);
        prev = j;
    }
    for (long long s = 0; s < prev; ++s) res *= base;
    return res;
}

std::pair<BiPoly, BiPoly> y_divmod(const BiPoly& a, const BiPoly& g) {
    if (g.y_degree() < 1) throw std::invalid_argument("y_divmod: divisor constant in y");
    if (!g.is_monic_in_y()) throw std::invalid_argument("y_divmod: divisor not monic in y");
    const long long dg = g.y_degree();
    BiPoly q, r = a;
    while (!r.is_zero() && r.y_degree() >= dg) {
        BiPoly t = BiPoly::row(r.y_degree() - dg, r.lead_y());
        q += t;
        r -= t * g;
    }
    return {q, r};
}

std::vector<BiPoly> q_adic_digits(const BiPoly& p, const BiPoly& q) {
    std::vector<BiPoly> digits;
    BiPoly rest = p;
    while (!rest.is_zero()) {
        auto [quot, rem] = y_divmod(rest, q);
        digits.push_back(rem);
        rest = quot;
    }
    return digits;
}

BiPoly AdicExpansion::reconstruct() const {
    BiPoly sum;
    for (const auto& dig : digits) {
        BiPoly term(dig.coeff);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (dig.exponents[i] > 0)
                term *= basis[i].pow(static_cast<unsigned long>(dig.exponents[i]));
        sum += term;
    }
    return sum;
}

namespace {

void expand_level(const BiPoly& p, const std::vector<BiPoly>& basis, std::size_t level,
                  std::vector<long long>& exps, std::vector<AdicDigit>& out) {
    if (level == 0) {
        if (p.y_degree() > 0) throw std::logic_error("adic_expand: residue not pure in x");
        if (p.is_zero()) return;
        AdicDigit d;
        d.coeff = p.y_coeff(0);
        d.exponents.assign(exps.rbegin(), exps.rend());
        out.push_back(std::move(d));
        return;
    }
    const auto digits = q_adic_digits(p, basis[level - 1]);
    for (std::size_t t = 0; t < digits.size(); ++t) {
        if (digits[t].is_zero()) continue;
        exps.push_back(static_cast<long long>(t));
        expand_level(digits[t], basis, level - 1, exps, out);
        exps.pop_back();
    }
}

}  // namespace

AdicExpansion adic_expand(const BiPoly& p, const std::vector<BiPoly>& basis) {
    if (basis.empty()) throw std::invalid_argument("adic_expand: empty basis");
    long long prev = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const BiPoly& g = basis[i];
        if (!g.is_monic_in_y()) throw std::invalid_argument("adic_expand: basis not monic in y");
        const long long dg = g.y_degree();
        if (i == 0) {
            if (dg != 1) throw std::invalid_argument("adic_expand: first basis degree must be 1");
        } else if (dg <= prev || dg % prev != 0) {
            throw std::invalid_argument("adic_expand: basis degree pattern violated");
        }
        prev = dg;
    }
    AdicExpansion exp;
    exp.basis = basis;
    std::vector<long long> exps;
    expand_level(p, basis, basis.size(), exps, exp.digits);
    // Exponent bounds b_i < deg g_{i+1} / deg g_i hold by construction of the
    // division chain; assert them to catch degree-pattern slips.
    for (const auto& dig : exp.digits)
        for (std::size_t i = 0; i + 1 < basis.size(); ++i) {
            const long long bound = basis[i + 1].y_degree() / basis[i].y_degree();
            if (dig.exponents[i] >= bound)
                throw std::logic_error("adic_expand: digit exponent out of range");
        }
    return exp;
}

BiPoly normalize_tschirnhausen(const BiPoly& p) {
    if (!p.is_monic_in_y()) throw std::invalid_argument("normalize_tschirnhausen: not monic");
    const long long n = p.y_degree();
    if (n == 0) return p;
    const XPoly a1 = p.y_coeff(n - 1);
    if (a1.is_zero()) return p;
    const XPoly shift = a1 * Rat(Int(-1), int_of(n));
    BiPoly q = p.shift_y(shift);
    if (!q.y_coeff(n - 1).is_zero())
        throw std::logic_error("normalize_tschirnhausen: shift failed");
    return q;
}

BiPoly approximate_root(const BiPoly& f, const Int& d) {
    if (!f.is_monic_in_y()) throw std::invalid_argument("approximate_root: f not monic");
    const long long n = f.y_degree();
    if (d <= 0 || !d.fits_slong_p() || n % d.get_si() != 0)
        throw std::invalid_argument("approximate_root: d does not divide deg_y f");
    const long long dd = d.get_si();
    const long long m = n / dd;  // degree of the root
    if (dd == 1) return f;

    BiPoly g = BiPoly::var_y().pow(static_cast<unsigned long>(m));
    long long prev_deg = m;  // deg_y alpha_1 strictly decreases; m bounds it
    for (long long iter = 0; iter <= m + 1; ++iter) {
        // f = q * g^(d-1) + rem with q = g + alpha_1
        const BiPoly gpow = g.pow(static_cast<unsigned long>(dd - 1));
        BiPoly alpha1 = y_divmod(f, gpow).first - g;
        if (alpha1.is_zero()) return g;
        const long long da = alpha1.y_degree();
        if (da >= prev_deg) throw std::logic_error("approximate_root: no degree progress");
        prev_deg = da;
        g += alpha1 * Rat(Int(1), d);
    }
    throw std::logic_error("approximate_root: did not converge");
}

}  // namespace equising
