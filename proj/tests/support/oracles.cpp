#include "support/oracles.hpp"

#include <random>

namespace equising::oracles {

XPoly sylvester_resultant(const BiPoly& a, const BiPoly& b) {
    const long long m = a.y_degree(), n = b.y_degree();
    if (m < 0 || n < 0) return XPoly();
    if (m == 0 && n == 0) return XPoly(Rat(1));
    if (m == 0) return a.y_coeff(0).pow(static_cast<unsigned long>(n));
    if (n == 0) return b.y_coeff(0).pow(static_cast<unsigned long>(m));

    const long long size = m + n;
    std::vector<std::vector<XPoly>> M(size, std::vector<XPoly>(size));
    // n rows of a's coefficients (descending), then m rows of b's.
    for (long long r = 0; r < n; ++r)
        for (long long k = 0; k <= m; ++k) M[r][r + k] = a.y_coeff(m - k);
    for (long long r = 0; r < m; ++r)
        for (long long k = 0; k <= n; ++k) M[n + r][r + k] = b.y_coeff(n - k);

    // Bareiss fraction-free elimination.
    int sign = 1;
    XPoly prev(Rat(1));
    for (long long k = 0; k < size; ++k) {
        if (M[k][k].is_zero()) {
            long long pivot = -1;
            for (long long i = k + 1; i < size; ++i)
                if (!M[i][k].is_zero()) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return XPoly();  // singular
            std::swap(M[k], M[pivot]);
            sign = -sign;
        }
        for (long long i = k + 1; i < size; ++i) {
            for (long long j = k + 1; j < size; ++j)
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]).divide_exact(prev);
            M[i][k] = XPoly();
        }
        prev = M[k][k];
    }
    XPoly det = M[size - 1][size - 1];
    return sign < 0 ? -det : det;
}

bool membership_dp(const std::vector<Int>& gens, const Int& n) {
    if (n < 0) return false;
    const long long cap = to_i64(n);
    std::vector<char> reach(static_cast<std::size_t>(cap) + 1, 0);
    reach[0] = 1;
    for (const Int& g : gens) {
        const long long gv = to_i64(g);
        for (long long v = gv; v <= cap; ++v)
            if (reach[static_cast<std::size_t>(v - gv)]) reach[static_cast<std::size_t>(v)] = 1;
    }
    return reach[static_cast<std::size_t>(cap)] != 0;
}

std::vector<std::vector<Int>> theta_scan(const SemigroupData& s, int k) {
    const Int& dk1 = s.dk(k + 1);
    std::vector<Int> R(k + 1);
    for (int j = 0; j <= k; ++j) R[j] = s.r[j] / dk1;
    const Int target = s.ek(k) * R[k];
    const Int a0_cap = target / R[0];

    std::vector<std::vector<Int>> hits;
    std::vector<Int> a(k);
    auto rec = [&](auto&& self, int j, const Int& acc) -> void {
        if (acc > target) return;
        if (j == k) {
            if (acc == target) hits.push_back(a);
            return;
        }
        for (Int t = 0; t < s.ek(j); ++t) {
            a[j] = t;
            self(self, j + 1, acc + t * R[j]);
        }
    };
    for (Int t0 = 0; t0 <= a0_cap; ++t0) {
        a[0] = t0;
        if (k == 1) {
            if (t0 * R[0] == target) hits.push_back(a);
        } else {
            rec(rec, 1, t0 * R[0]);
        }
    }
    return hits;
}

bool valid_brute(const std::vector<Int>& gens) {
    if (gens.empty()) return false;
    for (const Int& g : gens)
        if (g < 1) return false;
    if (gens.size() == 1) return gens[0] == 1;
    for (std::size_t i = 0; i + 1 < gens.size(); ++i)
        if (!(gens[i] < gens[i + 1])) return false;
    Int g = gens[0];
    for (const Int& v : gens) g = int_gcd(g, v);
    if (g != 1) return false;
    // (*) with d_k = gcd of the first k entries
    std::vector<Int> d{gens[0]};
    for (std::size_t i = 1; i < gens.size(); ++i) d.push_back(int_gcd(d.back(), gens[i]));
    for (std::size_t k = 1; k + 1 < gens.size(); ++k)
        if (!(gens[k + 1] * d[k] > gens[k] * d[k - 1])) return false;
    // minimality via the membership oracle on prefixes
    for (std::size_t k = 1; k < gens.size(); ++k) {
        std::vector<Int> prefix(gens.begin(), gens.begin() + k);
        if (membership_dp(prefix, gens[k])) return false;
    }
    return true;
}

std::vector<std::vector<Int>> random_valid_semigroups(std::uint64_t seed, int count,
                                                      int max_h, long long max_last) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Int>> out;
    int guard = 0;
    while (static_cast<int>(out.size()) < count && guard++ < 100000) {
        const int h = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_h));
        // start from a coprime pair, then extend by (d, r) steps
        std::vector<Int> gens;
        const long a = 2 + static_cast<long>(rng() % 7);
        const long b = a + 1 + static_cast<long>(rng() % 12);
        gens = {Int(a), Int(b)};
        if (int_gcd(gens[0], gens[1]) != 1) continue;
        bool ok = true;
        for (int lvl = 2; lvl <= h && ok; ++lvl) {
            const long d = 2 + static_cast<long>(rng() % 3);
            std::vector<Int> scaled;
            for (const Int& v : gens) scaled.push_back(v * d);
            // r must clear the (*) threshold on the scaled data
            const Int floor_star = scaled.back() * Int(d);
            Int r = floor_star + 1 + Int(static_cast<long>(rng() % 12));
            ok = false;
            for (int tries = 0; tries < 24; ++tries, ++r)
                if (int_gcd(r, Int(d)) == 1) {
                    scaled.push_back(r);
                    ok = true;
                    break;
                }
            if (ok) gens = scaled;
        }
        if (!ok) continue;
        if (gens.back() > int_of(max_last)) continue;
        if (!validate(gens).valid) continue;
        out.push_back(gens);
    }
    return out;
}

BiPoly random_poly(std::uint64_t seed, long long ydeg_cap, long long xdeg_cap,
                   int max_terms) {
    std::mt19937_64 rng(seed);
    BiPoly p;
    const int terms = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
    for (int t = 0; t < terms; ++t) {
        const long long ye = static_cast<long long>(rng() % static_cast<unsigned>(ydeg_cap));
        const long long xe =
            static_cast<long long>(rng() % static_cast<unsigned>(xdeg_cap + 1));
        long c = static_cast<long>(rng() % 19) - 9;
        if (c == 0) c = 1;
        p += BiPoly::monomial(xe, ye, Rat(c));
    }
    return p;
}

}  // namespace equising::oracles
