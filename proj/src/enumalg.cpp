#include "equising/enumalg.hpp"

#include <algorithm>
#include <map>

namespace equising {

namespace {

Int pow2(int e) { return Int(1) << e; }

// Exact test 2(p+q)d - q <= sqrt(q^2 + 4 mu (p+q)) without floating point.
bool d_below_root_bound(const Int& d, const Rat& p, const Int& q, const Int& mu) {
    const Rat pq = p + Rat(q);
    const Rat lhs = Rat(2) * pq * Rat(d) - Rat(q);
    const Rat rhs = Rat(q) * Rat(q) + Rat(4) * Rat(mu) * pq;
    if (lhs <= 0) return true;
    return lhs * lhs <= rhs;
}

}  // namespace

std::vector<int> length_range(const Int& m) {
    std::vector<int> H;
    if (m < 0) return H;
    // 2^h <= (9 + sqrt(1+60m))/10  <=>  (10*2^h - 9)^2 <= 1 + 60m
    const Int N = 1 + 60 * m;
    for (int h = 1;; ++h) {
        const Int lhs = 10 * pow2(h) - 9;
        if (lhs * lhs > N) break;
        H.push_back(h);
    }
    return H;
}

Rat milnor_lower_bound(int h) {
    return Rat(5, 3) * Rat(pow2(2 * h)) - Rat(3) * Rat(pow2(h)) + Rat(4, 3);
}

Rat last_generator_lower_bound(int h) {
    return Rat(5, 3) * Rat(pow2(2 * h - 1)) - Rat(1, 3);
}

Rat EnumBounds::window_lo(const Int& d) const {
    return Rat(mu) / Rat(d) + Rat(3 * pow2(h - 1) - 1);
}

Rat EnumBounds::window_hi(const Int& d) const {
    return Rat(mu) / Rat(d - 1) - p * Rat(d) / Rat(d - 1) + Rat(1);
}

std::optional<std::pair<Int, Int>> EnumBounds::window(const Int& d) const {
    const Int lo = rat_ceil(window_lo(d));
    const Int hi = rat_floor(window_hi(d));
    if (lo > hi) return std::nullopt;
    return std::make_pair(lo, hi);
}

EnumBounds enum_bounds(const Int& mu, int h) {
    if (h < 2) throw std::invalid_argument("enum_bounds: h must be >= 2");
    EnumBounds b;
    b.h = h;
    b.mu = mu;
    b.p = Rat(5, 3) * Rat(pow2(2 * h - 2)) - Rat(3 * pow2(h - 1)) + Rat(4, 3);
    b.q = 3 * pow2(h - 1) - 2;
    b.B_lower = milnor_lower_bound(h);
    for (Int d = 2; d_below_root_bound(d, b.p, b.q, mu); ++d) b.D.push_back(d);
    return b;
}

namespace {

std::vector<Int> divisors(const Int& m) {
    std::vector<Int> out;
    for (Int u = 1; u * u <= m; ++u)
        if (m % u == 0) {
            out.push_back(u);
            if (u * u != m) out.push_back(m / u);
        }
    std::sort(out.begin(), out.end());
    return out;
}

struct LexLess {
    bool operator()(const std::vector<Int>& a, const std::vector<Int>& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

using Memo = std::map<std::pair<Int, int>, std::vector<std::vector<Int>>>;

// All valid characteristic generator sequences of length exactly h whose
// conductor is mu.
std::vector<std::vector<Int>> enum_level(const Int& mu, int h, EnumStats* stats, Memo& memo,
                                         detail::LoopOrder order) {
    const auto key = std::make_pair(mu, h);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    std::vector<std::vector<Int>> out;
    if (h == 1) {
        // mu = (r_0 - 1)(r_1 - 1) via divisor factorization.
        for (const Int& u : divisors(mu)) {
            const Int a = u + 1, b = mu / u + 1;
            if (a < b && int_gcd(a, b) == 1) out.push_back({a, b});
        }
    } else {
        const EnumBounds bounds = enum_bounds(mu, h);
        std::vector<std::tuple<Int, Int, Int>> triples;  // (mu', r, d)
        auto try_pair = [&](const Int& d, const Int& r) {
            if (int_gcd(r, d) != 1) return;
            const Int num = mu - (d - 1) * (r - 1);
            if (num < 0 || num % d != 0) return;
            const Int mu_child = num / d;
            if (mu_child <= 0 || mu_child % 2 != 0) return;
            triples.emplace_back(mu_child, r, d);
        };
        if (order == detail::LoopOrder::DThenR) {
            for (const Int& d : bounds.D)
                if (auto w = bounds.window(d))
                    for (Int r = w->first; r <= w->second; ++r) try_pair(d, r);
        } else {
            // r outermost over the union of all windows
            Int rmin, rmax;
            bool any = false;
            for (const Int& d : bounds.D)
                if (auto w = bounds.window(d)) {
                    if (!any || w->first < rmin) rmin = w->first;
                    if (!any || w->second > rmax) rmax = w->second;
                    any = true;
                }
            if (any)
                for (Int r = rmin; r <= rmax; ++r)
                    for (const Int& d : bounds.D)
                        if (auto w = bounds.window(d); w && w->first <= r && r <= w->second)
                            try_pair(d, r);
        }
        if (stats) stats->levels.push_back({h, mu, Int(triples.size())});
        for (const auto& [mu_child, r, d] : triples) {
            for (const auto& child : enum_level(mu_child, h - 1, stats, memo, order)) {
                std::vector<Int> cand;
                cand.reserve(child.size() + 1);
                for (const Int& g : child) cand.push_back(d * g);
                cand.push_back(r);
                if (!validate(cand).valid) continue;
                const SemigroupData s = derive_char(cand);
                if (s.conductor && *s.conductor == mu) out.push_back(std::move(cand));
            }
        }
    }
    std::sort(out.begin(), out.end(), LexLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    memo.emplace(key, out);
    return out;
}

}  // namespace

namespace detail {

std::vector<SemigroupData> enumerate_semigroups_impl(const Int& m, EnumStats* stats,
                                                     LoopOrder order) {
    std::vector<SemigroupData> result;
    if (m <= 0 || m % 2 != 0) return result;
    Memo memo;
    std::vector<std::vector<Int>> seqs;
    for (int h : length_range(m))
        for (auto& seq : enum_level(m, h, stats, memo, order)) seqs.push_back(seq);
    std::sort(seqs.begin(), seqs.end(), LexLess{});
    seqs.erase(std::unique(seqs.begin(), seqs.end()), seqs.end());
    result.reserve(seqs.size());
    for (const auto& seq : seqs) result.push_back(derive_char(seq));
    return result;
}

}  // namespace detail

std::vector<SemigroupData> enumerate_semigroups(const Int& m, EnumStats* stats) {
    return detail::enumerate_semigroups_impl(m, stats, detail::LoopOrder::DThenR);
}

SemigroupData sharp_family(int h) {
    if (h < 1) throw std::invalid_argument("sharp_family: h must be >= 1");
    std::vector<Int> r;
    r.push_back(pow2(h));
    for (int k = 1; k <= h; ++k) {
        const Int num = 5 * pow2(2 * k - 1) - 1;  // 3 r_k / 2^{h-k}
        r.push_back(pow2(h - k) * int_divexact(num, Int(3)));
    }
    const SemigroupData s = derive_char(r);
    if (!validate(r).valid || !s.conductor)
        throw std::logic_error("sharp_family: generated data invalid");
    const Rat expect = milnor_lower_bound(h);
    if (Rat(*s.conductor) != expect)
        throw std::logic_error("sharp_family: conductor below the sharp bound");
    return s;
}

namespace {

void brute_dfs(std::vector<Int>& seq, const Int& d_cur, const Int& partial, const Int& m,
               const Int& cap, std::vector<std::vector<Int>>& out) {
    if (d_cur == 1) {
        if (partial - seq[0] + 1 == m && validate(seq).valid) out.push_back(seq);
        return;
    }
    for (Int r = seq.back() + 1; r <= cap; ++r) {
        const Int d_next = int_gcd(d_cur, r);
        if (d_next == d_cur) continue;  // non-minimal extension
        const Int e = d_cur / d_next;
        const Int grown = partial + (e - 1) * r;
        if (grown - seq[0] + 1 > m) continue;  // conductor only grows
        seq.push_back(r);
        brute_dfs(seq, d_next, grown, m, cap, out);
        seq.pop_back();
    }
}

}  // namespace

std::vector<SemigroupData> brute_force_enumerate(const Int& m, const Int& r_cap) {
    std::vector<SemigroupData> result;
    if (m <= 0 || m % 2 != 0) return result;
    std::vector<std::vector<Int>> seqs;
    for (Int r0 = 2; r0 <= r_cap; ++r0) {
        std::vector<Int> seq{r0};
        brute_dfs(seq, r0, Int(0), m, r_cap, seqs);
    }
    std::sort(seqs.begin(), seqs.end(), LexLess{});
    seqs.erase(std::unique(seqs.begin(), seqs.end()), seqs.end());
    for (const auto& s : seqs) result.push_back(derive_char(s));
    return result;
}

}  // namespace equising
