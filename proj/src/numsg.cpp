#include "equising/numsg.hpp"

#include <algorithm>
#include <sstream>

namespace equising {

std::string Failure::to_string() const {
    switch (kind) {
        case Kind::NotIncreasing: return "not-increasing";
        case Kind::GcdNotOne: return "gcd-not-one";
        case Kind::StarViolated: return "star-violated(" + std::to_string(k) + ")";
        case Kind::NotMinimal: return "not-minimal(" + std::to_string(k) + ")";
    }
    return "?";
}

bool ValidationReport::has(Failure::Kind kind) const {
    return std::any_of(failures.begin(), failures.end(),
                       [&](const Failure& f) { return f.kind == kind; });
}

bool ValidationReport::has(Failure::Kind kind, int k) const {
    return std::find(failures.begin(), failures.end(), Failure{kind, k}) != failures.end();
}

SemigroupData derive_char(const std::vector<Int>& r) {
    if (r.empty()) throw std::invalid_argument("derive_char: empty generator sequence");
    for (const Int& v : r)
        if (v < 1) throw std::invalid_argument("derive_char: generators must be >= 1");

    SemigroupData s;
    s.r = r;
    s.h = static_cast<int>(r.size()) - 1;
    s.d.resize(r.size());
    s.d[0] = r[0];  // d_1 = r_0
    for (int k = 1; k <= s.h; ++k) s.d[k] = int_gcd(s.d[k - 1], r[k]);
    for (int k = 1; k <= s.h; ++k) s.e.push_back(s.d[k - 1] / s.d[k]);
    if (s.h >= 1) {
        s.m.push_back(r[1]);  // m_1 = r_1
        for (int k = 1; k < s.h; ++k)
            s.m.push_back(r[k + 1] - r[k] * s.e[k - 1] + s.m[k - 1]);
    }
    if (validate(r).valid) {
        // fill the conductor through the consistency-checked route
        SemigroupData probe = s;
        probe.conductor.reset();
        s.conductor = conductor(probe);
    }
    return s;
}

ValidationReport validate(const std::vector<Int>& r) {
    ValidationReport rep;
    if (r.empty()) {
        rep.failures.push_back({Failure::Kind::NotIncreasing, 0});
        return rep;
    }
    for (const Int& v : r)
        if (v < 1) {
            rep.failures.push_back({Failure::Kind::NotIncreasing, 0});
            return rep;
        }
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
        if (!(r[i] < r[i + 1])) {
            rep.failures.push_back({Failure::Kind::NotIncreasing, 0});
            break;
        }

    const int h = static_cast<int>(r.size()) - 1;
    std::vector<Int> d(r.size());
    d[0] = r[0];
    for (int k = 1; k <= h; ++k) d[k] = int_gcd(d[k - 1], r[k]);

    if (d[h] != 1) rep.failures.push_back({Failure::Kind::GcdNotOne, 0});

    // (*) between consecutive levels: r_{k+1} d_{k+1} > r_k d_k, k = 1..h-1.
    for (int k = 1; k + 1 <= h; ++k)
        if (!(r[k + 1] * d[k] > r[k] * d[k - 1]))
            rep.failures.push_back({Failure::Kind::StarViolated, k});

    // Minimality: d_1 > d_2 > ... > d_{h+1}.
    for (int k = 1; k <= h; ++k)
        if (d[k] == d[k - 1]) rep.failures.push_back({Failure::Kind::NotMinimal, k});

    rep.valid = rep.failures.empty();
    return rep;
}

Int conductor(const SemigroupData& s) {
    if (s.h == 0) {
        if (s.r[0] != 1) throw std::logic_error("conductor: invalid smooth branch data");
        return Int(0);
    }
    // Sum formula: sum (e_i - 1) r_i - r_0 + 1.
    Int by_sum = 1 - s.r[0];
    for (int i = 1; i <= s.h; ++i) by_sum += (s.ek(i) - 1) * s.r[i];
    // Closed form: r_h d_h - m_h - r_0 + 1.
    const Int by_closed = s.r[s.h] * s.dk(s.h) - s.mk(s.h) - s.r[0] + 1;
    if (by_sum != by_closed)
        throw std::logic_error("conductor: the two formulas disagree (internal fault)");
    if (by_sum % 2 != 0) throw std::logic_error("conductor: odd value (internal fault)");
    return by_sum;
}

bool membership(const SemigroupData& s, const Int& n) {
    if (n < 0) return false;
    if (n == 0) return true;
    if (s.h == 0) return true;  // <1> is all of N
    if (s.conductor && n >= *s.conductor) return true;

    // Reduce through the unique normal form n = l_0 r_0 + sum l_k r_k with
    // 0 <= l_k < e_k: solve each l_k by a congruence from the top down.
    Int cur = n;
    for (int k = s.h; k >= 1; --k) {
        // cur is divisible by d_{k+1}; solve l * (r_k/d_{k+1}) = cur/d_{k+1} (mod e_k)
        const Int& dk1 = s.dk(k + 1);
        const Int t = int_divexact(cur, dk1);
        const Int v = int_divexact(s.r[k], dk1);
        const Int& ek = s.ek(k);
        const Int lambda = int_mod(int_mod(t, ek) * int_invmod(int_mod(v, ek), ek), ek);
        cur -= lambda * s.r[k];
        if (cur < 0) return false;
    }
    return cur % s.r[0] == 0;
}

std::vector<Int> gaps(const SemigroupData& s) {
    std::vector<Int> out;
    const Int c = s.conductor ? *s.conductor : conductor(s);
    for (Int a = 0; a < c; ++a)
        if (!membership(s, a)) out.push_back(a);
    return out;
}

std::vector<std::pair<Int, Int>> puiseux_pairs(const SemigroupData& s) {
    std::vector<std::pair<Int, Int>> out;
    for (int k = 1; k <= s.h; ++k) {
        if (s.mk(k) % s.dk(k + 1) != 0)
            throw std::logic_error("puiseux_pairs: m_k not divisible by d_{k+1}");
        out.emplace_back(s.mk(k) / s.dk(k + 1), s.ek(k));
    }
    return out;
}

std::vector<Int> theta_rep(const SemigroupData& s, int k) {
    if (k < 1 || k > s.h) throw std::invalid_argument("theta_rep: index out of range");
    const Int& dk1 = s.dk(k + 1);
    // Scaled generators R_j = r_j / d_{k+1} and target e_k * R_k.
    std::vector<Int> R(k + 1);
    for (int j = 0; j <= k; ++j) R[j] = int_divexact(s.r[j], dk1);
    Int target = s.ek(k) * R[k];

    std::vector<Int> theta(k);
    for (int j = k - 1; j >= 1; --j) {
        // Everything below index j is divisible by M = d_j / d_{k+1}.
        const Int M = int_divexact(s.dk(j), dk1);
        const Int Mnext = int_divexact(s.dk(j + 1), dk1);
        if (target % Mnext != 0)
            throw std::invalid_argument("theta_rep: no representation exists");
        const Int& ej = s.ek(j);  // = M / Mnext
        if (ej == 1) {
            theta[j] = 0;
            continue;
        }
        const Int t = int_mod(int_divexact(target, Mnext), ej);
        const Int v = int_mod(int_divexact(R[j], Mnext), ej);
        theta[j] = int_mod(t * int_invmod(v, ej), ej);
        target -= theta[j] * R[j];
        if (target < 0) throw std::invalid_argument("theta_rep: no representation exists");
    }
    if (target % R[0] != 0 || target < 0)
        throw std::invalid_argument("theta_rep: no representation exists");
    theta[0] = target / R[0];
    return theta;
}

std::string generators_text(const SemigroupData& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.r.size(); ++i) {
        if (i) os << ' ';
        os << s.r[i].get_str();
    }
    return os.str();
}

}  // namespace equising
