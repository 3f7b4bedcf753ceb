// Combinatorics of the numerical semigroups attached to plane branches:
// characteristic sequences, validity, conductor, gaps, Newton-Puiseux pairs
// and theta-representations.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equising/scalars.hpp"

namespace equising {

// Characteristic data of a generator sequence r_0 < r_1 < ... < r_h:
//   d_1 = r_0, d_{k+1} = gcd(d_k, r_k)   (stored d[0..h]   = d_1..d_{h+1})
//   e_k = d_k / d_{k+1}                  (stored e[0..h-1] = e_1..e_h)
//   m_1 = r_1, m_{k+1} = r_{k+1} - r_k e_k + m_k (stored m[0..h-1] = m_1..m_h)
// The conductor is present only when the sequence is valid.
struct SemigroupData {
    std::vector<Int> r;
    std::vector<Int> d;
    std::vector<Int> e;
    std::vector<Int> m;
    int h = 0;
    std::optional<Int> conductor;

    const Int& dk(int k) const { return d.at(k - 1); }  // d_k, 1 <= k <= h+1
    const Int& ek(int k) const { return e.at(k - 1); }  // e_k, 1 <= k <= h
    const Int& mk(int k) const { return m.at(k - 1); }  // m_k, 1 <= k <= h
};

struct Failure {
    enum class Kind { NotIncreasing, GcdNotOne, StarViolated, NotMinimal };
    Kind kind;
    int k = 0;  // offending index for StarViolated / NotMinimal

    std::string to_string() const;
    friend bool operator==(const Failure& a, const Failure& b) {
        return a.kind == b.kind && a.k == b.k;
    }
};

struct ValidationReport {
    bool valid = false;
    std::vector<Failure> failures;

    bool has(Failure::Kind kind) const;
    bool has(Failure::Kind kind, int k) const;
};

// Characteristic sequences of r (which need not be valid). Throws
// std::invalid_argument on an empty sequence or nonpositive entries.
SemigroupData derive_char(const std::vector<Int>& r);

// Valid iff r is strictly increasing, gcd 1, condition (*) holds between all
// consecutive levels and d is strictly decreasing (minimal generators).
// The singleton (1) is accepted as the smooth branch.
ValidationReport validate(const std::vector<Int>& r);

inline bool is_valid(const std::vector<Int>& r) { return validate(r).valid; }

// Conductor, evaluated through both closed formulas (sum formula and
// r_h d_h - m_h - r_0 + 1); they must agree and be even, else std::logic_error.
Int conductor(const SemigroupData& s);

bool membership(const SemigroupData& s, const Int& n);

std::vector<Int> gaps(const SemigroupData& s);

// Pairs (m_k / d_{k+1}, e_k) for k = 1..h.
std::vector<std::pair<Int, Int>> puiseux_pairs(const SemigroupData& s);

// The unique theta = (theta_0,...,theta_{k-1}) with 0 <= theta_j < e_j for
// j >= 1 and sum theta_j r_j / d_{k+1} = (r_k / d_{k+1}) e_k. Computed by
// modular reduction from the top index downward.
std::vector<Int> theta_rep(const SemigroupData& s, int k);

std::string generators_text(const SemigroupData& s);

}  // namespace equising
