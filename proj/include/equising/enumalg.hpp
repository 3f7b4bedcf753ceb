// Enumeration of every equisingularity class with a prescribed Milnor
// number, by the bound-driven recursive search over (mu, r, d) triples,
// plus the sharp family and an exhaustive oracle.
#pragma once

#include <optional>
#include <vector>

#include "equising/numsg.hpp"

namespace equising {

// Admissible lengths h >= 1 with 2^h <= (9 + sqrt(1+60m))/10, decided by
// exact integer-square comparisons.
std::vector<int> length_range(const Int& m);

// Exact rational bounds for one level of the search (h >= 2).
struct EnumBounds {
    int h = 0;
    Int mu;
    Rat p;        // (5/3) 4^{h-1} - 3 2^{h-1} + 4/3
    Int q;        // 3 2^{h-1} - 2
    Rat B_lower;  // (5/3) 4^h - 3 2^h + 4/3, least Milnor number at length h
    std::vector<Int> D;  // admissible d values (2..floor(a_h))

    Rat window_lo(const Int& d) const;  // b^h_d
    Rat window_hi(const Int& d) const;  // c^h_d
    // Integer window [ceil(b), floor(c)], empty when it inverts.
    std::optional<std::pair<Int, Int>> window(const Int& d) const;
};

EnumBounds enum_bounds(const Int& mu, int h);

// Milnor lower bound (5/3) 4^h - 3 2^h + 4/3 for length h.
Rat milnor_lower_bound(int h);
// Last-generator lower bound (5/3) 2^{2h-1} - 1/3 for length h.
Rat last_generator_lower_bound(int h);

struct EnumStats {
    struct Level {
        int h;
        Int mu;
        Int triples;  // candidate (mu', r, d) triples collected at this call
    };
    std::vector<Level> levels;
};

std::vector<SemigroupData> enumerate_semigroups(const Int& m, EnumStats* stats = nullptr);

// The length-h semigroup saturating both sharpness bounds:
// r_0 = 2^h, r_k = 2^{h-k} ((5/3) 2^{2k-1} - 1/3).
SemigroupData sharp_family(int h);

// Exhaustive depth-first search over strictly increasing sequences, pruned
// only by the running conductor; independent of the window bounds.
std::vector<SemigroupData> brute_force_enumerate(const Int& m, const Int& r_cap);

namespace detail {
enum class LoopOrder { DThenR, RThenD };
std::vector<SemigroupData> enumerate_semigroups_impl(const Int& m, EnumStats* stats,
                                                     LoopOrder order);
}  // namespace detail

}  // namespace equising
