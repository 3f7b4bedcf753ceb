// Canonical equations and generic forms of an equisingularity class.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "equising/bipoly.hpp"
#include "equising/numsg.hpp"

namespace equising {

// G_1 = y and G_{k+1} = G_k^{e_k} - x^{t_0} y^{t_1} G_2^{t_2} ... G_{k-1}^{t_{k-1}}
// with t = theta_rep(s, k); G_{h+1} is the canonical equation of the class.
struct CanonicalElement {
    SemigroupData semigroup;
    std::vector<BiPoly> g;                // G_1..G_{h+1}, expanded
    std::vector<std::vector<Int>> theta;  // theta^1..theta^h

    const BiPoly& polynomial() const { return g.back(); }
    // Structural form, e.g. "((y^2-x^3)^2-x^11*y)^2-x^19*(y^2-x^3)".
    std::string nested_text() const;
};

CanonicalElement canonical_element(const SemigroupData& s);

// One weight inequality sum coeffs[j]*theta_j > rhs (theta_j < e_j for j>=1)
// describing the free monomials E(k,i,2) of a level.
struct GenericConstraint {
    Int i;
    Int rhs;
    std::vector<Int> coeffs;
};

struct GenericLevel {
    Int e;
    std::vector<Int> forced_theta;  // the unique E(k,e_k,1) exponent vector
    std::vector<GenericConstraint> constraints;  // i = 2..e_k
};

// Symbolic description of every equation in the class: forced monomials with
// free nonzero coefficients plus constrained free sums per level.
struct GenericForm {
    SemigroupData semigroup;
    std::vector<GenericLevel> levels;

    std::string nested_text() const;
};

GenericForm generic_form(const SemigroupData& s);

// Members of E(k,i,type) with theta_0 <= xdeg_bound, lexicographically
// ordered. type 2 is the strict inequality set, type 1 the equality set.
std::vector<std::vector<Int>> enumerate_E(const SemigroupData& s, int k, const Int& i,
                                          const Int& xdeg_bound, int type = 2);

// Deterministic random member of the class: forced coefficients drawn
// nonzero in [-coeff_bound, coeff_bound], up to extra_terms free monomials
// drawn from the E-sets with theta_0 capped at the conductor. The result is
// verified post-hoc to lie in the class.
BiPoly sample_member(const SemigroupData& s, std::uint64_t seed, int extra_terms,
                     const Int& coeff_bound = Int(5));

}  // namespace equising
