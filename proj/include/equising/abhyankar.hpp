// Intersection multiplicities, formal intersection multiplicities, the
// generalized Newton polygon and Abhyankar's irreducibility criterion.
#pragma once

#include <string>
#include <vector>

#include "equising/bipoly.hpp"
#include "equising/numsg.hpp"

namespace equising {

// x-order of the y-resultant; infinite iff f and g share a factor (or one
// input is zero).
XOrder int_mult(const BiPoly& f, const BiPoly& g);

// Formal intersection multiplicity of p with respect to weights r and a
// mixed basis g. Two calling conventions, distinguished by length:
//   r.size() == basis.size() + 1 : every basis exponent is weighted
//     (r = (r_0; r_1..r_L) with r_0 the x weight); no digit is excluded.
//   r.size() == basis.size()     : the last basis element plays the role of
//     f in the fundamental expansion theorem: digits with a nonzero last
//     exponent are excluded, and `divisible` is set when none remain.
struct FintResult {
    bool divisible = false;
    Int value;             // meaningful when !divisible
    bool unique_min = true;  // min attained by exactly one digit
    std::size_t considered = 0;  // size of the digit set scanned
};
FintResult fint(const BiPoly& p, const std::vector<Int>& r,
                const std::vector<BiPoly>& basis);

struct GnpPoint {
    Int x, y;
    friend bool operator==(const GnpPoint& a, const GnpPoint& b) {
        return a.x == b.x && a.y == b.y;
    }
};

// Diagnostic polygon: points (fint(alpha_k), (d-k) * w) for the q-adic
// digits alpha_k of p, with w = int_mult(p, q); the k = 0 term contributes
// (0, d*w). `hull` is the chain of vertices of the compact sides of the
// lower-left convex hull, x strictly increasing.
struct GenNewtonPolygon {
    std::vector<GnpPoint> points;
    std::vector<GnpPoint> hull;
    bool degenerate = false;  // int_mult(p, q) infinite

    bool is_segment(const Int& len) const;
};
GenNewtonPolygon gnp(const BiPoly& p, const BiPoly& q, const std::vector<Int>& r,
                     const std::vector<BiPoly>& basis);

struct CriterionStage {
    int k = 0;
    Int r_k, d_k;
    std::string fint_checks;  // "ok" or the failed comparison
};

struct CriterionTrace {
    bool irreducible = false;
    std::string reason;  // empty when irreducible
    int stage = 0;       // stage at which the verdict was reached
    bool tschirnhausen_applied = false;
    std::vector<Int> r;          // r_0..r_h as discovered
    std::vector<Int> d;          // d_1..d_{h+1}
    std::vector<BiPoly> roots;   // g_1..g_h (approximate roots; g_{h+1} is p)
    std::vector<CriterionStage> stages;
};

// Abhyankar's criterion. p must be monic in y; the Tschirnhausen shift is
// applied internally when the y^(n-1) coefficient is nonzero.
CriterionTrace is_irreducible(const BiPoly& p);

// Semigroup of an irreducible p; throws std::domain_error on reducible input.
SemigroupData semigroup_of(const BiPoly& p);
SemigroupData semigroup_of(const CriterionTrace& trace);

// Milnor number as x_order(Res_y(p_x, p_y)); cross-checked against the
// conductor of the semigroup (std::logic_error on disagreement).
Int milnor(const BiPoly& p);
Int milnor(const BiPoly& p, const CriterionTrace& trace);

}  // namespace equising
