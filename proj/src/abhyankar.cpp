#include "equising/abhyankar.hpp"

#include <algorithm>
#include <sstream>

namespace equising {

XOrder int_mult(const BiPoly& f, const BiPoly& g) {
    return resultant_y(f, g).x_order();
}

FintResult fint(const BiPoly& p, const std::vector<Int>& r,
                const std::vector<BiPoly>& basis) {
    if (p.is_zero()) throw std::invalid_argument("fint: zero polynomial");
    const std::size_t L = basis.size();
    if (r.size() != L && r.size() != L + 1)
        throw std::invalid_argument("fint: weight/basis lengths incoherent");
    const bool last_is_f_slot = (r.size() == L);
    const std::size_t weighted = last_is_f_slot ? L - 1 : L;

    const AdicExpansion exp = adic_expand(p, basis);
    FintResult res;
    bool have = false;
    std::size_t min_count = 0;
    for (const auto& dig : exp.digits) {
        if (last_is_f_slot && dig.exponents[L - 1] != 0) continue;
        ++res.considered;
        Int v = int_of(dig.b0().value()) * r[0];
        for (std::size_t i = 0; i < weighted; ++i) v += int_of(dig.exponents[i]) * r[i + 1];
        if (!have || v < res.value) {
            res.value = v;
            min_count = 1;
            have = true;
        } else if (v == res.value) {
            ++min_count;
        }
    }
    if (!have) {
        res.divisible = true;
        return res;
    }
    res.unique_min = (min_count == 1);
    return res;
}

namespace {

// Chain of vertices of the compact sides of the lower-left convex hull.
std::vector<GnpPoint> lower_left_hull(std::vector<GnpPoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const GnpPoint& a, const GnpPoint& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    // Keep, per x, only the least y; then build the convex decreasing chain.
    std::vector<GnpPoint> uniq;
    for (const auto& p : pts)
        if (uniq.empty() || uniq.back().x != p.x) uniq.push_back(p);
    std::vector<GnpPoint> hull;
    for (const auto& p : uniq) {
        if (!hull.empty() && hull.back().y <= p.y) continue;  // dominated
        while (hull.size() >= 2) {
            const GnpPoint& a = hull[hull.size() - 2];
            const GnpPoint& b = hull[hull.size() - 1];
            // drop b when it lies on or above segment a-p
            const Int cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    return hull;
}

}  // namespace

bool GenNewtonPolygon::is_segment(const Int& len) const {
    return !degenerate && hull.size() == 2 && hull[0] == GnpPoint{Int(0), len} &&
           hull[1] == GnpPoint{len, Int(0)};
}

GenNewtonPolygon gnp(const BiPoly& p, const BiPoly& q, const std::vector<Int>& r,
                     const std::vector<BiPoly>& basis) {
    if (!q.is_monic_in_y() || q.y_degree() < 1)
        throw std::invalid_argument("gnp: q must be monic of positive y-degree");
    if (p.is_zero() || p.y_degree() % q.y_degree() != 0)
        throw std::invalid_argument("gnp: deg_y q must divide deg_y p");
    const long long d = p.y_degree() / q.y_degree();

    GenNewtonPolygon poly;
    const XOrder qw = int_mult(p, q);
    poly.degenerate = !qw.is_finite();

    const auto digits = q_adic_digits(p, q);  // digits[t] multiplies q^t
    std::vector<GnpPoint> pts;
    for (long long t = 0; t + 1 <= d; ++t) {  // alpha_{d-t} = digits[t], k = d-t >= 1
        const BiPoly alpha = t < static_cast<long long>(digits.size()) ? digits[t] : BiPoly();
        if (alpha.is_zero()) continue;
        const FintResult fr = fint(alpha, r, basis);
        if (fr.divisible) continue;  // infinite weight, no point
        if (!qw.is_finite() && t != 0) continue;  // second coordinate undefined
        const Int fy = t == 0 ? Int(0) : int_of(t) * int_of(qw.value());
        pts.push_back({fr.value, fy});
    }
    if (qw.is_finite()) pts.push_back({Int(0), int_of(d) * int_of(qw.value())});  // k = 0 term
    poly.points = pts;
    poly.hull = lower_left_hull(pts);
    return poly;
}

namespace {

std::string infinity_reason(int k) {
    std::ostringstream os;
    os << "infinite intersection with the approximate root at stage " << k
       << " (common factor)";
    return os.str();
}

}  // namespace

CriterionTrace is_irreducible(const BiPoly& input) {
    if (input.is_zero() || !input.is_monic_in_y())
        throw std::invalid_argument("is_irreducible: polynomial must be monic in y");

    CriterionTrace tr;
    const long long n = input.y_degree();
    BiPoly p = input;
    if (n >= 1 && !p.y_coeff(n - 1).is_zero()) {
        p = normalize_tschirnhausen(p);
        tr.tschirnhausen_applied = true;
    }

    tr.r.push_back(int_of(n));
    tr.d.push_back(int_of(n));  // d_1 = n
    if (n == 1) {
        tr.irreducible = true;  // smooth branch
        return tr;
    }

    tr.roots.push_back(BiPoly::var_y());
    {
        const XOrder r1 = int_mult(p, tr.roots[0]);
        if (!r1.is_finite()) {
            tr.reason = infinity_reason(1);
            tr.stage = 1;
            return tr;
        }
        tr.r.push_back(int_of(r1.value()));
    }

    // Discovery loop: d_{k+1} = gcd(d_k, r_k); stop at 1.
    int h = 0;
    for (int k = 1;; ++k) {
        const Int dk1 = int_gcd(tr.d[k - 1], tr.r[k]);
        tr.d.push_back(dk1);
        if (dk1 == 1) {
            h = k;
            break;
        }
        const BiPoly g_next = approximate_root(p, dk1);
        const XOrder rv = int_mult(p, g_next);
        if (!rv.is_finite()) {
            tr.reason = infinity_reason(k + 1);
            tr.stage = k + 1;
            return tr;
        }
        const Int r_next = int_of(rv.value());
        // condition (2): r_{k+1} d_{k+1} > r_k d_k
        if (!(r_next * dk1 > tr.r[k] * tr.d[k - 1])) {
            std::ostringstream os;
            os << "condition 2 fails at k=" << k << " (r_{k+1}d_{k+1} <= r_k d_k)";
            tr.reason = os.str();
            tr.stage = k;
            return tr;
        }
        tr.roots.push_back(g_next);
        tr.r.push_back(r_next);
    }

    // Condition (3), in the inequality form: expand g_{k+1} in powers of g_k
    // and compare formal multiplicities against (r_k/d_{k+1}) * i.
    for (int k = 1; k <= h; ++k) {
        const BiPoly& gk = tr.roots[k - 1];
        const BiPoly& gk1 = (k == h) ? p : tr.roots[k];
        const Int ek = tr.d[k - 1] / tr.d[k];
        const Int rbar = int_divexact(tr.r[k], tr.d[k]);

        std::vector<Int> weights(k + 1);
        for (int j = 0; j <= k; ++j) weights[j] = int_divexact(tr.r[j], tr.d[k]);
        const std::vector<BiPoly> sub(tr.roots.begin(), tr.roots.begin() + k);

        const auto digits = q_adic_digits(gk1, gk);
        const long long e = to_i64(ek);
        CriterionStage stage{k, tr.r[k], tr.d[k - 1], "ok"};
        auto fail = [&](const std::string& why) {
            stage.fint_checks = why;
            tr.stages.push_back(stage);
            tr.reason = "condition 3 fails at k=" + std::to_string(k) + ": " + why;
            tr.stage = k;
        };

        // alpha_1 vanishes because g_k is the e_k-th approximate root of g_{k+1}.
        if (static_cast<long long>(digits.size()) > e - 1 && !digits[e - 1].is_zero()) {
            fail("alpha_1 nonzero");
            return tr;
        }
        for (long long i = 2; i <= e; ++i) {
            const BiPoly alpha =
                (e - i) < static_cast<long long>(digits.size()) ? digits[e - i] : BiPoly();
            if (alpha.is_zero()) {
                if (i == e) {
                    fail("alpha_{e_k} vanishes");
                    return tr;
                }
                continue;
            }
            const FintResult fr = fint(alpha, weights, sub);
            if (fr.divisible) throw std::logic_error("is_irreducible: empty digit set");
            if (fr.considered >= 2 && !fr.unique_min) {
                fail("formal multiplicity tie");
                return tr;
            }
            if (i == e) {
                if (fr.value != rbar * ek) {
                    fail("fint(alpha_e) != (r_k/d_{k+1}) e_k");
                    return tr;
                }
            } else if (!(fr.value > rbar * int_of(i))) {
                fail("fint(alpha_i) <= (r_k/d_{k+1}) i");
                return tr;
            }
        }
        tr.stages.push_back(stage);
    }

    tr.irreducible = true;
    return tr;
}

SemigroupData semigroup_of(const CriterionTrace& trace) {
    if (!trace.irreducible)
        throw std::domain_error("semigroup_of: polynomial is reducible (" + trace.reason + ")");
    std::vector<Int> gens = trace.r;
    // The criterion may discover r_1 < r_0 (the swapped arrangement, e.g.
    // y^3 - x^2); the minimal generators are the sorted pair.
    if (gens.size() >= 2 && gens[1] < gens[0]) std::swap(gens[0], gens[1]);
    SemigroupData s = derive_char(gens);
    if (!validate(gens).valid)
        throw std::logic_error("semigroup_of: criterion produced an invalid sequence");
    return s;
}

SemigroupData semigroup_of(const BiPoly& p) { return semigroup_of(is_irreducible(p)); }

Int milnor(const BiPoly& p, const CriterionTrace& trace) {
    const SemigroupData s = semigroup_of(trace);
    const Int cond = s.conductor ? *s.conductor : conductor(s);
    if (p.y_degree() == 1) {
        if (cond != 0) throw std::logic_error("milnor: smooth branch with nonzero conductor");
        return Int(0);
    }
    const XOrder mu = int_mult(p.derivative_x(), p.derivative_y());
    if (!mu.is_finite()) throw std::logic_error("milnor: infinite int(f_x, f_y)");
    if (int_of(mu.value()) != cond)
        throw std::logic_error("milnor: resultant value disagrees with the conductor");
    return cond;
}

Int milnor(const BiPoly& p) { return milnor(p, is_irreducible(p)); }

}  // namespace equising
