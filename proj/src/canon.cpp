#include "equising/canon.hpp"

#include <random>
#include <sstream>

#include "equising/abhyankar.hpp"
#include "equising/poly_text.hpp"

namespace equising {

namespace {

void require_valid(const SemigroupData& s, const char* who) {
    if (!validate(s.r).valid)
        throw std::domain_error(std::string(who) + ": invalid semigroup");
}

// x^{t0} y^{t1} G_2^{t2} ... G_{k-1}^{t_{k-1}} over a given tower of levels.
BiPoly theta_monomial(const std::vector<Int>& theta, const std::vector<BiPoly>& g) {
    BiPoly mono = BiPoly::monomial(to_i64(theta[0]), 0, Rat(1));
    for (std::size_t j = 1; j < theta.size(); ++j)
        if (theta[j] > 0)
            mono *= g[j - 1].pow(static_cast<unsigned long>(to_i64(theta[j])));
    return mono;
}

// Same monomial as text; `level_text[j]` prints G_{j+1}, wrapped when composite.
std::string theta_monomial_text(const std::vector<Int>& theta,
                                const std::vector<std::string>& level_text) {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << '*';
        first = false;
    };
    if (theta[0] > 0) {
        sep();
        os << 'x';
        if (theta[0] > 1) os << '^' << theta[0].get_str();
    }
    for (std::size_t j = 1; j < theta.size(); ++j) {
        if (theta[j] == 0) continue;
        sep();
        const bool atomic = (j == 1);  // G_1 = y
        os << (atomic ? level_text[j - 1] : "(" + level_text[j - 1] + ")");
        if (theta[j] > 1) os << '^' << theta[j].get_str();
    }
    if (first) os << '1';
    return os.str();
}

}  // namespace

CanonicalElement canonical_element(const SemigroupData& s) {
    require_valid(s, "canonical_element");
    CanonicalElement ce;
    ce.semigroup = s;
    ce.g.push_back(BiPoly::var_y());
    for (int k = 1; k <= s.h; ++k) {
        const std::vector<Int> theta = theta_rep(s, k);
        const BiPoly mono = theta_monomial(theta, ce.g);
        ce.g.push_back(ce.g.back().pow(static_cast<unsigned long>(to_i64(s.ek(k)))) - mono);
        ce.theta.push_back(theta);
    }
    return ce;
}

std::string CanonicalElement::nested_text() const {
    std::vector<std::string> lvl{"y"};
    for (std::size_t k = 1; k < g.size(); ++k) {
        const Int& e = semigroup.ek(static_cast<int>(k));
        const bool atomic = (k == 1);
        std::ostringstream os;
        os << (atomic ? lvl.back() : "(" + lvl.back() + ")") << '^' << e.get_str() << '-'
           << theta_monomial_text(theta[k - 1], lvl);
        lvl.push_back(os.str());
    }
    return lvl.back();
}

GenericForm generic_form(const SemigroupData& s) {
    require_valid(s, "generic_form");
    GenericForm f;
    f.semigroup = s;
    for (int k = 1; k <= s.h; ++k) {
        GenericLevel lvl;
        lvl.e = s.ek(k);
        lvl.forced_theta = theta_rep(s, k);
        const Int& dk1 = s.dk(k + 1);
        for (Int i = 2; i <= lvl.e; ++i) {
            GenericConstraint c;
            c.i = i;
            c.rhs = int_divexact(s.r[k], dk1) * i;
            for (int j = 0; j < k; ++j) c.coeffs.push_back(int_divexact(s.r[j], dk1));
            lvl.constraints.push_back(std::move(c));
        }
        f.levels.push_back(std::move(lvl));
    }
    return f;
}

std::string GenericForm::nested_text() const {
    std::vector<std::string> lvl{"y"};
    for (std::size_t k = 1; k <= levels.size(); ++k) {
        const GenericLevel& L = levels[k - 1];
        const bool atomic = (k == 1);
        std::ostringstream os;
        os << (atomic ? lvl.back() : "(" + lvl.back() + ")") << '^' << L.e.get_str() << " + a"
           << k << '*' << theta_monomial_text(L.forced_theta, lvl) << " + F" << k;
        lvl.push_back(os.str());
    }
    return lvl.back();
}

std::vector<std::vector<Int>> enumerate_E(const SemigroupData& s, int k, const Int& i,
                                          const Int& xdeg_bound, int type) {
    require_valid(s, "enumerate_E");
    if (k < 1 || k > s.h) throw std::invalid_argument("enumerate_E: level out of range");
    if (i < 2 || i > s.ek(k)) throw std::invalid_argument("enumerate_E: index i out of range");
    if (type != 1 && type != 2) throw std::invalid_argument("enumerate_E: type must be 1 or 2");
    if (xdeg_bound < 0) throw std::invalid_argument("enumerate_E: negative bound");

    const Int& dk1 = s.dk(k + 1);
    std::vector<Int> R(k);
    for (int j = 0; j < k; ++j) R[j] = int_divexact(s.r[j], dk1);
    const Int target = int_divexact(s.r[k], dk1) * i;

    std::vector<std::vector<Int>> out;
    std::vector<Int> theta(k);
    // theta_0 outermost so the output is lexicographically ordered.
    auto scan = [&](auto&& self, int j, const Int& acc) -> void {
        if (j == k) {
            if (type == 1 ? acc == target : acc > target) out.push_back(theta);
            return;
        }
        for (Int t = 0; t < s.ek(j); ++t) {
            theta[j] = t;
            self(self, j + 1, acc + t * R[j]);
        }
    };
    for (Int t0 = 0; t0 <= xdeg_bound; ++t0) {
        theta[0] = t0;
        if (k == 1) {
            const Int acc = t0 * R[0];
            if (type == 1 ? acc == target : acc > target) out.push_back(theta);
        } else {
            scan(scan, 1, t0 * R[0]);
        }
    }
    return out;
}

BiPoly sample_member(const SemigroupData& s, std::uint64_t seed, int extra_terms,
                     const Int& coeff_bound) {
    require_valid(s, "sample_member");
    if (extra_terms < 0) throw std::invalid_argument("sample_member: negative extra_terms");
    if (coeff_bound < 1) throw std::invalid_argument("sample_member: coefficient bound < 1");

    std::mt19937_64 rng(seed);
    const unsigned long bound = static_cast<unsigned long>(to_i64(coeff_bound));
    auto draw_coeff = [&](bool nonzero) {
        // uniform in [-bound, bound], avoiding distribution-class portability
        const unsigned long span = 2 * bound + 1;
        for (;;) {
            const long v = static_cast<long>(rng() % span) - static_cast<long>(bound);
            if (!nonzero || v != 0) return Rat(v);
        }
    };

    const Int cap = s.conductor ? *s.conductor : conductor(s);

    // Candidate pool for the free terms: all (k, i, theta) with theta_0 <= cap.
    struct Extra {
        int k;
        Int i;
        std::vector<Int> theta;
    };
    std::vector<Extra> pool;
    for (int k = 1; k <= s.h; ++k)
        for (Int i = 2; i <= s.ek(k); ++i)
            for (auto& th : enumerate_E(s, k, i, cap, 2)) pool.push_back({k, i, th});

    std::vector<Extra> chosen;
    for (int t = 0; t < extra_terms && !pool.empty(); ++t)
        chosen.push_back(pool[rng() % pool.size()]);

    std::vector<BiPoly> g;  // g_1..g_{k-1} while level k is being assembled
    BiPoly poly = BiPoly::var_y();
    for (int k = 1; k <= s.h; ++k) {
        const Int ek = s.ek(k);
        BiPoly next = poly.pow(static_cast<unsigned long>(to_i64(ek)));
        // forced monomial with a nonzero coefficient
        next += theta_monomial(theta_rep(s, k), g) * draw_coeff(true);
        // free terms land as alpha_i * g_k^{e_k - i}
        for (const Extra& ex : chosen) {
            if (ex.k != k) continue;
            const Rat c = draw_coeff(false);
            if (c == 0) continue;
            BiPoly term = theta_monomial(ex.theta, g) * c;
            if (ex.i < ek)
                term *= poly.pow(static_cast<unsigned long>(to_i64(ek - ex.i)));
            next += term;
        }
        g.push_back(poly);
        poly = next;
    }

    // Post-hoc membership check; by construction this cannot fail.
    const SemigroupData back = semigroup_of(poly);
    if (back.r != s.r)
        throw std::logic_error("sample_member: sampled polynomial left the class");
    return poly;
}

}  // namespace equising
