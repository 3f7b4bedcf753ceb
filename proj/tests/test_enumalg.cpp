#include <doctest.h>

#include <set>

#include "equising/enumalg.hpp"
#include "support/oracles.hpp"

using namespace equising;

namespace {
std::vector<Int> gens(std::initializer_list<long> xs) {
    std::vector<Int> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

std::set<std::vector<Int>> gen_sets(const std::vector<SemigroupData>& xs) {
    std::set<std::vector<Int>> out;
    for (const auto& s : xs) out.insert(s.r);
    return out;
}
}  // namespace

TEST_CASE("length range via exact integer square roots") {
    CHECK(length_range(Int(28)) == std::vector<int>{1, 2});
    CHECK(length_range(Int(2)) == std::vector<int>{1});
    CHECK(length_range(Int(16)) == std::vector<int>{1, 2});  // M = 4 exactly
    CHECK(length_range(Int(84)) == std::vector<int>{1, 2, 3});
    CHECK(length_range(Int(0)) == std::vector<int>{});
}

TEST_CASE("enumeration bounds") {
    const EnumBounds b28 = enum_bounds(Int(28), 2);
    CHECK(b28.D == gens({2}));
    const auto w28 = b28.window(Int(2));
    REQUIRE(w28.has_value());
    CHECK(w28->first == 19);
    CHECK(w28->second == 25);

    const EnumBounds b16 = enum_bounds(Int(16), 2);
    CHECK(b16.D == gens({2}));
    const auto w16 = b16.window(Int(2));
    REQUIRE(w16.has_value());
    CHECK(w16->first == 13);
    CHECK(w16->second == 13);

    // below the length-2 threshold the d-range is empty
    const EnumBounds b14 = enum_bounds(Int(14), 2);
    CHECK(b14.D.empty());
    CHECK(Rat(14) < b14.B_lower);

    // D empty iff mu sits below the length-h Milnor threshold
    for (int h = 2; h <= 4; ++h)
        for (long mu = 2; mu <= 420; mu += 2) {
            const EnumBounds b = enum_bounds(Int(mu), h);
            CHECK(b.D.empty() == (Rat(mu) < b.B_lower));
        }
}

TEST_CASE("enumerate_semigroups reproduces the worked example") {
    const auto classes = enumerate_semigroups(Int(28));
    const std::set<std::vector<Int>> expect{gens({2, 29}), gens({5, 8}), gens({4, 6, 25}),
                                            gens({4, 10, 21})};
    CHECK(gen_sets(classes) == expect);
    CHECK(enumerate_semigroups(Int(2)).size() == 1);
    CHECK(enumerate_semigroups(Int(2))[0].r == gens({2, 3}));
    CHECK(gen_sets(enumerate_semigroups(Int(16))) ==
          std::set<std::vector<Int>>{gens({2, 17}), gens({4, 6, 13})});
    CHECK(enumerate_semigroups(Int(7)).empty());
    CHECK(enumerate_semigroups(Int(0)).empty());
    CHECK(enumerate_semigroups(Int(-4)).empty());
}

TEST_CASE("every output validates with the right conductor and bounds") {
    for (long m = 2; m <= 60; m += 2) {
        for (const auto& s : enumerate_semigroups(Int(m))) {
            CHECK(validate(s.r).valid);
            REQUIRE(s.conductor.has_value());
            CHECK(*s.conductor == m);
            CHECK(Rat(s.r.back()) >= last_generator_lower_bound(s.h));
            CHECK(Rat(m) >= milnor_lower_bound(s.h));
        }
    }
}

TEST_CASE("sharp family saturates the bounds") {
    const SemigroupData s1 = sharp_family(1);
    CHECK(s1.r == gens({2, 3}));
    CHECK(*s1.conductor == 2);
    const SemigroupData s2 = sharp_family(2);
    CHECK(s2.r == gens({4, 6, 13}));
    CHECK(*s2.conductor == 16);
    const SemigroupData s3 = sharp_family(3);
    CHECK(s3.r == gens({8, 12, 26, 53}));
    CHECK(*s3.conductor == 84);
    for (int h = 1; h <= 5; ++h) {
        const SemigroupData s = sharp_family(h);
        CHECK(Rat(*s.conductor) == milnor_lower_bound(h));
        CHECK(Rat(s.r.back()) == last_generator_lower_bound(h));
        // the equivalent closed form: r_1 = 3*2^{h-1}, r_2 = 3*2^h + 2^{h-2}...,
        // r_{k+2} = 3*2^{h+k} + sum_{i=1}^{k+1} 2^{h+k-2i}
        if (h >= 1) CHECK(s.r[1] == Int(3) * (Int(1) << (h - 1)));
        for (int k = 0; k + 2 <= h; ++k) {
            Int expect = Int(3) * (Int(1) << (h + k));
            for (int i = 1; i <= k + 1 && h + k - 2 * i >= 0; ++i)
                expect += Int(1) << (h + k - 2 * i);
            CHECK(s.r[k + 2] == expect);
        }
    }
    // the sharp member appears in the enumeration of its own conductor
    for (int h = 1; h <= 3; ++h) {
        const SemigroupData s = sharp_family(h);
        CHECK(gen_sets(enumerate_semigroups(*s.conductor)).count(s.r) == 1);
    }
}

TEST_CASE("oracle equivalence on small Milnor numbers") {
    for (long m = 2; m <= 24; m += 2)
        CHECK(gen_sets(enumerate_semigroups(Int(m))) ==
              gen_sets(brute_force_enumerate(Int(m), Int(m + 1))));
    CHECK(brute_force_enumerate(Int(2), Int(3)).size() == 1);
    CHECK(brute_force_enumerate(Int(9), Int(10)).empty());
}

TEST_CASE("loop order does not change the output") {
    for (long m : {16L, 28L, 44L}) {
        const auto a =
            detail::enumerate_semigroups_impl(Int(m), nullptr, detail::LoopOrder::DThenR);
        const auto b =
            detail::enumerate_semigroups_impl(Int(m), nullptr, detail::LoopOrder::RThenD);
        CHECK(gen_sets(a) == gen_sets(b));
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].r == b[i].r);  // sorted
    }
}

TEST_CASE("per-level candidate counts respect the cardinality bound") {
    for (long m : {16L, 28L, 44L, 84L}) {
        EnumStats stats;
        enumerate_semigroups(Int(m), &stats);
        for (const auto& lvl : stats.levels) {
            const Rat bound = Rat(lvl.mu) - (milnor_lower_bound(lvl.h) / Rat(2) - Rat(1));
            CHECK(Rat(lvl.triples) <= bound);
        }
    }
}
