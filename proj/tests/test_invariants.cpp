#include "matchless/gallery.hpp"
#include "matchless/invariants.hpp"
#include "matchless/random_families.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace matchless;

namespace {

SetFamily fam(int n, std::initializer_list<Mask> members) { return SetFamily(n, std::vector<Mask>(members)); }

// Independent oracle: maximum disjoint subfamily by plain enumeration over
// all members (no minimal-member reduction, no bound pruning).
int nu_oracle(const SetFamily& f) {
    std::vector<Mask> mem = f.members();
    int best = 0;
    auto rec = [&](auto&& self, std::size_t idx, Mask used, int cnt) -> void {
        best = std::max(best, cnt);
        for (std::size_t i = idx; i < mem.size(); ++i)
            if (!(mem[i] & used)) self(self, i + 1, used | mem[i], cnt + 1);
    };
    rec(rec, 0, 0, 0);
    return best;
}

}  // namespace

TEST_CASE("matching number basics") {
    CHECK(matching_number(fam(3, {0b011, 0b110, 0b101})).nu == 1);  // pairwise intersecting
    CHECK(matching_number(SetFamily::empty(3)).nu == 0);

    SetFamily p = build(ConstructionSpec::P(3, 1, 2), 4);
    auto mr = matching_number(p);
    CHECK(mr.nu == 2);
    REQUIRE(mr.witness.sets.size() == 2);
    CHECK((mr.witness.sets[0] & mr.witness.sets[1]) == 0);
    for (Mask m : mr.witness.sets) CHECK(p.contains(m));

    // all nonempty subsets of [3]: three singletons
    SetFamily all3 = SetFamily::from_predicate(3, [](Mask m) { return m != 0; });
    CHECK(matching_number(all3).nu == 3);

    // empty set joins any disjoint collection
    CHECK(matching_number(SetFamily::power_set(3)).nu == 4);
    CHECK(matching_number(fam(2, {0})).nu == 1);
}

TEST_CASE("matching number agrees with plain enumeration on n <= 5") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        SetFamily f = random_family(n, rng, 0.35);
        CHECK(matching_number(f).nu == nu_oracle(f));
    }
}

TEST_CASE("covering number") {
    CHECK(covering_number(fam(4, {0b0011, 0b1100})).tau == 2);
    CHECK(covering_number(SetFamily::empty(4)).tau == 0);
    CHECK(covering_number(fam(2, {0})).uncoverable);

    // tau(A_1^(2)(6,2)) = 2
    auto cov_a1 = covering_number(build(ConstructionSpec::A(1, 2, 2), 6));
    CHECK(cov_a1.tau == 2);

    // tau(H^(2)(6,2)) = 3, verified against exhaustive cover search
    SetFamily h = build(ConstructionSpec::H(2, 2), 6);
    auto cov = covering_number(h);
    CHECK(cov.tau == 3);
    for (Mask m : h.members()) CHECK((m & cov.witness.cover) != 0);
    // no 2-element cover exists
    bool any2 = false;
    for_each_subset_of_size(full_mask(6), 2, [&](Mask t) {
        bool hits_all = true;
        for (Mask m : h.members())
            if (!(m & t)) hits_all = false;
        any2 = any2 || hits_all;
    });
    CHECK_FALSE(any2);
}

TEST_CASE("tau >= nu for families without the empty set") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        SetFamily raw = random_family(n, rng, 0.3);
        std::vector<Mask> nonempty;
        for (Mask m : raw.members())
            if (m != 0) nonempty.push_back(m);
        SetFamily f(n, nonempty);
        if (f.size() == 0) continue;
        CHECK(covering_number(f).tau >= matching_number(f).nu);
    }
}

TEST_CASE("D property") {
    // B(5,3,2) = {|F| >= 2} is D(2,3)
    SetFamily b = build(ConstructionSpec::B(3, 2), 5);
    CHECK(has_D_property(b, 2, 3).holds);

    // family with {} and a small set fails D(2,q)
    SetFamily f = fam(4, {0, 0b0011});
    auto d = has_D_property(f, 2, 2);
    CHECK_FALSE(d.holds);
    REQUIRE(d.violating.size() == 2);

    // q >= n: D(s,q) iff nu < s
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        SetFamily g = random_family(n, rng, 0.4);
        for (int s = 2; s <= 4; ++s) CHECK(has_D_property(g, s, n).holds == (matching_number(g).nu < s));
    }
}

TEST_CASE("D property monotone in q") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        SetFamily f = random_family(n, rng, 0.4);
        for (int q = 1; q <= n; ++q)
            if (has_D_property(f, 2, q).holds) CHECK(has_D_property(f, 2, q - 1).holds);
    }
}

TEST_CASE("D property preserved by shifting") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);  // n <= 8
        int s = 2 + static_cast<int>(rng() % 2);
        int q = 1 + static_cast<int>(rng() % n);
        SetFamily f = random_monotone_with_D(n, s, q, rng);
        REQUIRE(has_D_property(f, s, q).holds);
        int i = 1 + static_cast<int>(rng() % (n - 1));
        int j = i + 1 + static_cast<int>(rng() % (n - i));
        CHECK(has_D_property(f.shift(i, j), s, q).holds);
    }
}

TEST_CASE("cross-dependent and nested tuples") {
    // tight singleton case: s=2, k=2, N=4, u=3
    SetFamily f1 = fam(4, {0b0001});
    auto rep = check_cross_dependent_nested({f1, f1}, 4, 2, 3);
    CHECK(rep.all_ok());
    CHECK(rep.lhs == 4);
    CHECK(rep.rhs == 4);

    // empty last family: inequality reduces to a sum bound
    SetFamily f2 = SetFamily::empty(4);
    auto rep2 = check_cross_dependent_nested({f1, f2}, 4, 2, 3);
    CHECK(rep2.nested_ok);
    CHECK(rep2.cross_dependent_ok);
    CHECK(rep2.inequality_ok);

    // distinct disjoint singletons are not cross-dependent
    SetFamily g1 = fam(4, {0b0001, 0b0010});
    SetFamily g2 = fam(4, {0b0010});
    auto rep3 = check_cross_dependent_nested({g1, g2}, 4, 2, 1);
    CHECK_FALSE(rep3.cross_dependent_ok);
    REQUIRE(rep3.disjoint_tuple.size() == 2);

    // nonuniform input rejected
    CHECK_THROWS_AS(check_cross_dependent_nested({fam(4, {0b0011}), f1}, 4, 2, 1), std::invalid_argument);
}

TEST_CASE("eq112 sweep over nested cross-dependent 1-uniform pairs on N=4") {
    // enumerate all pairs of families of singletons with F1 superset F2
    for (Mask m1 = 0; m1 < 16; ++m1)
        for (Mask m2 = 0; m2 < 16; ++m2) {
            if ((m1 & m2) != m2) continue;  // not nested
            std::vector<Mask> mem1, mem2;
            for (int e = 1; e <= 4; ++e) {
                if (contains(m1, e)) mem1.push_back(1u << (e - 1));
                if (contains(m2, e)) mem2.push_back(1u << (e - 1));
            }
            SetFamily f1(4, mem1), f2(4, mem2);
            for (int u = 1; u <= 3; ++u) {
                auto rep = check_cross_dependent_nested({f1, f2}, 4, 2, u);
                if (rep.cross_dependent_ok && rep.hypothesis_ok) CHECK(rep.inequality_ok);
            }
        }
}
