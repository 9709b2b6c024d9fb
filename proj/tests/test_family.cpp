#include "matchless/family.hpp"
#include "matchless/gallery.hpp"
#include "matchless/invariants.hpp"
#include "matchless/random_families.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

using namespace matchless;

namespace {

SetFamily fam(int n, std::initializer_list<Mask> members) { return SetFamily(n, std::vector<Mask>(members)); }

}  // namespace

TEST_CASE("complement family") {
    CHECK(SetFamily::power_set(2).complement_family().size() == 0);
    SetFamily just_empty = fam(1, {0});
    SetFamily comp = just_empty.complement_family();
    CHECK(comp.size() == 1);
    CHECK(comp.contains(0b1));

    SetFamily p = build(ConstructionSpec::P(3, 1, 2), 4);
    SetFamily pbar = p.complement_family();
    REQUIRE(pbar.size() == 4);
    // missing sets are exactly {}, {2}, {3}, {4}
    CHECK(pbar.contains(0b0000));
    CHECK(pbar.contains(0b0010));
    CHECK(pbar.contains(0b0100));
    CHECK(pbar.contains(0b1000));
}

TEST_CASE("level profile") {
    SetFamily p = build(ConstructionSpec::P(3, 1, 2), 4);
    auto y = p.level_profile();
    CHECK(y == std::vector<std::int64_t>{1, 3, 0, 0, 0});

    auto yfull = SetFamily::power_set(3).level_profile();
    CHECK(yfull == std::vector<std::int64_t>{0, 0, 0, 0});

    auto yempty = SetFamily::empty(3).level_profile();
    CHECK(yempty == std::vector<std::int64_t>{1, 3, 3, 1});
}

TEST_CASE("upward closure") {
    SetFamily f = fam(2, {0b01});
    SetFamily up = f.upward_closure();
    CHECK(up.size() == 2);
    CHECK(up.contains(0b01));
    CHECK(up.contains(0b11));
    CHECK(up.upward_closure() == up);  // idempotent

    SetFamily g = fam(3, {0b110});  // {2,3}
    SetFamily gup = g.upward_closure();
    CHECK(gup.size() == 2);
    CHECK(gup.contains(0b111));
}

TEST_CASE("shift definition") {
    // {{2},{1,2}} --(1,2)--> {{1},{1,2}}
    SetFamily f = fam(2, {0b10, 0b11});
    SetFamily sh = f.shift(1, 2);
    CHECK(sh.contains(0b01));
    CHECK(sh.contains(0b11));
    CHECK_FALSE(sh.contains(0b10));

    // image already present: original kept
    SetFamily g = fam(3, {0b110, 0b101});  // {2,3},{1,3}
    CHECK(g.shift(1, 2) == g);

    CHECK_THROWS_AS(f.shift(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(f.shift(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(f.shift(1, 5), std::invalid_argument);
}

TEST_CASE("P is shift-invariant") {
    SetFamily p = build(ConstructionSpec::P(3, 1, 2), 4);
    for (int i = 1; i < 4; ++i)
        for (int j = i + 1; j <= 4; ++j) CHECK(p.shift(i, j) == p);
    CHECK(p.is_shifted());
}

TEST_CASE("full shift") {
    SetFamily f = fam(2, {0b10});
    CHECK(f.full_shift() == fam(2, {0b01}));

    SetFamily g = fam(4, {0b0011, 0b1100});  // {1,2},{3,4}
    SetFamily gs = g.full_shift();
    CHECK(gs.size() == 2);
    CHECK(gs.is_shifted());

    SetFamily p = build(ConstructionSpec::P(3, 1, 2), 4);
    CHECK(p.full_shift() == p);
}

TEST_CASE("shift properties over random families") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);  // n <= 8
        SetFamily f = random_family(n, rng, 0.3);
        int i = 1 + static_cast<int>(rng() % (n - 1));
        int j = i + 1 + static_cast<int>(rng() % (n - i));
        SetFamily sh = f.shift(i, j);
        CHECK(sh.size() == f.size());  // cardinality preservation
        CHECK(matching_number(sh).nu <= matching_number(f).nu);
    }
    // larger n for cardinality only
    for (int trial = 0; trial < 10; ++trial) {
        int n = 9 + static_cast<int>(rng() % 4);  // n <= 12
        SetFamily f = random_family(n, rng, 0.2);
        SetFamily sh = f.shift(1, n);
        CHECK(sh.size() == f.size());
    }
}

TEST_CASE("full shift terminates with decreasing potential") {
    // potential: sum over members of sum of elements; strictly decreases at
    // every changing shift
    std::mt19937_64 rng(11);
    auto potential = [](const SetFamily& f) {
        long p = 0;
        for (Mask m : f.members())
            for (int e : elements_of(m)) p += e;
        return p;
    };
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        SetFamily f = random_family(n, rng, 0.4);
        long before = potential(f);
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                SetFamily sh = f.shift(i, j);
                if (sh != f) {
                    CHECK(potential(sh) < before);
                    f = sh;
                    before = potential(f);
                }
            }
        SetFamily fix = f.full_shift();
        CHECK(fix.is_shifted());
        CHECK(fix.size() == f.size());
    }
}

TEST_CASE("shadow") {
    SetFamily f = fam(3, {0b011});
    SetFamily sh = f.shadow();
    CHECK(sh.size() == 2);
    CHECK(sh.contains(0b001));
    CHECK(sh.contains(0b010));

    SetFamily g = fam(3, {0b011, 0b101});
    CHECK(g.shadow().size() == 3);

    CHECK(fam(3, {0}).shadow().size() == 0);  // shadow of {emptyset} is empty
}

TEST_CASE("link") {
    // G = {{1,3,4},{2,3},{3,5}} on n=5
    SetFamily g = fam(5, {0b01101, 0b00110, 0b10100});
    SetFamily l1 = g.link(0b00001, 2);  // Q={1}, p=2
    CHECK(l1.size() == 1);
    CHECK(l1.contains(0b01100));  // {3,4}

    SetFamily l0 = g.link(0, 2);  // Q = {}, p = 2
    CHECK(l0.size() == 1);
    CHECK(l0.contains(0b10100));  // {3,5}

    CHECK_THROWS_AS(g.link(0b100, 2), std::invalid_argument);  // Q not inside [1,2]

    // A_1 link at Q = {} vanishes: every member meets [s]
    SetFamily a1 = build(ConstructionSpec::A(1, 2, 2), 6);
    CHECK(a1.link(0, 2).size() == 0);
    CHECK(a1.link(0, 3).size() == 0);
}

TEST_CASE("split on element") {
    SetFamily f = fam(2, {0b01, 0b11});  // {1},{1,2}
    auto [withn, withoutn] = f.split_on_element(2);
    CHECK(withn.size() == 1);
    CHECK(withn.contains(0b01));
    CHECK(withoutn.size() == 1);
    CHECK(withoutn.contains(0b01));

    auto [a, b] = SetFamily::power_set(3).split_on_element(3);
    CHECK(a == SetFamily::power_set(2));
    CHECK(b == SetFamily::power_set(2));

    CHECK_THROWS_AS(f.split_on_element(1), std::invalid_argument);
}

TEST_CASE("split/recombine round-trips") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        SetFamily f = random_family(n, rng, 0.5);
        auto [withn, withoutn] = f.split_on_element(n);
        CHECK(withn.size() + withoutn.size() == f.size());
        std::vector<Mask> members;
        for (Mask m : withn.members()) members.push_back(m | (1u << (n - 1)));
        for (Mask m : withoutn.members()) members.push_back(m);
        CHECK(SetFamily(n, members) == f);
    }
}

TEST_CASE("family text format round-trips") {
    SetFamily p = build(ConstructionSpec::P(3, 1, 2), 4);
    SetFamily back = read_family_from_string(family_to_string(p, FamilyFormat::Elements));
    CHECK(back == p);
    SetFamily back_hex = read_family_from_string(family_to_string(p, FamilyFormat::Hex));
    CHECK(back_hex == p);

    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        SetFamily f = random_family(n, rng, 0.5);
        CHECK(read_family_from_string(family_to_string(f, FamilyFormat::Elements)) == f);
        CHECK(read_family_from_string(family_to_string(f, FamilyFormat::Hex)) == f);
    }

    SetFamily e = read_family_from_string("n=3\n{}\n1,3\n");
    CHECK(e.size() == 2);
    CHECK(e.contains(0));
    CHECK(e.contains(0b101));
    CHECK_THROWS_AS(read_family_from_string("m=3\n1\n"), std::invalid_argument);
    CHECK_THROWS_AS(read_family_from_string("n=2\n5\n"), std::invalid_argument);
}

TEST_CASE("minimal members") {
    SetFamily p = build(ConstructionSpec::P(3, 1, 2), 4);
    auto mins = p.minimal_members();
    // minimal members of P(3,1,2): {1} and the three 2-sets avoiding 1
    REQUIRE(mins.size() == 4);
    SetFamily up = SetFamily(4, mins).upward_closure();
    CHECK(up == p);
}

TEST_CASE("ground size bounds") {
    CHECK_THROWS_AS(SetFamily(0), std::invalid_argument);
    CHECK_THROWS_AS(SetFamily(25), std::invalid_argument);
}
