#include "matchless/circle.hpp"
#include "matchless/gallery.hpp"
#include "matchless/random_families.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

using namespace matchless;

TEST_CASE("chain decomposition") {
    // s=5, m=1, n=8: one chain of 8 arcs
    auto dec1 = chain_decompose(CircularPermutation::identity(8), 5, 1);
    CHECK(dec1.d == 1);
    CHECK(dec1.nbar == 8);
    REQUIRE(dec1.chains.size() == 1);

    // s=4, m=2, n=10: two chains of length 5
    auto dec2 = chain_decompose(CircularPermutation::identity(10), 4, 2);
    CHECK(dec2.d == 2);
    CHECK(dec2.nbar == 5);
    REQUIRE(dec2.chains.size() == 2);

    // s=4, m=1, n=6: single chain of 6
    auto dec3 = chain_decompose(CircularPermutation::identity(6), 4, 1);
    CHECK(dec3.d == 1);
    CHECK(dec3.nbar == 6);

    CHECK_THROWS_AS(chain_decompose(CircularPermutation::identity(7), 5, 1), std::invalid_argument);
}

TEST_CASE("chains partition the arc indices") {
    std::mt19937_64 rng(61);
    for (int s = 3; s <= 6; ++s)
        for (int m = 1; m <= 3; ++m) {
            int n = s * m + s - 2;
            if (n > 12) continue;
            auto dec = chain_decompose(CircularPermutation::random(n, rng), s, m);
            std::vector<int> seen(static_cast<std::size_t>(n), 0);
            for (const auto& chain : dec.chains) {
                CHECK(static_cast<int>(chain.size()) == dec.nbar);
                for (int pos : chain) ++seen[static_cast<std::size_t>(pos)];
            }
            CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
        }
}

TEST_CASE("f profile basics") {
    // R = {}: f_1 = 0, case (ii)
    FProfile empty = f_profile(0, 8, 5);
    CHECK(empty.f[0] == 8);
    CHECK(empty.case_ii);
    CHECK(empty.claim_holds);

    // nbar=8, s=5, R={0}: f_1 = 5, f_0 = 3 = t, case (i)
    FProfile one = f_profile(0b1, 8, 5);
    CHECK(one.f[1] == 5);
    CHECK(one.f[0] == 3);
    CHECK(one.t == 3);
    CHECK(one.case_i);

    // skipped when t is out of range
    FProfile skip = f_profile(0b1, 10, 5);  // 10 mod 5 = 0
    CHECK_FALSE(skip.claim_applicable);
    CHECK_FALSE(skip.notice.empty());
}

TEST_CASE("window conservation and the degree identity") {
    std::mt19937_64 rng(67);
    for (int s = 3; s <= 6; ++s)
        for (int nbar = s; nbar <= 12; ++nbar)
            for (int trial = 0; trial < 40; ++trial) {
                std::uint32_t r_mask = static_cast<std::uint32_t>(rng()) & ((1u << nbar) - 1);
                FProfile prof = f_profile(r_mask, nbar, s);
                CHECK(std::accumulate(prof.f.begin(), prof.f.end(), std::int64_t{0}) == nbar);
                bool high = false;
                for (int b = 3; b <= s; ++b)
                    if (prof.f[static_cast<std::size_t>(b)] > 0) high = true;
                if (!high && prof.f[2] == 0) CHECK(prof.f[1] == popcount(r_mask) * s);
            }
}

TEST_CASE("three-case claim exhaustive on moderate chains") {
    for (int s = 3; s <= 6; ++s)
        for (int nbar = s; nbar <= 12; ++nbar) {
            int t = nbar % s;
            if (!(1 <= t && t < s - 1)) continue;
            for (std::uint32_t r_mask = 0; r_mask < (1u << nbar); ++r_mask) {
                FProfile prof = f_profile(r_mask, nbar, s);
                REQUIRE(prof.claim_applicable);
                if (!prof.claim_holds) {
                    CAPTURE(s, nbar, r_mask);
                    FAIL("claim violated");
                }
            }
        }
}

TEST_CASE("x profile of P(5,1,2) under the identity permutation") {
    SetFamily p = build(ConstructionSpec::P(5, 1, 2), 8);
    CircleTrace tr = x_profile(p, CircularPermutation::identity(8), 5, 1);
    CHECK(tr.d == 1);
    CHECK(tr.x[4] == 5);
    CHECK(tr.x[5] == 3);
    CHECK(tr.x[0] + tr.x[1] + tr.x[2] + tr.x[3] == 0);
    CHECK(std::accumulate(tr.x.begin(), tr.x.end(), std::int64_t{0}) == 8);
}

TEST_CASE("x profile degenerate families") {
    // family with no 1-sets at all: every window has all arcs outside
    SetFamily none = SetFamily::from_predicate(8, [](Mask m) { return popcount(m) >= 2; });
    CircleTrace tr = x_profile(none, CircularPermutation::identity(8), 5, 1);
    CHECK(tr.x[5] == 8);
    // all 1-sets present: x_0 = n
    SetFamily all = SetFamily::power_set(8);
    CircleTrace tr2 = x_profile(all, CircularPermutation::identity(8), 5, 1);
    CHECK(tr2.x[0] == 8);
}

TEST_CASE("x totals are chain sums") {
    std::mt19937_64 rng(71);
    SetFamily p = build(ConstructionSpec::P(4, 2, 2), 10);
    for (int trial = 0; trial < 20; ++trial) {
        CircleTrace tr = x_profile(p, CircularPermutation::random(10, rng), 4, 2);
        CHECK(tr.d == 2);
        for (int i = 0; i <= 4; ++i)
            CHECK(tr.x[static_cast<std::size_t>(i)] == tr.chain_x[0][static_cast<std::size_t>(i)] +
                                                           tr.chain_x[1][static_cast<std::size_t>(i)]);
        CHECK(std::accumulate(tr.x.begin(), tr.x.end(), std::int64_t{0}) == 10);
    }
}

TEST_CASE("lemma 4 equality at P(5,1,2) under identity") {
    SetFamily p = build(ConstructionSpec::P(5, 1, 2), 8);
    CheckReport rep = check_lemma4(p, CircularPermutation::identity(8), 5, 1);
    CHECK(rep.all_ok());
    // LHS = x_5 = 3 = s-2 exactly
    CHECK(rep.lines[1].lhs == "3");
    CHECK(rep.lines[1].rhs == "3");
}

TEST_CASE("lemma 4 over random permutations") {
    std::mt19937_64 rng(73);
    SetFamily p = build(ConstructionSpec::P(5, 1, 2), 8);
    for (int trial = 0; trial < 100; ++trial)
        CHECK(check_lemma4(p, CircularPermutation::random(8, rng), 5, 1).all_ok());

    SetFamily p42 = build(ConstructionSpec::P(4, 2, 2), 10);
    for (int trial = 0; trial < 50; ++trial)
        CHECK(check_lemma4(p42, CircularPermutation::random(10, rng), 4, 2).all_ok());

    // gate: s = 4 with odd m refused
    CHECK_THROWS_AS(check_lemma4(p, CircularPermutation::identity(8), 4, 1), std::invalid_argument);
}

TEST_CASE("lemma 4 over random small-matching families") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 25; ++trial) {
        SetFamily f = random_monotone_with_small_matching(8, 5, rng);
        CHECK(check_lemma4(f, CircularPermutation::random(8, rng), 5, 1).all_ok());
    }
}

TEST_CASE("averaging bound, equality at P(5,1,2)") {
    SetFamily p = build(ConstructionSpec::P(5, 1, 2), 8);
    CheckReport rep = averaging_check(p, 5, 1, StatsMode::Exact);
    CHECK(rep.all_ok());
    CHECK(rep.lines[1].lhs == "3/8");
    CHECK(rep.lines[1].rhs == "3/8");

    // family missing all m-sets: X_s = 1 >= (s-2)/n
    SetFamily none = SetFamily::from_predicate(8, [](Mask m) { return popcount(m) >= 2; });
    CHECK(averaging_check(none, 5, 1, StatsMode::Exact).all_ok());

    // sampled mode reports but never fails
    CheckReport samp = averaging_check(p, 5, 1, StatsMode::Sample, 500, 7);
    CHECK(samp.all_ok());
}

TEST_CASE("averaging consistency: permutation sums match density sums") {
    // summing the eq19 left-hand side over all sigma equals n * n! * (eq18
    // left-hand side); checked at (s,m) = (4,1) by full enumeration
    int s = 4, m = 1, n = 6;
    SetFamily f = build(ConstructionSpec::P(4, 1, 2), 6);
    Rat total = 0;
    CircularPermutation sigma = CircularPermutation::identity(n);
    long perms = 0;
    do {
        CircleTrace tr = x_profile(f, sigma, s, m);
        total += circle_lhs(tr.x, s);
        ++perms;
    } while (std::next_permutation(sigma.sigma.begin(), sigma.sigma.end()));
    REQUIRE(perms == 720);

    TupleClassStats st = tuple_stats_exact(f, Partition::equal(s, m));
    Rat density_lhs = st.X(1) + st.X(s);
    for (int i = 1; i <= s - 2; ++i) density_lhs += Rat(Bigint(2 * i - 3), Bigint(2)) * st.X(i);
    CHECK(total == Rat(Bigint(n) * factorial(n)) * density_lhs);
}

TEST_CASE("incidence identity at s=4, m=1") {
    IncidenceReport rep = incidence_check(4, 1);
    CHECK(rep.expected == 12);
    CHECK(rep.tuples_seen == 360);
    CHECK(rep.all_ok());
}
