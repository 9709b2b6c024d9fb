#include "matchless/formulas.hpp"
#include "matchless/gallery.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace matchless;

TEST_CASE("binomials") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(52, 26) == Bigint("495918532948104"));
    // a value beyond 64 bits
    CHECK(binomial(100, 50) == Bigint("100891344545564193334812497256"));
}

TEST_CASE("kleitman values") {
    CHECK(kleitman_e_sm1(3, 2) == 26);  // e(5,3)
    CHECK(kleitman_e_sm(3, 2) == 52);   // e(6,3)
    CHECK(kleitman_e_sm1(2, 2) == 4);   // e(3,2) = 2^2
    for (int s = 2; s <= 6; ++s)
        for (int m = 1; m <= 4; ++m) CHECK(kleitman_e_sm(s, m) == 2 * kleitman_e_sm1(s, m));
}

TEST_CASE("quinn values") {
    CHECK(quinn_e(2) == 105);
    CHECK(quinn_e(1) == 12);
    for (int m = 1; m <= 6; ++m)
        CHECK(quinn_e(m) == size_of(ConstructionSpec::P(3, m, 2), 3L * m + 1));
}

TEST_CASE("conjecture 1 value") {
    CHECK(conjecture1_value(3, 1, 2).value == 12);
    CHECK(conjecture1_value(5, 1, 2).value == 248);
    CHECK(conjecture1_value(3, 1, 2).guaranteed);
    CHECK_FALSE(conjecture1_value(5, 1, 4).guaranteed);  // l > ceil(s/2) warns
    // l = 1 reduces to the Kleitman value with m+1 parts
    for (int s = 2; s <= 6; ++s)
        for (int m = 1; m <= 3; ++m) CHECK(conjecture1_value(s, m, 1).value == kleitman_e_sm1(s, m + 1));
}

TEST_CASE("hilton-milner size") {
    CHECK(hm_size(2, 5, 1) == 3);
    CHECK(hm_size(2, 6, 2) == 8);
    for (int k = 2; k <= 4; ++k)
        for (int s = 1; s <= 3; ++s)
            for (long n = std::max(s * k, s + k); n <= 20; ++n)
                CHECK(hm_size(k, n, s) == size_of(ConstructionSpec::H(k, s), n));
}

TEST_CASE("theorem 2 bound") {
    CHECK(thm2_bound(8, 2, 2, 3) == Rat(13));
    CHECK(thm2_bound(9, 2, 2, 4) == Rat(55, 4));
    CHECK_THROWS_AS(thm2_bound(10, 2, 2, 3), std::invalid_argument);  // n mismatch
    CHECK_THROWS_AS(thm2_bound(8, 2, 2, 2), std::invalid_argument);   // u < s+1

    // bound >= |H| whenever both apply (H witnesses nu = s, tau = s+1)
    for (int k = 2; k <= 3; ++k)
        for (int s = 2; s <= 3; ++s)
            for (int u = s + 1; u <= s + 4; ++u) {
                long n = static_cast<long>(u + s - 1) * (k - 1) + s + k;
                if (n < static_cast<long>(s) * k) continue;
                CHECK(thm2_bound(n, k, s, u) >= Rat(hm_size(k, n, s)));
            }
}

TEST_CASE("uniform matching values") {
    CHECK(emc_value(5, 2, 2).value == 4);
    CHECK(emc_value(8, 2, 3).value == 13);
    CHECK(emc_value(9, 3, 2).value == 28);
    CHECK(emc_value(9, 3, 2).guaranteed);  // EKR range n >= 2k
    CHECK_FALSE(emc_value(7, 2, 3).guaranteed);  // below (2s+1)k - s = 8
}

TEST_CASE("auxiliary values") {
    CHECK(frankl_level_bound(8, 2, 3) == 2 * binomial(7, 1));
    CHECK(prop0_deficiency(3, 2) == 4);
    CHECK(prop0_deficiency(5, 2) == 8);
    CHECK(corollary_f_sm1(5, 2, 2) == 26);
    CHECK(corollary_f_sm_s2(5, 3, 1) == 27);
    CHECK(thm5_threshold(2, 1, 3) == 12);
    // prop0 tightness: 2^4 - |P(3,1,2)| = 4
    CHECK(pow2(4) - size_of(ConstructionSpec::P(3, 1, 2), 4) == prop0_deficiency(3, 2));
    CHECK(pow2(8) - size_of(ConstructionSpec::P(5, 1, 2), 8) == prop0_deficiency(5, 2));
}

TEST_CASE("binomial inequality claims on the grid") {
    CHECK(check_eq116(5, 1).holds);
    CHECK(check_eq116(5, 1).lhs == Rat(76, 3));
    CHECK(check_eq116(5, 1).rhs == Rat(28));
    CHECK(check_eq167(5, 1, 2).holds);
    CHECK(check_eq167(5, 1, 2).lhs == Rat(12));  // (3/2) * 8
    CHECK(check_eq177(5, 1, 2).holds);
    CHECK(check_eq177(5, 1, 2).lhs == Rat(24));
    for (int s = 3; s <= 12; ++s)
        for (int m = 1; m <= 8; ++m) {
            auto c116 = check_eq116(s, m);
            if (c116.applicable) CHECK(c116.holds);
            for (int l = 2; l <= s; ++l) {
                auto c167 = check_eq167(s, m, l);
                if (c167.applicable) CHECK(c167.holds);
                auto c177 = check_eq177(s, m, l);
                if (c177.applicable) CHECK(c177.holds);
            }
        }
}

TEST_CASE("evaluators agree with materialized counts") {
    for (int s = 2; s <= 5; ++s)
        for (int m = 1; m <= 3; ++m) {
            // kleitman at sm-1 equals the size of the (>= m)-levels family
            long n = static_cast<long>(s) * m - 1;
            if (n >= 1 && n <= 20) CHECK(kleitman_e_sm1(s, m) == binomial_sum(n, m, n));
        }
    // B-size recursion (Prop. 4 structure) on a wide grid
    for (int s = 2; s <= 6; ++s)
        for (int n = 2; n <= 30; ++n)
            for (int q = s; q < n; ++q)
                CHECK(size_of(ConstructionSpec::B(q, s), n) ==
                      size_of(ConstructionSpec::B(q, s), n - 1) + size_of(ConstructionSpec::B(q - s, s), n - 1));
}
