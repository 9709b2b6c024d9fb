#pragma once

// Katona circle machinery at n = sm+s-2: the vertices sigma(1..n) sit on a
// circle, D_i is the m-arc starting at position i, and stepping by m splits
// the n arcs into d = gcd(m, s-2) closed chains of length nbar = n/d. On
// each chain, windows of s consecutive arcs give s-tuples of pairwise
// disjoint m-sets; classifying windows by how many of their arcs lie in the
// family yields the x-profile, for which the s-2 lower bound holds for
// every permutation. Averaged over all permutations this becomes the
// density bound on X_i(pi_e); the per-tuple incidence count n (m!)^s (s-2)!
// is the exchange rate between the two sides.
//
// Arc indices and chain arithmetic are 0-based internally (mod n, mod
// nbar); 1-based circular indices are translated at the boundary.

#include "matchless/bigmath.hpp"
#include "matchless/family.hpp"
#include "matchless/invariants.hpp"
#include "matchless/partition_stats.hpp"
#include "matchless/subset.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace matchless {

struct CircularPermutation {
    std::vector<int> sigma;  // sigma[pos] in [1,n], a bijection

    int n() const { return static_cast<int>(sigma.size()); }

    void validate() const {
        std::vector<bool> seen(sigma.size() + 1, false);
        for (int v : sigma) {
            if (v < 1 || v > n() || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("sigma is not a permutation of [n]");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    static CircularPermutation identity(int n) {
        CircularPermutation p;
        p.sigma.resize(static_cast<std::size_t>(n));
        std::iota(p.sigma.begin(), p.sigma.end(), 1);
        return p;
    }

    static CircularPermutation random(int n, std::mt19937_64& rng) {
        CircularPermutation p = identity(n);
        std::shuffle(p.sigma.begin(), p.sigma.end(), rng);
        return p;
    }

    // Mask of the m-arc starting at 0-based position `pos`.
    Mask arc_mask(int pos, int m) const {
        Mask a = 0;
        for (int t = 0; t < m; ++t) a |= 1u << (sigma[static_cast<std::size_t>((pos + t) % n())] - 1);
        return a;
    }
};

struct ArcChainDecomposition {
    int d = 1;     // gcd(m, s-2)
    int nbar = 0;  // n/d, length of each chain
    std::vector<std::vector<int>> chains;  // chain j: arc start positions j, j+m, ... (0-based, mod n)
};

inline ArcChainDecomposition chain_decompose(const CircularPermutation& sigma, int s, int m) {
    sigma.validate();
    int n = sigma.n();
    if (s < 3 || m < 1) throw std::invalid_argument("chain_decompose: s >= 3, m >= 1 required");
    if (n != s * m + s - 2) throw std::invalid_argument("chain_decompose: need n = sm+s-2");
    ArcChainDecomposition dec;
    dec.d = std::gcd(m, s - 2);
    dec.nbar = n / dec.d;
    dec.chains.resize(static_cast<std::size_t>(dec.d));
    for (int j = 0; j < dec.d; ++j) {
        auto& chain = dec.chains[static_cast<std::size_t>(j)];
        chain.reserve(static_cast<std::size_t>(dec.nbar));
        int pos = j;
        for (int r = 0; r < dec.nbar; ++r) {
            chain.push_back(pos);
            pos = (pos + m) % n;
        }
        if ((chain[0] + static_cast<long>(dec.nbar) * m) % n != chain[0])
            throw std::logic_error("chain does not close after nbar steps");
    }
    return dec;
}

// --- window profile of a subset R of Z_nbar --------------------------------

struct FProfile {
    std::vector<std::int64_t> f;  // f_b = #windows with |C_r cap R| = b, b = 0..s
    int t = -1;                   // nbar mod s, when in [1, s-2]
    bool claim_applicable = false;
    bool case_i = false, case_ii = false, case_iii = false;
    bool claim_holds = false;
    std::string notice;
};

// Windows C_r = {r, ..., r+s-1} mod nbar. The three-case claim (f_0 >= t,
// or f_1 = 0, or f_2 >= 2) is checked only when t = nbar mod s lies in
// [1, s-2] and nbar >= s; otherwise the profile is returned with a notice.
inline FProfile f_profile(std::uint32_t r_mask, int nbar, int s) {
    if (nbar < 1 || nbar > 31) throw std::invalid_argument("f_profile: nbar in [1,31] required");
    if (s < 2) throw std::invalid_argument("f_profile: s >= 2 required");
    FProfile prof;
    prof.f.assign(static_cast<std::size_t>(s) + 1, 0);
    for (int r = 0; r < nbar; ++r) {
        int b = 0;
        for (int off = 0; off < std::min(s, nbar); ++off)
            if ((r_mask >> ((r + off) % nbar)) & 1u) ++b;
        ++prof.f[static_cast<std::size_t>(std::min(b, s))];
    }
    int t = nbar % s;
    if (nbar >= s && 1 <= t && t < s - 1) {
        prof.t = t;
        prof.claim_applicable = true;
        prof.case_i = prof.f[0] >= t;
        prof.case_ii = prof.f[1] == 0;
        prof.case_iii = prof.f[2] >= 2;
        prof.claim_holds = prof.case_i || prof.case_ii || prof.case_iii;
    } else {
        prof.notice = nbar < s ? "nbar < s: windows are not honest s-arcs, claim skipped"
                               : "t = nbar mod s outside [1, s-2], claim skipped";
    }
    return prof;
}

// --- x-profile of a family along a permutation -----------------------------

struct CircleTrace {
    int d = 1, nbar = 0;
    std::vector<std::uint32_t> chain_r;            // per chain: R = {r : D_{j+rm} in F}
    std::vector<std::vector<std::int64_t>> chain_x;  // per chain: x_i^j, i = 0..s
    std::vector<std::int64_t> x;                   // totals, sum_i x_i = n
};

inline CircleTrace x_profile(const SetFamily& f, const CircularPermutation& sigma, int s, int m) {
    if (f.n() != sigma.n()) throw std::invalid_argument("x_profile: family and permutation sizes differ");
    ArcChainDecomposition dec = chain_decompose(sigma, s, m);
    CircleTrace tr;
    tr.d = dec.d;
    tr.nbar = dec.nbar;
    tr.x.assign(static_cast<std::size_t>(s) + 1, 0);
    for (const auto& chain : dec.chains) {
        std::uint32_t r_mask = 0;
        for (int r = 0; r < dec.nbar; ++r)
            if (f.contains(sigma.arc_mask(chain[static_cast<std::size_t>(r)], m))) r_mask |= 1u << r;
        std::vector<std::int64_t> xj(static_cast<std::size_t>(s) + 1, 0);
        for (int r = 0; r < dec.nbar; ++r) {
            int in_fam = 0;
            for (int off = 0; off < s; ++off)
                if ((r_mask >> ((r + off) % dec.nbar)) & 1u) ++in_fam;
            ++xj[static_cast<std::size_t>(s - in_fam)];
        }
        for (int i = 0; i <= s; ++i) tr.x[static_cast<std::size_t>(i)] += xj[static_cast<std::size_t>(i)];
        tr.chain_r.push_back(r_mask);
        tr.chain_x.push_back(std::move(xj));
    }
    return tr;
}

// LHS of the circle inequality: x_1 + sum_{i=1}^{s-2} (i - 3/2) x_i + x_s.
inline Rat circle_lhs(const std::vector<std::int64_t>& x, int s) {
    Rat lhs = Rat(Bigint(x[1]));
    for (int i = 1; i <= s - 2; ++i) lhs += Rat(Bigint(2 * i - 3), Bigint(2)) * Rat(Bigint(x[static_cast<std::size_t>(i)]));
    lhs += Rat(Bigint(x[static_cast<std::size_t>(s)]));
    return lhs;
}

// x_1 + sum (i-3/2) x_i + x_s >= s-2 for every permutation (and >= (s-2)/d
// per chain), valid for s >= 5, and for s = 4 with even m (then d = 2 and
// each chain contributes at least 1).
inline CheckReport check_lemma4(const SetFamily& f, const CircularPermutation& sigma, int s, int m) {
    if (!(s >= 5 || (s == 4 && m % 2 == 0)))
        throw std::invalid_argument("check_lemma4: needs s >= 5, or s = 4 with even m");
    CheckReport rep;
    int nu = matching_number(f).nu;
    rep.add("precondition nu < s", nu < s, Rat(nu), Rat(s));

    CircleTrace tr = x_profile(f, sigma, s, m);
    rep.add("eq19: x-profile lower bound", circle_lhs(tr.x, s) >= Rat(s - 2), circle_lhs(tr.x, s), Rat(s - 2));
    for (int j = 0; j < tr.d; ++j) {
        Rat lhs = circle_lhs(tr.chain_x[static_cast<std::size_t>(j)], s);
        Rat rhs = Rat(Bigint(s - 2), Bigint(tr.d));
        rep.add("eq192 chain " + std::to_string(j), lhs >= rhs, lhs, rhs);
    }
    return rep;
}

// X_1 + sum_{i=1}^{s-2} (i-3/2) X_i + X_s >= (s-2)/n over the equal
// partition, by averaging the per-permutation bound. Exact mode asserts;
// sample mode only reports the estimate.
inline CheckReport averaging_check(const SetFamily& f, int s, int m, StatsMode mode, long trials = 0,
                                   std::uint64_t seed = 0) {
    long n = static_cast<long>(s) * m + s - 2;
    if (f.n() != n) throw std::invalid_argument("averaging_check: need n = sm+s-2");
    if (!(s >= 5 || (s == 4 && m % 2 == 0)))
        throw std::invalid_argument("averaging_check: needs s >= 5, or s = 4 with even m");
    CheckReport rep;
    int nu = matching_number(f).nu;
    rep.add("precondition nu < s", nu < s, Rat(nu), Rat(s));

    TupleClassStats st = tuple_stats(f, Partition::equal(s, m), mode, trials, seed);
    Rat lhs = st.X(1) + st.X(s);
    for (int i = 1; i <= s - 2; ++i) lhs += Rat(Bigint(2 * i - 3), Bigint(2)) * st.X(i);
    Rat rhs = Rat(Bigint(s - 2), Bigint(n));
    if (st.sampled)
        rep.lines.push_back({"eq18 (sampled estimate, not asserted)", true, to_string(lhs), to_string(rhs)});
    else
        rep.add("eq18: density lower bound", lhs >= rhs, lhs, rhs);
    return rep;
}

// --- incidence identity -----------------------------------------------------

struct IncidenceReport {
    Bigint expected{0};
    Bigint tuples_seen{0};
    Bigint tuples_expected{0};
    bool counts_uniform = false;
    bool all_ok() const { return counts_uniform && tuples_seen == tuples_expected; }
};

// Every ordered s-tuple of disjoint m-sets lies in C(sigma) for exactly
// n (m!)^s (s-2)! permutations; verified by enumerating all n!
// permutations (n <= 8).
inline IncidenceReport incidence_check(int s, int m) {
    int n = s * m + s - 2;
    if (n > 8) throw std::invalid_argument("incidence_check: full enumeration needs n <= 8");
    IncidenceReport rep;
    Bigint fm = factorial(m);
    Bigint pieces = 1;
    for (int i = 0; i < s; ++i) pieces *= fm;
    rep.expected = Bigint(n) * pieces * factorial(s - 2);
    rep.tuples_expected = tuple_space_size(Partition::equal(s, m), n);

    std::map<std::vector<Mask>, std::int64_t> counts;
    CircularPermutation sigma = CircularPermutation::identity(n);
    std::vector<Mask> key(static_cast<std::size_t>(s));
    do {
        ArcChainDecomposition dec = chain_decompose(sigma, s, m);
        for (const auto& chain : dec.chains) {
            for (int r = 0; r < dec.nbar; ++r) {
                for (int off = 0; off < s; ++off)
                    key[static_cast<std::size_t>(off)] =
                        sigma.arc_mask(chain[static_cast<std::size_t>((r + off) % dec.nbar)], m);
                ++counts[key];
            }
        }
    } while (std::next_permutation(sigma.sigma.begin(), sigma.sigma.end()));

    rep.tuples_seen = static_cast<long>(counts.size());
    rep.counts_uniform = true;
    for (const auto& [tuple, cnt] : counts)
        if (Bigint(cnt) != rep.expected) rep.counts_uniform = false;
    return rep;
}

}  // namespace matchless
