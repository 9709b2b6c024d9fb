#pragma once

// Partition statistics: for an ordered partition pi = (p_1,...,p_s) of
// x <= n, classify the ordered s-tuples of pairwise disjoint sets of type
// pi by how many components lie outside the family, giving densities
// X_i(pi) = |C_i(pi)| / n(pi) as exact rationals. On top of that sit the
// identity and inequality checkers for the deficiency chain: the basic sum
// identities, the y(m+u) lower bounds, the two three-level bounds at
// n = s(m+1)-l, and the (m-j, m+1, ..., m+1) level inequality.
//
// Tuples are ordered (n(pi) is the plain multinomial, nothing divided out),
// and exact enumeration runs over a memoized (stage, free-set) recursion.

#include "matchless/bigmath.hpp"
#include "matchless/family.hpp"
#include "matchless/formulas.hpp"
#include "matchless/invariants.hpp"
#include "matchless/subset.hpp"

#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace matchless {

struct Partition {
    std::vector<int> parts;  // p_1..p_s, all >= 1

    int s() const { return static_cast<int>(parts.size()); }
    int x() const { return std::accumulate(parts.begin(), parts.end(), 0); }

    void validate(int n) const {
        if (s() < 2) throw std::invalid_argument("partition needs s >= 2 parts");
        for (int p : parts)
            if (p < 1) throw std::invalid_argument("partition parts must be positive");
        if (x() > n) throw std::invalid_argument("partition total exceeds n");
    }

    bool is_pi_e(int m) const {
        for (int p : parts)
            if (p != m) return false;
        return true;
    }

    static Partition equal(int s, int m) { return Partition{std::vector<int>(static_cast<std::size_t>(s), m)}; }
};

// n(pi) = n! / ((n - sum p_r)! prod p_r!)
inline Bigint tuple_space_size(const Partition& pi, int n) {
    Bigint v = factorial(n) / factorial(n - pi.x());
    for (int p : pi.parts) v /= factorial(p);
    return v;
}

struct TupleClassStats {
    Partition pi;
    Bigint n_pi{0};                // total tuples (exact) or trials (sampled)
    std::vector<Bigint> counts;    // c_0..c_s
    bool sampled = false;
    std::uint64_t seed = 0;

    Rat X(int i) const { return Rat(counts[static_cast<std::size_t>(i)], n_pi); }

    std::vector<Rat> densities() const {
        std::vector<Rat> out;
        out.reserve(counts.size());
        for (std::size_t i = 0; i < counts.size(); ++i) out.push_back(Rat(counts[i], n_pi));
        return out;
    }
};

inline constexpr double kExactTupleBudget = 1e8;

// Exact classification of all ordered tuples of type pi.
inline TupleClassStats tuple_stats_exact(const SetFamily& f, const Partition& pi) {
    pi.validate(f.n());
    Bigint total = tuple_space_size(pi, f.n());
    if (Rat(total) > Rat(Bigint(static_cast<long long>(kExactTupleBudget))))
        throw std::invalid_argument("tuple_stats: exact mode over budget, n(pi) = " + to_string(total));

    int s = pi.s();
    // memo[(r, free)] -> counts of completions by number of out-of-family components
    std::vector<std::unordered_map<Mask, std::vector<std::int64_t>>> memo(static_cast<std::size_t>(s));
    auto rec = [&](auto&& self, int r, Mask free) -> std::vector<std::int64_t> {
        if (r == s) return {1};
        auto& layer = memo[static_cast<std::size_t>(r)];
        auto it = layer.find(free);
        if (it != layer.end()) return it->second;
        std::vector<std::int64_t> acc(static_cast<std::size_t>(s - r) + 1, 0);
        for_each_subset_of_size(free, pi.parts[static_cast<std::size_t>(r)], [&](Mask a) {
            std::vector<std::int64_t> sub = self(self, r + 1, free & ~a);
            int shift = f.contains(a) ? 0 : 1;
            for (std::size_t i = 0; i < sub.size(); ++i) acc[i + static_cast<std::size_t>(shift)] += sub[i];
        });
        layer.emplace(free, acc);
        return acc;
    };
    std::vector<std::int64_t> counts = rec(rec, 0, full_mask(f.n()));

    TupleClassStats stats;
    stats.pi = pi;
    stats.counts.assign(static_cast<std::size_t>(s) + 1, Bigint(0));
    Bigint sum = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        stats.counts[i] = counts[i];
        sum += counts[i];
    }
    stats.n_pi = sum;
    if (sum != total) throw std::logic_error("tuple_stats: enumeration disagrees with the multinomial count");
    return stats;
}

// Unbiased sampled estimate over `trials` uniformly random tuples. Never
// used in assertions; the sampled flag travels with the result.
inline TupleClassStats tuple_stats_sampled(const SetFamily& f, const Partition& pi, long trials,
                                           std::uint64_t seed) {
    pi.validate(f.n());
    if (trials < 1) throw std::invalid_argument("tuple_stats: trials >= 1 required");
    std::mt19937_64 rng(seed);
    int s = pi.s();
    TupleClassStats stats;
    stats.pi = pi;
    stats.sampled = true;
    stats.seed = seed;
    stats.counts.assign(static_cast<std::size_t>(s) + 1, Bigint(0));

    std::vector<int> pool;
    for (long t = 0; t < trials; ++t) {
        pool.clear();
        for (int e = 0; e < f.n(); ++e) pool.push_back(e);
        int out = 0;
        for (int r = 0; r < s; ++r) {
            Mask a = 0;
            for (int pick = 0; pick < pi.parts[static_cast<std::size_t>(r)]; ++pick) {
                std::uniform_int_distribution<std::size_t> dist(0, pool.size() - 1);
                std::size_t j = dist(rng);
                a |= 1u << pool[j];
                pool[j] = pool.back();
                pool.pop_back();
            }
            if (!f.contains(a)) ++out;
        }
        stats.counts[static_cast<std::size_t>(out)] += 1;
    }
    stats.n_pi = trials;
    return stats;
}

enum class StatsMode { Exact, Sample };

inline TupleClassStats tuple_stats(const SetFamily& f, const Partition& pi, StatsMode mode,
                                   long trials = 0, std::uint64_t seed = 0) {
    return mode == StatsMode::Exact ? tuple_stats_exact(f, pi) : tuple_stats_sampled(f, pi, trials, seed);
}

// --- checkers --------------------------------------------------------------

struct CheckLine {
    std::string what;
    bool ok;
    std::string lhs, rhs;
};

struct CheckReport {
    std::vector<CheckLine> lines;
    bool all_ok() const {
        for (const auto& l : lines)
            if (!l.ok) return false;
        return true;
    }
    void add(const std::string& what, bool ok, const Rat& lhs, const Rat& rhs) {
        lines.push_back({what, ok, to_string(lhs), to_string(rhs)});
    }
};

// Lemma 5 identities: sum_i X_i = 1 always; X_0 = 0 under nu(F) < s;
// sum_i i X_i = sum_r y(p_r)/C(n,p_r); and for pi = pi_e the level-m count
// identity y(m) = (1/s) C(n,m) sum_i i X_i.
inline CheckReport check_partition_identities(const SetFamily& f, const Partition& pi) {
    pi.validate(f.n());
    TupleClassStats st = tuple_stats_exact(f, pi);
    auto y = f.level_profile();
    int s = pi.s();
    CheckReport rep;

    Rat sum = 0, weighted = 0;
    for (int i = 0; i <= s; ++i) {
        sum += st.X(i);
        weighted += Rat(i) * st.X(i);
    }
    rep.add("sum_i X_i = 1", sum == 1, sum, Rat(1));

    int nu = matching_number(f).nu;
    if (nu < s) rep.add("X_0 = 0 (nu < s)", st.X(0) == 0, st.X(0), Rat(0));

    Rat rhs = 0;
    for (int p : pi.parts) rhs += Rat(Bigint(y[static_cast<std::size_t>(p)]), binomial(f.n(), p));
    rep.add("sum_i i X_i = sum_r y(p_r)/C(n,p_r)", weighted == rhs, weighted, rhs);

    if (!pi.parts.empty() && pi.is_pi_e(pi.parts[0])) {
        int m = pi.parts[0];
        Rat lhs = Rat(Bigint(y[static_cast<std::size_t>(m)]));
        Rat rhs16 = Rat(binomial(f.n(), m), Bigint(s)) * weighted;
        rep.add("y(m) = (1/s) C(n,m) sum_i i X_i", lhs == rhs16, lhs, rhs16);
    }
    return rep;
}

// y(m+u) >= (1/s) C(n,m+u) sum_{i=1}^{floor((s-l)/u)} X_i(pi_e), for
// n = sm+s-l, nu(F) < s, 1 <= u <= s-l. The sum limit takes the floor: the
// redistribution argument needs u*i <= s-l.
inline CheckReport check_lemma6(const SetFamily& f, int s, int m, int l, int u) {
    long n = static_cast<long>(s) * m + s - l;
    if (f.n() != n) throw std::invalid_argument("check_lemma6: need n = sm+s-l");
    if (!(1 <= u && u <= s - l)) throw std::invalid_argument("check_lemma6: need 1 <= u <= s-l");
    CheckReport rep;
    int nu = matching_number(f).nu;
    rep.add("precondition nu < s", nu < s, Rat(nu), Rat(s));

    TupleClassStats st = tuple_stats_exact(f, Partition::equal(s, m));
    auto y = f.level_profile();
    Rat xsum = 0;
    for (int i = 1; i <= (s - l) / u; ++i) xsum += st.X(i);
    Rat lhs = Rat(Bigint(y[static_cast<std::size_t>(m + u)]));
    Rat rhs = Rat(binomial(n, m + u), Bigint(s)) * xsum;
    rep.add("y(m+u) >= (1/s) C(n,m+u) sum X_i", lhs >= rhs, lhs, rhs);
    return rep;
}

enum class Claim2Variant { Eq211, Eq57 };

// Eq211 (n = s(m+1)-l, s >= 3), as printed:
//   y(m) + y(m+1)/2 + y(m+2) >=
//     (1/s) C(n,m) ( s-l+1 + sum_{i=s-l+2}^{s} X_i(pi_e) )
// For odd s-l the printed constant overshoots: the underlying chain (the
// level-m identity plus the y(m+1), y(m+2) bounds) gives the middle density
// X_{(s-l+1)/2} the coefficient s-l+1/2 only, and the printed form is
// genuinely false there — on [4] with s=3, l=2, the twelve sets meeting
// {1,2} give LHS 5/2 against RHS 8/3. Both forms are reported: the
// "as printed" line, and the "proof-exact" line with the RHS lowered by
// (1/2) X_{(s-l+1)/2} when s-l is odd (they coincide for even s-l).
// Eq57 (n = s(m+1)-2, s >= 4):
//   y(m) + (s-5/2) C(n,m)/C(n,m+1) y(m+1) + y(m+2) >=
//     (1/s) C(n,m) ( s-1 + sum_{i=1}^{s-2} (i-3/2) X_i + X_1 + X_s )
inline CheckReport check_claim2(const SetFamily& f, int s, int m, int l, Claim2Variant variant) {
    CheckReport rep;
    long n;
    if (variant == Claim2Variant::Eq211) {
        if (s < 3 || m < 1 || !(1 <= l && l <= s))
            throw std::invalid_argument("check_claim2 eq211: s >= 3, m >= 1, 1 <= l <= s");
        n = static_cast<long>(s) * (m + 1) - l;
    } else {
        if (s < 4 || m < 1) throw std::invalid_argument("check_claim2 eq57: s >= 4, m >= 1");
        l = 2;
        n = static_cast<long>(s) * (m + 1) - 2;
    }
    if (f.n() != n) throw std::invalid_argument("check_claim2: family ground set does not match s(m+1)-l");
    int nu = matching_number(f).nu;
    rep.add("precondition nu < s", nu < s, Rat(nu), Rat(s));

    TupleClassStats st = tuple_stats_exact(f, Partition::equal(s, m));
    auto y = f.level_profile();
    Rat ym = Rat(Bigint(y[static_cast<std::size_t>(m)]));
    Rat ym1 = Rat(Bigint(y[static_cast<std::size_t>(m + 1)]));
    Rat ym2 = Rat(Bigint(y[static_cast<std::size_t>(m + 2)]));

    if (variant == Claim2Variant::Eq211) {
        Rat lhs = ym + Rat(1, 2) * ym1 + ym2;
        Rat xsum = 0;
        for (int i = s - l + 2; i <= s; ++i) xsum += st.X(i);
        Rat rhs = Rat(binomial(n, m), Bigint(s)) * (Rat(s - l + 1) + xsum);
        rep.add("eq211 (as printed)", lhs >= rhs, lhs, rhs);
        Rat rhs_exact = rhs;
        if ((s - l) % 2 == 1)
            rhs_exact -= Rat(binomial(n, m), Bigint(s)) * Rat(1, 2) * st.X((s - l + 1) / 2);
        rep.add("eq211 (proof-exact form)", lhs >= rhs_exact, lhs, rhs_exact);
    } else {
        Rat coef = Rat(Bigint(2 * s - 5), Bigint(2)) * Rat(binomial(n, m), binomial(n, m + 1));
        Rat lhs = ym + coef * ym1 + ym2;
        Rat inner = Rat(s - 1);
        for (int i = 1; i <= s - 2; ++i) inner += Rat(Bigint(2 * i - 3), Bigint(2)) * st.X(i);
        inner += st.X(1) + st.X(s);
        Rat rhs = Rat(binomial(n, m), Bigint(s)) * inner;
        rep.add("eq57", lhs >= rhs, lhs, rhs);
    }
    return rep;
}

// With the partition (m-j, m+1, ..., m+1) at n = sm+s-2:
//   y(m-j) + (s-1) C(n,m-j)/C(n,m+1) y(m+1) >= C(n,m-j), 1 <= j <= m.
inline CheckReport check_eq14(const SetFamily& f, int s, int m, int j) {
    long n = static_cast<long>(s) * m + s - 2;
    if (f.n() != n) throw std::invalid_argument("check_eq14: need n = sm+s-2");
    if (!(1 <= j && j <= m)) throw std::invalid_argument("check_eq14: need 1 <= j <= m");
    CheckReport rep;
    int nu = matching_number(f).nu;
    rep.add("precondition nu < s", nu < s, Rat(nu), Rat(s));

    auto y = f.level_profile();
    Rat lhs = Rat(Bigint(y[static_cast<std::size_t>(m - j)])) +
              Rat(Bigint(s - 1) * binomial(n, m - j), binomial(n, m + 1)) *
                  Rat(Bigint(y[static_cast<std::size_t>(m + 1)]));
    Rat rhs = Rat(binomial(n, m - j));
    rep.add("eq14 (j=" + std::to_string(j) + ")", lhs >= rhs, lhs, rhs);
    return rep;
}

// Sweep predicate for eq211: the proof-exact line must hold always; the
// printed line is asserted too when s-l is even (the forms then coincide).
inline bool claim2_sweep_ok(const CheckReport& rep, int s, int l) {
    for (const auto& line : rep.lines) {
        if (line.what == "eq211 (as printed)" && (s - l) % 2 == 1) continue;
        if (!line.ok) return false;
    }
    return true;
}

// The three purely binomial inequalities behind the chain.
inline CheckReport check_binomial_inequalities(int s, int m, int l) {
    CheckReport rep;
    if (l == 2) {
        auto c = check_eq116(s, m);
        if (c.applicable) rep.add("eq116", c.holds, c.lhs, c.rhs);
    }
    auto c167 = check_eq167(s, m, l);
    if (c167.applicable) rep.add("eq167", c167.holds, c167.lhs, c167.rhs);
    auto c177 = check_eq177(s, m, l);
    if (c177.applicable) rep.add("eq177", c177.holds, c177.lhs, c177.rhs);
    return rep;
}

// s |dH| >= |H| for any H with nu(H) <= s. Stated for hypergraphs, so a
// family containing the empty set is rejected.
inline CheckReport check_shadow_inequality(const SetFamily& h, int s) {
    if (h.contains(0)) throw std::invalid_argument("check_shadow_inequality: H must not contain the empty set");
    CheckReport rep;
    int nu = matching_number(h).nu;
    rep.add("precondition nu <= s", nu <= s, Rat(nu), Rat(s));
    Bigint lhs = Bigint(s) * h.shadow().size();
    rep.add("s|shadow(H)| >= |H|", lhs >= h.size(), Rat(lhs), Rat(Bigint(h.size())));
    return rep;
}

}  // namespace matchless
