#pragma once

// Exact combinatorial invariants with witnesses: matching number nu,
// covering number tau, the D(s,q) property, and the cross-dependent /
// nested check for tuples of uniform families. All searches are exact
// branch-and-bound over the inclusion-minimal members (disjointness and
// covering questions are invariant under restricting to those).

#include "matchless/family.hpp"
#include "matchless/subset.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace matchless {

struct MatchingWitness {
    std::vector<Mask> sets;  // pairwise disjoint members, |sets| = nu
};

struct MatchingResult {
    int nu = 0;
    MatchingWitness witness;
};

namespace detail {

// Inclusion-minimal members after discarding the empty set. When {} is a
// member it is below everything else, so the plain minimal-member list
// degenerates to {{}}; disjointness searches need {} handled separately.
inline std::vector<Mask> minimal_nonempty_members(const SetFamily& f) {
    std::vector<bool> below(f.table_size(), false);
    std::vector<Mask> out;
    for (Mask m = 1; m < f.table_size(); ++m) {
        bool sub_has = false;
        for (Mask rest = m; rest && !sub_has; rest &= rest - 1) {
            Mask sub = m & ~(rest & (0u - rest));
            if (sub != 0) sub_has = below[sub];
        }
        if (f.contains(m) && !sub_has) out.push_back(m);
        below[m] = sub_has || f.contains(m);
    }
    return out;
}

}  // namespace detail

// Exact matching number. The empty set counts as a member disjoint from
// everything, so if {} is in F it contributes exactly 1.
inline MatchingResult matching_number(const SetFamily& f) {
    int extra = f.contains(0) ? 1 : 0;
    std::vector<Mask> cand = detail::minimal_nonempty_members(f);
    std::sort(cand.begin(), cand.end(),
              [](Mask a, Mask b) { return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b; });
    std::vector<int> sizes(cand.size());
    for (std::size_t i = 0; i < cand.size(); ++i) sizes[i] = popcount(cand[i]);

    int best = 0;
    std::vector<Mask> cur, out;
    auto dfs = [&](auto&& self, std::size_t idx, Mask used, int free_bits) -> void {
        if (static_cast<int>(cur.size()) > best) {
            best = static_cast<int>(cur.size());
            out = cur;
        }
        for (std::size_t i = idx; i < cand.size(); ++i) {
            if (cand[i] & used) continue;
            // sizes ascending: at most free_bits/sizes[i] further sets fit
            if (static_cast<int>(cur.size()) + free_bits / sizes[i] <= best) break;
            cur.push_back(cand[i]);
            self(self, i + 1, used | cand[i], free_bits - sizes[i]);
            cur.pop_back();
        }
    };
    dfs(dfs, 0, 0, f.n());

    MatchingResult res;
    res.nu = best + extra;
    res.witness.sets = std::move(out);
    if (extra) res.witness.sets.insert(res.witness.sets.begin(), Mask{0});
    return res;
}

struct CoverWitness {
    Mask cover = 0;
};

struct CoverResult {
    int tau = 0;
    bool uncoverable = false;  // the empty set is a member; no T can hit it
    CoverWitness witness;
};

// Exact covering number by iterative deepening on the cover size, branching
// on the elements of a smallest uncovered member in decreasing-degree order.
inline CoverResult covering_number(const SetFamily& f) {
    CoverResult res;
    if (f.contains(0)) {
        res.uncoverable = true;
        return res;
    }
    std::vector<Mask> mem = f.minimal_members();
    if (mem.empty()) return res;  // tau = 0
    std::sort(mem.begin(), mem.end(),
              [](Mask a, Mask b) { return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b; });

    std::vector<int> degree(static_cast<std::size_t>(f.n()) + 1, 0);
    for (Mask m : mem)
        for (int e : elements_of(m)) ++degree[static_cast<std::size_t>(e)];

    auto search = [&](auto&& self, Mask t, int depth_left) -> std::optional<Mask> {
        Mask pick = 0;
        for (Mask m : mem)
            if (!(m & t)) {
                pick = m;
                break;
            }
        if (pick == 0) return t;  // every member hit (minimal members are nonempty here)
        if (depth_left == 0) return std::nullopt;
        std::vector<int> elems = elements_of(pick);
        std::sort(elems.begin(), elems.end(), [&](int a, int b) {
            return degree[static_cast<std::size_t>(a)] != degree[static_cast<std::size_t>(b)]
                       ? degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)]
                       : a < b;
        });
        for (int e : elems) {
            auto got = self(self, with_element(t, e), depth_left - 1);
            if (got) return got;
        }
        return std::nullopt;
    };
    for (int t = 1; t <= f.n(); ++t) {
        auto got = search(search, 0, t);
        if (got) {
            res.tau = t;
            res.witness.cover = *got;
            return res;
        }
    }
    throw std::logic_error("covering_number: no cover up to n found");
}

struct DPropertyResult {
    bool holds = true;
    std::vector<Mask> violating;  // s pairwise disjoint members with |union| <= q
};

// D(s,q): every s pairwise disjoint members have union of size > q. The
// empty set is an ordinary member here: a tuple may use it once.
inline DPropertyResult has_D_property(const SetFamily& f, int s, int q) {
    if (s < 2) throw std::invalid_argument("has_D_property: s >= 2 required");
    if (q < 0) throw std::invalid_argument("has_D_property: q >= 0 required");
    std::vector<Mask> cand;
    if (f.contains(0)) cand.push_back(0);
    for (Mask m : detail::minimal_nonempty_members(f))
        if (popcount(m) <= q) cand.push_back(m);
    std::sort(cand.begin(), cand.end(),
              [](Mask a, Mask b) { return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b; });

    DPropertyResult res;
    std::vector<Mask> cur;
    auto dfs = [&](auto&& self, std::size_t idx, Mask used) -> bool {
        if (static_cast<int>(cur.size()) == s) {
            res.holds = false;
            res.violating = cur;
            return true;
        }
        int need = s - static_cast<int>(cur.size());
        for (std::size_t i = idx; i < cand.size(); ++i) {
            if (cand[i] & used) continue;
            // sizes ascending: the cheapest completion uses `need` copies of this size
            if (popcount(used) + need * popcount(cand[i]) > q) break;
            cur.push_back(cand[i]);
            if (self(self, i + 1, used | cand[i])) return true;
            cur.pop_back();
        }
        return false;
    };
    dfs(dfs, 0, 0);
    return res;
}

// --- cross-dependent / nested tuples of uniform families ------------------

struct CrossDependentReport {
    bool uniform_ok = true;
    bool nested_ok = true;
    bool cross_dependent_ok = true;
    bool hypothesis_ok = true;   // N >= (u+s-1)(k-1)
    bool inequality_ok = true;   // |F_1|+...+|F_{s-1}| + u|F_s| <= (s-1) C(N,k-1)
    Bigint lhs{0}, rhs{0};
    std::vector<Mask> disjoint_tuple;  // witness when cross-dependence fails

    bool all_ok() const { return uniform_ok && nested_ok && cross_dependent_ok && hypothesis_ok && inequality_ok; }
};

// Families F_1,...,F_s of (k-1)-subsets of [N]. Nested means F_1 contains
// F_2 contains ... contains F_s; cross-dependent means every choice of one
// member per family contains two intersecting members. Verifies both plus
// the weighted-sum inequality with coefficient u on the last family.
inline CrossDependentReport check_cross_dependent_nested(const std::vector<SetFamily>& fams, int bigN, int k,
                                                         int u) {
    if (fams.size() < 2) throw std::invalid_argument("check_cross_dependent_nested: need s >= 2 families");
    int s = static_cast<int>(fams.size());
    CrossDependentReport rep;
    for (const SetFamily& f : fams) {
        if (f.n() != bigN) throw std::invalid_argument("family ground set does not match N");
        for (Mask m : f.members())
            if (popcount(m) != k - 1) rep.uniform_ok = false;
    }
    if (!rep.uniform_ok) throw std::invalid_argument("check_cross_dependent_nested: families must be (k-1)-uniform");

    for (int i = 0; i + 1 < s; ++i)
        for (Mask m : fams[static_cast<std::size_t>(i) + 1].members())
            if (!fams[static_cast<std::size_t>(i)].contains(m)) rep.nested_ok = false;

    rep.hypothesis_ok = bigN >= (u + s - 1) * (k - 1);

    // cross-dependence fails iff some tuple is pairwise disjoint
    std::vector<std::vector<Mask>> mem;
    mem.reserve(static_cast<std::size_t>(s));
    for (const SetFamily& f : fams) mem.push_back(f.members());
    std::vector<Mask> cur;
    auto dfs = [&](auto&& self, int i, Mask used) -> bool {
        if (i == s) return true;
        for (Mask m : mem[static_cast<std::size_t>(i)]) {
            if (m & used) continue;
            cur.push_back(m);
            if (self(self, i + 1, used | m)) return true;
            cur.pop_back();
        }
        return false;
    };
    if (dfs(dfs, 0, 0)) {
        rep.cross_dependent_ok = false;
        rep.disjoint_tuple = cur;
    }

    for (int i = 0; i + 1 < s; ++i) rep.lhs += fams[static_cast<std::size_t>(i)].size();
    rep.lhs += Bigint(u) * fams[static_cast<std::size_t>(s) - 1].size();
    rep.rhs = Bigint(s - 1) * binomial(bigN, k - 1);
    rep.inequality_ok = rep.lhs <= rep.rhs;
    return rep;
}

}  // namespace matchless
