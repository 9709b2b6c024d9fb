#pragma once

// Seeded random family generators for the property sweeps. Monotone
// families are produced generate-then-repair: random generators are closed
// upward, and while the constraint (nu < s, or D(s,q)) fails, one minimal
// member taken from a violating tuple is removed — removal of a minimal
// member keeps the family upward closed, and the family shrinks, so the
// repair terminates.

#include "matchless/family.hpp"
#include "matchless/invariants.hpp"
#include "matchless/subset.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace matchless {

inline SetFamily random_family(int n, std::mt19937_64& rng, double density = 0.5) {
    std::bernoulli_distribution coin(density);
    std::vector<Mask> members;
    Mask top = full_mask(n);
    for (Mask m = 0;; ++m) {
        if (coin(rng)) members.push_back(m);
        if (m == top) break;
    }
    return SetFamily(n, members);
}

namespace detail {

// Walks a member down to an inclusion-minimal member below it.
inline Mask minimal_below(const SetFamily& f, Mask a) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (Mask rest = a; rest; rest &= rest - 1) {
            Mask sub = a & ~(rest & (0u - rest));
            if (f.contains(sub)) {
                a = sub;
                changed = true;
                break;
            }
        }
    }
    return a;
}

inline SetFamily remove_member(const SetFamily& f, Mask a) {
    std::vector<Mask> members;
    members.reserve(static_cast<std::size_t>(f.size()));
    for (Mask m : f.members())
        if (m != a) members.push_back(m);
    return SetFamily(f.n(), members);
}

}  // namespace detail

// Random upward-closed family; constraint-free.
inline SetFamily random_monotone_family(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> gen_count(1, 2 * n);
    std::uniform_int_distribution<Mask> pick(0, full_mask(n));
    std::vector<Mask> gens;
    int k = gen_count(rng);
    for (int i = 0; i < k; ++i) gens.push_back(pick(rng));
    return SetFamily(n, gens).upward_closure();
}

// Random upward-closed family with nu(F) < s.
inline SetFamily random_monotone_with_small_matching(int n, int s, std::mt19937_64& rng) {
    SetFamily f = random_monotone_family(n, rng);
    while (true) {
        MatchingResult mr = matching_number(f);
        if (mr.nu < s) return f;
        std::uniform_int_distribution<std::size_t> pick(0, mr.witness.sets.size() - 1);
        Mask victim = detail::minimal_below(f, mr.witness.sets[pick(rng)]);
        f = detail::remove_member(f, victim);
    }
}

// Random upward-closed family with the D(s,q) property.
inline SetFamily random_monotone_with_D(int n, int s, int q, std::mt19937_64& rng) {
    SetFamily f = random_monotone_family(n, rng);
    while (true) {
        DPropertyResult d = has_D_property(f, s, q);
        if (d.holds) return f;
        std::uniform_int_distribution<std::size_t> pick(0, d.violating.size() - 1);
        Mask victim = detail::minimal_below(f, d.violating[pick(rng)]);
        f = detail::remove_member(f, victim);
    }
}

// Enumerates every upward-closed family on [n] (2^n <= 64 masks is plenty
// for the exhaustive sweeps; Dedekind growth makes n > 6 impractical).
template <typename Fn>
inline void for_each_monotone_family(int n, Fn&& fn) {
    if (n > 6) throw std::invalid_argument("for_each_monotone_family: n <= 6 only");
    std::vector<Mask> order;
    Mask top = full_mask(n);
    for (Mask m = 0; m <= top; ++m) order.push_back(m);
    std::sort(order.begin(), order.end(),
              [](Mask a, Mask b) { return popcount(a) != popcount(b) ? popcount(a) > popcount(b) : a < b; });
    std::vector<bool> in(static_cast<std::size_t>(top) + 1, false);
    std::vector<Mask> chosen;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == order.size()) {
            fn(SetFamily(n, chosen));
            return;
        }
        Mask a = order[idx];
        bool can_in = true;
        for (int e = 1; e <= n && can_in; ++e)
            if (!contains(a, e) && !in[with_element(a, e)]) can_in = false;
        if (can_in) {
            in[a] = true;
            chosen.push_back(a);
            self(self, idx + 1);
            chosen.pop_back();
            in[a] = false;
        }
        self(self, idx + 1);
    };
    rec(rec, 0);
}

}  // namespace matchless
