#pragma once

// Exact solvers for the extremal quantities at desk scale:
//
//   E(n,s)        max |F|, F in 2^[n], nu(F) < s
//   F(n,q,s)      max |F| with the D(s,q) property
//   EK(n,k,s)     max k-uniform F with nu(F) < s
//   EK_TAU(n,k,s) max k-uniform F with nu(F) = s and tau(F) > s
//   CAPPED(n,s,r) max F inside ([n] choose <= r) with nu(F) < s
//
// The search enumerates up-sets of the compression order: B dominates A
// when |B| >= |A| and the t-th smallest element of B is <= the t-th
// smallest of A for every t <= |A| (equivalently, A reaches B by deleting
// nothing, adding elements, and replacing elements by smaller ones). A
// family closed under that order is exactly an upward-closed shifted
// family, and both closure and shifting preserve cardinality while never
// increasing the matching number (nor breaking D(s,q)), so the maximum over
// that space equals the unrestricted maximum for the E and F kinds.
//
// Decisions run over masks in decreasing dominance strength. Deciding a set
// OUT forces all sets it dominates OUT; deciding a set IN updates the
// table of packing footprints (unions of pairwise disjoint IN-members) and
// every footprint of s-1 disjoint sets vetoes all undecided sets disjoint
// from it (subject to the union cap q). The cut is
// |decided in| + |undecided not yet forced out| <= incumbent.
//
// The brute-force oracle is the same walk with the incumbent cut disabled:
// nothing is pruned beyond constraint propagation, so it enumerates every
// feasible family in its space.

#include "matchless/bigmath.hpp"
#include "matchless/family.hpp"
#include "matchless/gallery.hpp"
#include "matchless/invariants.hpp"
#include "matchless/partition_stats.hpp"
#include "matchless/subset.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace matchless {

enum class ProblemKind { E, F, EK, EK_TAU, CAPPED };

struct Problem {
    ProblemKind kind;
    int n = 0;
    int s = 0;
    int q = -1;  // F
    int k = -1;  // EK, EK_TAU
    int r = -1;  // CAPPED

    static Problem E(int n, int s) { return {ProblemKind::E, n, s, -1, -1, -1}; }
    static Problem F(int n, int q, int s) { return {ProblemKind::F, n, s, q, -1, -1}; }
    static Problem EK(int n, int k, int s) { return {ProblemKind::EK, n, s, -1, k, -1}; }
    static Problem EKTau(int n, int k, int s) { return {ProblemKind::EK_TAU, n, s, -1, k, -1}; }
    static Problem Capped(int n, int s, int r) { return {ProblemKind::CAPPED, n, s, -1, -1, r}; }

    void validate() const {
        check_ground_size(n);
        switch (kind) {
            case ProblemKind::E:
                if (s < 2) throw std::invalid_argument("E(n,s): s >= 2 required");
                break;
            case ProblemKind::F:
                if (s < 2 || q < 0 || q > n) throw std::invalid_argument("F(n,q,s): s >= 2 and 0 <= q <= n required");
                break;
            case ProblemKind::EK:
                if (s < 2 || k < 1 || k > n) throw std::invalid_argument("EK(n,k,s): s >= 2, 1 <= k <= n required");
                break;
            case ProblemKind::EK_TAU:
                if (s < 1 || k < 1 || k > n) throw std::invalid_argument("EK_TAU(n,k,s): s >= 1, 1 <= k <= n required");
                break;
            case ProblemKind::CAPPED:
                if (s < 2 || r < 0 || r > n) throw std::invalid_argument("CAPPED(n,s,r): s >= 2, 0 <= r <= n required");
                break;
        }
    }

    std::string to_string() const {
        switch (kind) {
            case ProblemKind::E: return "E(n=" + std::to_string(n) + ",s=" + std::to_string(s) + ")";
            case ProblemKind::F:
                return "F(n=" + std::to_string(n) + ",q=" + std::to_string(q) + ",s=" + std::to_string(s) + ")";
            case ProblemKind::EK:
                return "EK(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",s=" + std::to_string(s) + ")";
            case ProblemKind::EK_TAU:
                return "EK_TAU(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",s=" + std::to_string(s) + ")";
            case ProblemKind::CAPPED:
                return "CAPPED(n=" + std::to_string(n) + ",s=" + std::to_string(s) + ",r=" + std::to_string(r) + ")";
        }
        return "?";
    }
};

enum class SpaceMode { All, Monotone, MonotoneShifted, UniformShifted };

struct SearchSpace {
    SpaceMode mode = SpaceMode::MonotoneShifted;
    std::string justification;

    static SearchSpace make(SpaceMode m) {
        SearchSpace sp;
        sp.mode = m;
        switch (m) {
            case SpaceMode::All: sp.justification = "unrestricted (always valid)"; break;
            case SpaceMode::Monotone:
                sp.justification = "upward closure preserves |F| and never increases nu / breaks D(s,q)";
                break;
            case SpaceMode::MonotoneShifted:
                sp.justification = "upward closure and (i,j)-shifts preserve |F|, never increase nu, keep D(s,q)";
                break;
            case SpaceMode::UniformShifted:
                sp.justification = "(i,j)-shifts preserve uniformity and |F|, never increase nu";
                break;
        }
        return sp;
    }
};

inline const char* space_mode_name(SpaceMode m) {
    switch (m) {
        case SpaceMode::All: return "all";
        case SpaceMode::Monotone: return "monotone";
        case SpaceMode::MonotoneShifted: return "monotone-shifted";
        case SpaceMode::UniformShifted: return "uniform-shifted";
    }
    return "?";
}

inline SpaceMode parse_space_mode(const std::string& s) {
    if (s == "all") return SpaceMode::All;
    if (s == "monotone") return SpaceMode::Monotone;
    if (s == "monotone-shifted") return SpaceMode::MonotoneShifted;
    if (s == "uniform-shifted") return SpaceMode::UniformShifted;
    throw std::invalid_argument("unknown search space: " + s);
}

struct Budget {
    long long max_nodes = 100'000'000;
    double max_seconds = 900.0;
};

enum class Certificate { ProvedOptimal, BestFound };

struct SolveResult {
    Bigint optimum{0};
    std::optional<SetFamily> witness;
    long long nodes = 0;
    SpaceMode mode_used = SpaceMode::MonotoneShifted;
    Certificate certificate = Certificate::ProvedOptimal;
};

namespace solver_detail {

// Dominance strength: sum over elements i of 2^(n-i); strictly increases
// under element additions and left replacements, so sorting by it in
// decreasing order is a linear extension of the dominance order.
inline std::uint32_t strength(Mask x, int n) {
    std::uint32_t w = 0;
    for (Mask rest = x; rest; rest &= rest - 1)
        w |= 1u << (n - 1 - std::countr_zero(rest));
    return w;
}

struct EngineConfig {
    int n;
    int s_lim;      // forbid s_lim pairwise disjoint members (s, or s+1 for EK_TAU)
    int q;          // union cap for violations (n when only nu matters)
    SpaceMode mode;
    int size_cap;   // max member size in the universe (n, r, or k)
    int size_floor; // min member size (k for uniform kinds, else 0)
    bool prune_with_bound = true;
    bool ektau = false;  // leaf must additionally satisfy nu = s and tau > s
    int ektau_s = 0;
};

class Engine {
public:
    Engine(const EngineConfig& cfg, const Budget& budget) : cfg_(cfg), budget_(budget) {
        build_universe();
        int np = static_cast<int>(universe_.size());
        state_.assign(universe_.size(), 0);
        forced_.assign(universe_.size(), 0);
        unforced_undecided_ = np;
        packs_items_.assign(static_cast<std::size_t>(cfg_.s_lim), {});
        packs_present_.assign(static_cast<std::size_t>(cfg_.s_lim),
                              std::vector<bool>(std::size_t{1} << cfg_.n, false));
    }

    SolveResult run() {
        t0_ = std::chrono::steady_clock::now();
        dfs(0);
        SolveResult res;
        res.optimum = best_ < 0 ? 0 : best_;
        res.nodes = nodes_;
        res.mode_used = cfg_.mode;
        res.certificate = aborted_ ? Certificate::BestFound : Certificate::ProvedOptimal;
        if (best_ >= 0) res.witness = SetFamily(cfg_.n, best_sets_);
        return res;
    }

private:
    void build_universe() {
        Mask top = full_mask(cfg_.n);
        for (Mask m = 0;; ++m) {
            int pc = popcount(m);
            if (pc >= cfg_.size_floor && pc <= cfg_.size_cap) universe_.push_back(m);
            if (m == top) break;
        }
        if (cfg_.mode == SpaceMode::MonotoneShifted || cfg_.mode == SpaceMode::UniformShifted) {
            std::sort(universe_.begin(), universe_.end(), [&](Mask a, Mask b) {
                return strength(a, cfg_.n) > strength(b, cfg_.n);
            });
        } else {
            std::sort(universe_.begin(), universe_.end(), [](Mask a, Mask b) {
                return popcount(a) != popcount(b) ? popcount(a) > popcount(b) : a < b;
            });
        }
        pos_of_.assign(std::size_t{1} << cfg_.n, -1);
        for (std::size_t i = 0; i < universe_.size(); ++i) pos_of_[universe_[i]] = static_cast<int>(i);

        // children[p] = positions forced OUT (one step) when universe_[p] is OUT
        children_.assign(universe_.size(), {});
        for (std::size_t i = 0; i < universe_.size(); ++i) {
            for (Mask par : parents_of(universe_[i])) {
                int pp = pos_of_[par];
                if (pp >= 0) children_[static_cast<std::size_t>(pp)].push_back(static_cast<int>(i));
            }
        }
    }

    // Parents = sets one dominance step up, restricted to the universe.
    // Adjacent left replacements generate shifting; adding the largest
    // missing element generates upward closure (chains through these stay
    // inside the size cap).
    std::vector<Mask> parents_of(Mask x) const {
        std::vector<Mask> out;
        if (cfg_.mode == SpaceMode::All) return out;
        if (cfg_.mode == SpaceMode::Monotone) {
            for (int e = 1; e <= cfg_.n; ++e)
                if (!contains(x, e) && popcount(x) + 1 <= cfg_.size_cap) out.push_back(with_element(x, e));
            return out;
        }
        for (int j = 2; j <= cfg_.n; ++j)
            if (contains(x, j) && !contains(x, j - 1)) out.push_back(with_element(without_element(x, j), j - 1));
        if (cfg_.mode == SpaceMode::MonotoneShifted && popcount(x) < cfg_.size_cap) {
            for (int e = cfg_.n; e >= 1; --e)
                if (!contains(x, e)) {
                    out.push_back(with_element(x, e));
                    break;
                }
        }
        return out;
    }

    void mark(int pos) {
        if (++forced_[static_cast<std::size_t>(pos)] == 1) {
            mark_trail_.push_back(pos);
            if (state_[static_cast<std::size_t>(pos)] == 0) {
                --unforced_undecided_;
                for (int c : children_[static_cast<std::size_t>(pos)])
                    if (state_[static_cast<std::size_t>(c)] == 0) mark(c);
            }
        } else {
            mark_trail_.push_back(pos);
        }
    }

    void unmark_to(std::size_t trail_size) {
        while (mark_trail_.size() > trail_size) {
            int pos = mark_trail_.back();
            mark_trail_.pop_back();
            if (--forced_[static_cast<std::size_t>(pos)] == 0 && state_[static_cast<std::size_t>(pos)] == 0)
                ++unforced_undecided_;
        }
    }

    // All undecided sets disjoint from footprint U (and still able to fit
    // under the union cap) can no longer be IN.
    void veto_mark(Mask u) {
        Mask comp = full_mask(cfg_.n) & ~u;
        int room = cfg_.q - popcount(u);
        for_each_subset(comp, [&](Mask sub) {
            if (popcount(sub) > room) return;
            int pos = pos_of_[sub];
            if (pos >= 0 && state_[static_cast<std::size_t>(pos)] == 0 && forced_[static_cast<std::size_t>(pos)] >= 0)
                mark(pos);
        });
    }

    void insert_pack(int k, Mask u) {
        if (packs_present_[static_cast<std::size_t>(k)][u]) return;
        packs_present_[static_cast<std::size_t>(k)][u] = true;
        packs_items_[static_cast<std::size_t>(k)].push_back(u);
        pack_trail_.push_back(k);
        if (k == cfg_.s_lim - 1) veto_mark(u);
    }

    void unpack_to(std::size_t trail_size) {
        while (pack_trail_.size() > trail_size) {
            int k = pack_trail_.back();
            pack_trail_.pop_back();
            Mask u = packs_items_[static_cast<std::size_t>(k)].back();
            packs_items_[static_cast<std::size_t>(k)].pop_back();
            packs_present_[static_cast<std::size_t>(k)][u] = false;
        }
    }

    void decide_in(int pos) {
        state_[static_cast<std::size_t>(pos)] = 1;
        --unforced_undecided_;  // only unforced positions branch IN
        ++in_count_;
        Mask x = universe_[static_cast<std::size_t>(pos)];
        if (popcount(x) <= cfg_.q) {
            for (int k = std::min(cfg_.s_lim - 2, highest_nonempty_pack()); k >= 1; --k) {
                const auto& items = packs_items_[static_cast<std::size_t>(k)];
                std::size_t count = items.size();  // snapshot: combining x with itself is invalid
                for (std::size_t idx = 0; idx < count; ++idx) {
                    Mask u = items[idx];
                    if (u & x) continue;
                    Mask v = u | x;
                    if (popcount(v) > cfg_.q) continue;
                    insert_pack(k + 1, v);
                }
            }
            insert_pack(1, x);
        }
    }

    int highest_nonempty_pack() const {
        for (int k = cfg_.s_lim - 1; k >= 1; --k)
            if (!packs_items_[static_cast<std::size_t>(k)].empty()) return k;
        return 0;
    }

    void decide_out(int pos) {
        state_[static_cast<std::size_t>(pos)] = 2;
        if (forced_[static_cast<std::size_t>(pos)] == 0) --unforced_undecided_;
        for (int c : children_[static_cast<std::size_t>(pos)])
            if (state_[static_cast<std::size_t>(c)] == 0) mark(c);
    }

    void undo_decide(int pos) {
        if (state_[static_cast<std::size_t>(pos)] == 1) --in_count_;
        state_[static_cast<std::size_t>(pos)] = 0;
        if (forced_[static_cast<std::size_t>(pos)] == 0) ++unforced_undecided_;
    }

    void leaf() {
        if (in_count_ <= best_) return;
        if (cfg_.ektau) {
            // nu <= s is maintained; nu = s iff an s-footprint exists
            if (packs_items_[static_cast<std::size_t>(cfg_.ektau_s)].empty()) return;
            SetFamily fam(cfg_.n, current_in_sets());
            CoverResult cov = covering_number(fam);
            if (cov.uncoverable || cov.tau <= cfg_.ektau_s) return;
        }
        best_ = in_count_;
        best_sets_ = current_in_sets();
    }

    std::vector<Mask> current_in_sets() const {
        std::vector<Mask> out;
        for (std::size_t i = 0; i < universe_.size(); ++i)
            if (state_[i] == 1) out.push_back(universe_[i]);
        return out;
    }

    void dfs(int pos) {
        if (aborted_) return;
        ++nodes_;
        if ((nodes_ & 0xfff) == 0) {
            auto now = std::chrono::steady_clock::now();
            double secs = std::chrono::duration<double>(now - t0_).count();
            if (nodes_ >= budget_.max_nodes || secs >= budget_.max_seconds) {
                aborted_ = true;
                return;
            }
        }
        if (pos == static_cast<int>(universe_.size())) {
            leaf();
            return;
        }
        if (cfg_.prune_with_bound && in_count_ + unforced_undecided_ <= best_) return;

        std::size_t marks = mark_trail_.size();
        if (forced_[static_cast<std::size_t>(pos)] > 0) {
            decide_out(pos);
            dfs(pos + 1);
            unmark_to(marks);
            undo_decide(pos);
            return;
        }

        std::size_t packs = pack_trail_.size();
        decide_in(pos);
        dfs(pos + 1);
        unmark_to(marks);
        unpack_to(packs);
        undo_decide(pos);
        if (aborted_) return;

        decide_out(pos);
        dfs(pos + 1);
        unmark_to(marks);
        undo_decide(pos);
    }

    EngineConfig cfg_;
    Budget budget_;
    std::vector<Mask> universe_;
    std::vector<int> pos_of_;
    std::vector<std::vector<int>> children_;
    std::vector<std::int8_t> state_;
    std::vector<int> forced_;
    long long unforced_undecided_ = 0;
    long long in_count_ = 0;
    std::vector<std::vector<Mask>> packs_items_;
    std::vector<std::vector<bool>> packs_present_;
    std::vector<int> mark_trail_;
    std::vector<int> pack_trail_;
    long long nodes_ = 0;
    bool aborted_ = false;
    long long best_ = -1;
    std::vector<Mask> best_sets_;
    std::chrono::steady_clock::time_point t0_;
};

inline EngineConfig make_config(const Problem& p, SpaceMode mode) {
    EngineConfig cfg;
    cfg.n = p.n;
    cfg.mode = mode;
    cfg.s_lim = p.s;
    cfg.q = p.n;
    cfg.size_cap = p.n;
    cfg.size_floor = 0;
    switch (p.kind) {
        case ProblemKind::E: break;
        case ProblemKind::F: cfg.q = p.q; break;
        case ProblemKind::CAPPED: cfg.size_cap = p.r; break;
        case ProblemKind::EK:
            cfg.size_cap = p.k;
            cfg.size_floor = p.k;
            break;
        case ProblemKind::EK_TAU:
            cfg.size_cap = p.k;
            cfg.size_floor = p.k;
            cfg.s_lim = p.s + 1;  // allow nu = s, forbid nu > s
            cfg.ektau = true;
            cfg.ektau_s = p.s;
            break;
    }
    return cfg;
}

inline void check_mode_valid(const Problem& p, SpaceMode mode) {
    auto bad = [&]() {
        throw std::invalid_argument(std::string("search space '") + space_mode_name(mode) +
                                    "' is not justified for " + p.to_string());
    };
    switch (p.kind) {
        case ProblemKind::E:
        case ProblemKind::F:
        case ProblemKind::CAPPED:
            if (mode == SpaceMode::UniformShifted) bad();
            break;
        case ProblemKind::EK:
            if (mode == SpaceMode::Monotone || mode == SpaceMode::MonotoneShifted) bad();
            break;
        case ProblemKind::EK_TAU:
            // shifting can destroy tau > s and upward closure breaks uniformity
            if (mode != SpaceMode::All) bad();
            break;
    }
}

inline std::size_t universe_size(const Problem& p) {
    EngineConfig cfg = make_config(p, SpaceMode::All);
    std::size_t count = 0;
    Mask top = full_mask(p.n);
    for (Mask m = 0;; ++m) {
        int pc = popcount(m);
        if (pc >= cfg.size_floor && pc <= cfg.size_cap) ++count;
        if (m == top) break;
    }
    return count;
}

}  // namespace solver_detail

inline constexpr std::size_t kMaxSearchPositions = 1u << 14;

inline SolveResult solve_exact(const Problem& p, const SearchSpace& space, const Budget& budget = Budget{}) {
    p.validate();
    solver_detail::check_mode_valid(p, space.mode);
    if (solver_detail::universe_size(p) > kMaxSearchPositions)
        throw std::invalid_argument("search universe exceeds " + std::to_string(kMaxSearchPositions) +
                                    " positions; reduce n (or k/r)");
    solver_detail::EngineConfig cfg = solver_detail::make_config(p, space.mode);
    solver_detail::Engine engine(cfg, budget);
    return engine.run();
}

// Exhaustive enumeration with no incumbent cut: every feasible family in
// the space is visited. ALL space is capped at n <= 4, monotone at n <= 6.
inline Bigint brute_force_oracle(const Problem& p, SpaceMode mode = SpaceMode::All) {
    p.validate();
    if (mode != SpaceMode::All && mode != SpaceMode::Monotone)
        throw std::invalid_argument("brute_force_oracle: mode must be 'all' or 'monotone'");
    solver_detail::check_mode_valid(p, mode);
    if (mode == SpaceMode::All && p.n > 4 && p.kind != ProblemKind::EK && p.kind != ProblemKind::EK_TAU)
        throw std::invalid_argument("brute_force_oracle: ALL space needs n <= 4");
    if (mode == SpaceMode::Monotone && p.n > 6)
        throw std::invalid_argument("brute_force_oracle: monotone space needs n <= 6");
    if (solver_detail::universe_size(p) > 24 && mode == SpaceMode::All)
        throw std::invalid_argument("brute_force_oracle: ALL space needs at most 24 candidate sets");
    solver_detail::EngineConfig cfg = solver_detail::make_config(p, mode);
    cfg.prune_with_bound = false;
    Budget unbounded;
    unbounded.max_nodes = std::numeric_limits<long long>::max();
    unbounded.max_seconds = 1e18;
    solver_detail::Engine engine(cfg, unbounded);
    SolveResult res = engine.run();
    return res.optimum;
}

// --- witness validation ------------------------------------------------------

struct WitnessReport {
    bool valid = false;
    Bigint size{0};
    std::string detail;
};

inline WitnessReport verify_witness(const SetFamily& f, const Problem& p) {
    p.validate();
    if (f.n() != p.n) throw std::invalid_argument("verify_witness: ground-set size mismatch");
    WitnessReport rep;
    rep.size = f.size();
    switch (p.kind) {
        case ProblemKind::E: {
            int nu = matching_number(f).nu;
            rep.valid = nu < p.s;
            rep.detail = "nu = " + std::to_string(nu);
            break;
        }
        case ProblemKind::F: {
            auto d = has_D_property(f, p.s, p.q);
            rep.valid = d.holds;
            rep.detail = d.holds ? "D(s,q) holds" : "D(s,q) violated";
            break;
        }
        case ProblemKind::EK: {
            bool uniform = true;
            for (Mask m : f.members())
                if (popcount(m) != p.k) uniform = false;
            int nu = matching_number(f).nu;
            rep.valid = uniform && nu < p.s;
            rep.detail = std::string(uniform ? "" : "not k-uniform; ") + "nu = " + std::to_string(nu);
            break;
        }
        case ProblemKind::EK_TAU: {
            bool uniform = true;
            for (Mask m : f.members())
                if (popcount(m) != p.k) uniform = false;
            int nu = matching_number(f).nu;
            CoverResult cov = covering_number(f);
            rep.valid = uniform && nu == p.s && !cov.uncoverable && cov.tau > p.s;
            rep.detail = "nu = " + std::to_string(nu) + ", tau = " + std::to_string(cov.tau);
            break;
        }
        case ProblemKind::CAPPED: {
            bool capped = true;
            for (Mask m : f.members())
                if (popcount(m) > p.r) capped = false;
            int nu = matching_number(f).nu;
            rep.valid = capped && nu < p.s;
            rep.detail = std::string(capped ? "" : "member above the size cap; ") + "nu = " + std::to_string(nu);
            break;
        }
    }
    return rep;
}

// --- structural statements about (near-)optimal families ---------------------

// For F on n = sm+s-l with levels F_j = F cap ([n] choose j):
//   (a) nu(F_0 cup ... cup F_m) <= l-1
//   (b) F_m only contains sets meeting [1, l-1]
//   (c) for i <= m-1, every member at level m-i meets [1, l-1] in >= i+1
//       elements
// Violations are findings, not errors: the statements are theorems only for
// maximum families.
inline CheckReport check_structure(const SetFamily& f, int s, int m, int l) {
    long n = static_cast<long>(s) * m + s - l;
    if (f.n() != n) throw std::invalid_argument("check_structure: need n = sm+s-l");
    CheckReport rep;

    std::vector<Mask> low;
    for (Mask a : f.members())
        if (popcount(a) <= m) low.push_back(a);
    int nu_low = matching_number(SetFamily(f.n(), low)).nu;
    rep.add("nu(F_0 cup ... cup F_m) <= l-1", nu_low <= l - 1, Rat(nu_low), Rat(l - 1));

    Mask pref = prefix_mask(l - 1);
    bool lemma7 = true;
    for (Mask a : f.members())
        if (popcount(a) == m && !(a & pref)) lemma7 = false;
    rep.add("level-m members meet [1,l-1]", lemma7, Rat(lemma7 ? 1 : 0), Rat(1));

    for (int i = 0; i <= m - 1; ++i) {
        bool ok = true;
        int worst = l;
        for (Mask a : f.members())
            if (popcount(a) == m - i) {
                int hit = popcount(a & pref);
                worst = std::min(worst, hit);
                if (hit < i + 1) ok = false;
            }
        rep.add("level m-" + std::to_string(i) + " members have |F cap [1,l-1]| >= " + std::to_string(i + 1), ok,
                Rat(worst), Rat(i + 1));
    }
    return rep;
}

// Deficiency form of the l = 2 statement at n = sm+s-2:
// sum_r y(r) >= C(n-1,m) + sum_{r<m} C(n,r).
inline CheckReport deficiency_check(const SetFamily& f, int s, int m) {
    long n = static_cast<long>(s) * m + s - 2;
    if (f.n() != n) throw std::invalid_argument("deficiency_check: need n = sm+s-2");
    CheckReport rep;
    int nu = matching_number(f).nu;
    rep.add("precondition nu < s", nu < s, Rat(nu), Rat(s));

    auto y = f.level_profile();
    Bigint lhs = 0;
    for (auto v : y) lhs += v;
    Bigint rhs = binomial(n - 1, m) + binomial_sum(n, 0, m - 1);
    rep.add("sum_r y(r) >= C(n-1,m) + sum_{r<m} C(n,r)", lhs >= rhs, Rat(lhs), Rat(rhs));
    return rep;
}

// --- threshold-family local search -------------------------------------------

struct ThresholdSearchResult {
    ThresholdVector best_alpha;
    Bigint best_size{0};
    long long evaluations = 0;
};

namespace solver_detail {

// |F(alpha)| on [n] by include/exclude recursion over elements with the
// running weight sum; integer weights over a common denominator.
inline Bigint threshold_family_size(const std::vector<Rat>& alpha, int n) {
    Bigint denom = 1;
    for (const Rat& a : alpha) denom = boost::multiprecision::lcm(denom, denominator(a));
    std::vector<Bigint> w(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) w[i] = numerator(alpha[i]) * (denom / denominator(alpha[i]));
    auto rec = [&](auto&& self, int idx, Bigint sum) -> Bigint {
        if (sum >= denom) return pow2(n - idx);
        if (idx == n) return Bigint(0);
        return self(self, idx + 1, sum + w[static_cast<std::size_t>(idx)]) + self(self, idx + 1, sum);
    };
    return rec(rec, 0, Bigint(0));
}

}  // namespace solver_detail

// Deterministic seeded hill climb over nonincreasing rational weight
// vectors with sum(alpha) < s, starting from the paper's preset vectors
// plus random restarts. Every family F(alpha) visited automatically has
// nu < s.
inline ThresholdSearchResult threshold_search(int n, int s, long iterations, std::uint64_t seed) {
    check_ground_size(n);
    if (s < 2) throw std::invalid_argument("threshold_search: s >= 2 required");
    std::mt19937_64 rng(seed);
    ThresholdSearchResult res;

    auto normalize = [&](std::vector<Rat> a) -> std::optional<ThresholdVector> {
        for (Rat& v : a)
            if (v < 0) v = 0;
        std::sort(a.begin(), a.end(), std::greater<Rat>());
        Rat tot = 0;
        for (const Rat& v : a) tot += v;
        if (!(tot < s)) return std::nullopt;
        ThresholdVector tv;
        tv.alpha = std::move(a);
        return tv;
    };

    auto consider = [&](const ThresholdVector& tv) -> Bigint {
        ++res.evaluations;
        Bigint sz = solver_detail::threshold_family_size(tv.alpha, n);
        if (sz > res.best_size) {
            res.best_size = sz;
            res.best_alpha = tv;
        }
        return sz;
    };

    std::vector<ThresholdVector> starts;
    for (int l = 1; l <= s; ++l) {
        if ((n - s + l) % s != 0) continue;
        int m = (n - s + l) / s;
        if (m >= 1) starts.push_back(alpha_p(s, m, l));
    }
    for (int m = 1; static_cast<long>(s) * m - 1 <= n; ++m) starts.push_back(alpha_w(m, s, n));
    if (starts.empty()) starts.push_back(alpha_w(1, s, n));

    ThresholdVector cur = starts.front();
    Bigint cur_size = 0;
    for (const ThresholdVector& st : starts) {
        Bigint sz = consider(st);
        if (sz > cur_size) {
            cur = st;
            cur_size = sz;
        }
    }

    std::uniform_int_distribution<int> pick_idx(0, n - 1);
    std::uniform_int_distribution<int> pick_den(1, 8);
    std::uniform_int_distribution<int> pick_sign(0, 1);
    long stale = 0;
    for (long it = 0; it < iterations; ++it) {
        std::vector<Rat> prop = cur.alpha;
        int i = pick_idx(rng);
        Rat delta(1, pick_den(rng));
        prop[static_cast<std::size_t>(i)] += pick_sign(rng) ? delta : -delta;
        auto tv = normalize(std::move(prop));
        if (!tv) continue;
        Bigint sz = consider(*tv);
        if (sz > cur_size) {
            cur = *tv;
            cur_size = sz;
            stale = 0;
        } else if (++stale > 200) {
            // random kick from the incumbent
            cur = res.best_alpha;
            cur_size = res.best_size;
            std::vector<Rat> kick = cur.alpha;
            for (int t = 0; t < 2; ++t)
                kick[static_cast<std::size_t>(pick_idx(rng))] += pick_sign(rng) ? Rat(1, pick_den(rng)) : -Rat(1, pick_den(rng));
            if (auto tv2 = normalize(std::move(kick))) {
                cur = *tv2;
                cur_size = consider(*tv2);
            }
            stale = 0;
        }
    }
    return res;
}

}  // namespace matchless
