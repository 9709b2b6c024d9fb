#pragma once

// SetFamily: a family F of subsets of [n] as a dense membership table over
// all 2^n masks, with cached level counts. Families are immutable after
// construction; every operator returns a new value. The structural
// operators here (complement, closure, shifting, shadow, link, split) are
// the ground layer everything else builds on.

#include "matchless/bigmath.hpp"
#include "matchless/subset.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace matchless {

class SetFamily {
public:
    explicit SetFamily(int n) : n_(n), member_((std::size_t{1} << n), false) { check_ground_size(n); }

    SetFamily(int n, const std::vector<Mask>& members) : SetFamily(n) {
        for (Mask m : members) insert(m);
        refresh_counts();
    }

    template <typename Pred>
    static SetFamily from_predicate(int n, Pred&& pred) {
        SetFamily f(n);
        Mask top = full_mask(n);
        for (Mask m = 0;; ++m) {
            if (pred(m)) f.member_[m] = true;
            if (m == top) break;
        }
        f.refresh_counts();
        return f;
    }

    static SetFamily empty(int n) { return SetFamily(n); }

    static SetFamily power_set(int n) {
        return from_predicate(n, [](Mask) { return true; });
    }

    int n() const { return n_; }
    std::size_t table_size() const { return member_.size(); }
    bool contains(Mask m) const { return member_[m]; }
    std::int64_t size() const { return size_; }
    const std::array<std::int64_t, kMaxGroundSize + 1>& level_counts() const { return level_counts_; }

    std::vector<Mask> members() const {
        std::vector<Mask> out;
        out.reserve(static_cast<std::size_t>(size_));
        for (Mask m = 0; m < member_.size(); ++m)
            if (member_[m]) out.push_back(m);
        return out;
    }

    bool operator==(const SetFamily& other) const { return n_ == other.n_ && member_ == other.member_; }
    bool operator!=(const SetFamily& other) const { return !(*this == other); }

    // --- structural operators -------------------------------------------

    SetFamily complement_family() const {
        SetFamily out(n_);
        for (Mask m = 0; m < member_.size(); ++m) out.member_[m] = !member_[m];
        out.refresh_counts();
        return out;
    }

    // y(q) = number of q-subsets of [n] missing from the family.
    std::vector<std::int64_t> level_profile() const {
        std::vector<std::int64_t> y(static_cast<std::size_t>(n_) + 1);
        for (int q = 0; q <= n_; ++q)
            y[static_cast<std::size_t>(q)] =
                static_cast<std::int64_t>(binomial(n_, q)) - level_counts_[static_cast<std::size_t>(q)];
        return y;
    }

    // Minimal upward-closed superfamily; idempotent.
    SetFamily upward_closure() const {
        SetFamily out(n_);
        out.member_ = member_;
        for (Mask m = 1; m < out.member_.size(); ++m) {
            if (out.member_[m]) continue;
            for (Mask rest = m; rest; rest &= rest - 1) {
                Mask sub = m & ~(rest & (0u - rest));
                if (out.member_[sub]) {
                    out.member_[m] = true;
                    break;
                }
            }
        }
        out.refresh_counts();
        return out;
    }

    bool is_upward_closed() const {
        for (Mask m = 0; m < member_.size(); ++m) {
            if (!member_[m]) continue;
            for (int e = 1; e <= n_; ++e)
                if (!matchless::contains(m, e) && !member_[with_element(m, e)]) return false;
        }
        return true;
    }

    // The (i,j)-shift S_{i,j}: members with j but not i move to the set with
    // j replaced by i unless that set is already present, in which case the
    // original is kept. Cardinality is always preserved.
    SetFamily shift(int i, int j) const {
        if (!(1 <= i && i < j && j <= n_))
            throw std::invalid_argument("shift requires 1 <= i < j <= n, got i=" + std::to_string(i) +
                                        " j=" + std::to_string(j));
        SetFamily out(n_);
        out.member_ = member_;
        Mask bi = 1u << (i - 1), bj = 1u << (j - 1);
        for (Mask m = 0; m < member_.size(); ++m) {
            if (!member_[m]) continue;
            if ((m & bi) || !(m & bj)) continue;
            Mask shifted = (m & ~bj) | bi;
            if (!member_[shifted]) {
                out.member_[m] = false;
                out.member_[shifted] = true;
            }
        }
        out.refresh_counts();
        return out;
    }

    bool is_shifted() const {
        for (int i = 1; i < n_; ++i) {
            Mask bi = 1u << (i - 1);
            for (int j = i + 1; j <= n_; ++j) {
                Mask bj = 1u << (j - 1);
                for (Mask m = 0; m < member_.size(); ++m) {
                    if (!member_[m]) continue;
                    if ((m & bi) || !(m & bj)) continue;
                    if (!member_[(m & ~bj) | bi]) return false;
                }
            }
        }
        return true;
    }

    // Applies (i,j)-shifts in lexicographic (i,j) order, sweeping until a
    // full pass changes nothing. The fixpoint may depend on the sweep order;
    // only shiftedness, cardinality and non-increase of the matching number
    // are contractual.
    SetFamily full_shift() const {
        SetFamily cur = *this;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 1; i < n_; ++i)
                for (int j = i + 1; j <= n_; ++j) {
                    SetFamily next = cur.shift(i, j);
                    if (next.member_ != cur.member_) {
                        cur = std::move(next);
                        changed = true;
                    }
                }
        }
        return cur;
    }

    // Immediate shadow: sets obtainable from a member by deleting one element.
    SetFamily shadow() const {
        SetFamily out(n_);
        for (Mask m = 0; m < member_.size(); ++m) {
            if (!member_[m]) continue;
            for (Mask rest = m; rest; rest &= rest - 1) out.member_[m & ~(rest & (0u - rest))] = true;
        }
        out.refresh_counts();
        return out;
    }

    // Link G(Q,p) = { G \ Q : G in F, G cap [1,p] = Q }. Members live in
    // [p+1,n]; the ground set is kept as [n].
    SetFamily link(Mask q, int p) const {
        if (p < 0 || p > n_) throw std::invalid_argument("link: p outside [0,n]");
        Mask pm = prefix_mask(p);
        if (q & ~pm) throw std::invalid_argument("link: Q is not a subset of [1,p]");
        SetFamily out(n_);
        for (Mask m = 0; m < member_.size(); ++m) {
            if (!member_[m]) continue;
            if ((m & pm) == q) out.member_[m & ~q] = true;
        }
        out.refresh_counts();
        return out;
    }

    // Splits on the last element: returns (F(n), F(n-bar)) on ground set
    // [n-1], where F(n) strips n from the members containing it and
    // F(n-bar) keeps the members avoiding n.
    std::pair<SetFamily, SetFamily> split_on_element(int x) const {
        if (x != n_)
            throw std::invalid_argument("split_on_element: x must equal n (relabel first otherwise)");
        if (n_ < 2) throw std::invalid_argument("split_on_element: need n >= 2");
        SetFamily with(n_ - 1), without(n_ - 1);
        Mask bx = 1u << (n_ - 1);
        for (Mask m = 0; m < member_.size(); ++m) {
            if (!member_[m]) continue;
            if (m & bx)
                with.member_[m & ~bx] = true;
            else
                without.member_[m] = true;
        }
        with.refresh_counts();
        without.refresh_counts();
        return {std::move(with), std::move(without)};
    }

    // Inclusion-minimal members (no proper subset is a member). Disjointness
    // questions (matching number, covers, the D property) only depend on
    // these, which keeps the exact searches small for upward-closed input.
    std::vector<Mask> minimal_members() const {
        std::vector<bool> below(member_.size(), false);  // below[m]: some member is a subset of m
        std::vector<Mask> out;
        for (Mask m = 0; m < member_.size(); ++m) {
            bool sub_has = false;
            for (Mask rest = m; rest && !sub_has; rest &= rest - 1)
                sub_has = below[m & ~(rest & (0u - rest))];
            if (member_[m] && !sub_has) out.push_back(m);
            below[m] = sub_has || member_[m];
        }
        return out;
    }

private:
    void insert(Mask m) {
        if (m & ~full_mask(n_)) throw std::invalid_argument("member mask has bits outside ground set");
        member_[m] = true;
    }

    void refresh_counts() {
        level_counts_.fill(0);
        size_ = 0;
        for (Mask m = 0; m < member_.size(); ++m)
            if (member_[m]) {
                ++size_;
                ++level_counts_[static_cast<std::size_t>(popcount(m))];
            }
    }

    int n_;
    std::vector<bool> member_;
    std::int64_t size_ = 0;
    std::array<std::int64_t, kMaxGroundSize + 1> level_counts_{};
};

// --- text / hex serialization -------------------------------------------
//
// Text format:      first line "n=<int>", then one subset per line as
//                   comma-separated 1-based elements, "{}" for the empty set.
// Hex alternative:  first line "n=<int> base=hex", then one lowercase hex
//                   mask per line. Both round-trip bit-exactly.

enum class FamilyFormat { Elements, Hex };

inline void write_family(std::ostream& os, const SetFamily& f, FamilyFormat fmt = FamilyFormat::Elements) {
    os << "n=" << f.n();
    if (fmt == FamilyFormat::Hex) os << " base=hex";
    os << '\n';
    for (Mask m : f.members()) os << (fmt == FamilyFormat::Hex ? format_hex(m) : format_subset(m)) << '\n';
}

inline std::string family_to_string(const SetFamily& f, FamilyFormat fmt = FamilyFormat::Elements) {
    std::ostringstream ss;
    write_family(ss, f, fmt);
    return ss.str();
}

inline SetFamily read_family(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("family input is empty");
    std::istringstream head(line);
    std::string ntok, basetok;
    head >> ntok;
    if (ntok.rfind("n=", 0) != 0) throw std::invalid_argument("family input must start with 'n=<int>'");
    int n = std::stoi(ntok.substr(2));
    check_ground_size(n);
    bool hex = false;
    if (head >> basetok) {
        if (basetok == "base=hex")
            hex = true;
        else
            throw std::invalid_argument("unknown family header token: " + basetok);
    }
    std::vector<Mask> members;
    while (std::getline(is, line)) {
        std::string stripped;
        for (char c : line)
            if (!isspace(static_cast<unsigned char>(c))) stripped += c;
        if (stripped.empty()) continue;
        members.push_back(hex ? parse_hex(stripped, n) : parse_subset(stripped, n));
    }
    return SetFamily(n, members);
}

inline SetFamily read_family_from_string(const std::string& text) {
    std::istringstream ss(text);
    return read_family(ss);
}

inline SetFamily read_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open family file: " + path);
    return read_family(in);
}

inline void write_family_file(const std::string& path, const SetFamily& f,
                              FamilyFormat fmt = FamilyFormat::Elements) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write family file: " + path);
    write_family(out, f, fmt);
}

}  // namespace matchless
