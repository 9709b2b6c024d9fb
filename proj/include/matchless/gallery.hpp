#pragma once

// The construction gallery: materializes and counts the named families.
//
//   P(s,m,l)   on n = sm+s-l:     |P| + |P cap [l-1]| >= m+1
//   B(n,q,s)   for q = s(m+1)-l:  same membership rule, any n >= q
//   A_i^(k)(n,s):                 k-sets with |A cap [(s+1)i-1]| >= i
//   H^(k)(n,s):                   k-sets meeting [s], plus [s+1,s+k], minus
//                                 the sets with A cap [s] = {s} avoiding
//                                 [s+1,s+k]
//   W(m,s)     on n >= sm-1:      |W cap [sm-1]| >= m
//   F(alpha):                     sets of alpha-weight at least 1, for a
//                                 nonincreasing nonnegative rational vector
//   Star:                         sets containing a fixed center (one size
//                                 k, or all sizes)
//
// size_of() counts without materializing and has no ground-size cap;
// build() materializes for n <= 24.

#include "matchless/bigmath.hpp"
#include "matchless/family.hpp"
#include "matchless/invariants.hpp"
#include "matchless/subset.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace matchless {

struct ThresholdVector {
    std::vector<Rat> alpha;  // nonincreasing, nonnegative

    void validate() const {
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] < 0) throw std::invalid_argument("threshold vector entries must be >= 0");
            if (i > 0 && alpha[i] > alpha[i - 1])
                throw std::invalid_argument("threshold vector must be nonincreasing");
        }
    }

    Rat total() const {
        Rat t = 0;
        for (const Rat& a : alpha) t += a;
        return t;
    }
};

enum class ConstructionKind { P, B, A, H, W, Threshold, Star };

struct ConstructionSpec {
    ConstructionKind kind;
    // P: (s,m,l); B: (q,s); A: (i,k,s); H: (k,s); W: (m,s); Star: (center, k or all)
    int s = 0, m = 0, l = 0, q = 0, i = 0, k = 0;
    bool star_all_sizes = false;
    Mask star_center = 0;
    ThresholdVector threshold;

    static ConstructionSpec P(int s, int m, int l) {
        ConstructionSpec c{ConstructionKind::P};
        c.s = s;
        c.m = m;
        c.l = l;
        return c;
    }
    static ConstructionSpec B(int q, int s) {
        ConstructionSpec c{ConstructionKind::B};
        c.q = q;
        c.s = s;
        return c;
    }
    static ConstructionSpec A(int i, int k, int s) {
        ConstructionSpec c{ConstructionKind::A};
        c.i = i;
        c.k = k;
        c.s = s;
        return c;
    }
    static ConstructionSpec H(int k, int s) {
        ConstructionSpec c{ConstructionKind::H};
        c.k = k;
        c.s = s;
        return c;
    }
    static ConstructionSpec W(int m, int s) {
        ConstructionSpec c{ConstructionKind::W};
        c.m = m;
        c.s = s;
        return c;
    }
    static ConstructionSpec Threshold(ThresholdVector v) {
        ConstructionSpec c{ConstructionKind::Threshold};
        c.threshold = std::move(v);
        return c;
    }
    static ConstructionSpec Star(Mask center, std::optional<int> k) {
        ConstructionSpec c{ConstructionKind::Star};
        c.star_center = center;
        c.star_all_sizes = !k.has_value();
        c.k = k.value_or(0);
        return c;
    }
};

namespace gallery_detail {

// For B(n,q,s): q = s(m+1)-l with 1 <= l <= s determines m = floor(q/s) and
// l = s(m+1)-q.
inline std::pair<int, int> b_params(int q, int s) {
    int m = q / s;
    int l = s * (m + 1) - q;
    return {m, l};
}

inline void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument("invalid construction parameters: " + what);
}

}  // namespace gallery_detail

inline void validate_spec(const ConstructionSpec& c, long n) {
    using gallery_detail::require;
    switch (c.kind) {
        case ConstructionKind::P:
            require(c.s >= 2, "P requires s >= 2");
            require(c.m >= 0, "P requires m >= 0");
            require(0 < c.l && c.l <= c.s, "P requires 0 < l <= s");
            require(n == static_cast<long>(c.s) * c.m + c.s - c.l, "P requires n = sm+s-l");
            break;
        case ConstructionKind::B:
            require(c.s >= 2, "B requires s >= 2");
            require(c.q >= 0, "B requires q >= 0");
            require(n >= c.q, "B requires n >= q");
            break;
        case ConstructionKind::A:
            require(c.s >= 1, "A requires s >= 1");
            require(1 <= c.i && c.i <= c.k, "A requires 1 <= i <= k");
            require(n >= static_cast<long>(c.s + 1) * c.k, "A requires n >= (s+1)k");
            break;
        case ConstructionKind::H:
            require(c.s >= 1, "H requires s >= 1");
            require(c.k >= 1, "H requires k >= 1");
            require(n >= static_cast<long>(c.s) * c.k, "H requires n >= sk");
            require(n >= c.s + c.k, "H requires n >= s+k (the extra set [s+1,s+k] must fit)");
            break;
        case ConstructionKind::W:
            require(c.s >= 2, "W requires s >= 2");
            require(c.m >= 1, "W requires m >= 1");
            require(n >= static_cast<long>(c.s) * c.m - 1, "W requires n >= sm-1");
            break;
        case ConstructionKind::Threshold:
            c.threshold.validate();
            require(static_cast<long>(c.threshold.alpha.size()) == n, "threshold vector length must equal n");
            break;
        case ConstructionKind::Star:
            require(c.star_all_sizes || c.k >= popcount(c.star_center), "star requires k >= |center|");
            break;
    }
}

inline bool spec_membership(const ConstructionSpec& c, Mask a, int n) {
    switch (c.kind) {
        case ConstructionKind::P:
            return popcount(a) + popcount(a & prefix_mask(c.l - 1)) >= c.m + 1;
        case ConstructionKind::B: {
            auto [m, l] = gallery_detail::b_params(c.q, c.s);
            return popcount(a) + popcount(a & prefix_mask(l - 1)) >= m + 1;
        }
        case ConstructionKind::A: {
            if (popcount(a) != c.k) return false;
            return popcount(a & prefix_mask((c.s + 1) * c.i - 1)) >= c.i;
        }
        case ConstructionKind::H: {
            if (popcount(a) != c.k) return false;
            Mask sm = prefix_mask(c.s);
            Mask block = prefix_mask(c.s + c.k) & ~sm;  // [s+1, s+k]
            if (a == block) return true;
            if (!(a & sm)) return false;
            if ((a & sm) == (1u << (c.s - 1)) && !(a & block)) return false;
            return true;
        }
        case ConstructionKind::W:
            return popcount(a & prefix_mask(c.s * c.m - 1)) >= c.m;
        case ConstructionKind::Threshold: {
            Rat w = 0;
            Mask rest = a;
            while (rest) {
                int b = std::countr_zero(rest);
                w += c.threshold.alpha[static_cast<std::size_t>(b)];
                rest &= rest - 1;
            }
            return w >= 1;
        }
        case ConstructionKind::Star:
            if ((a & c.star_center) != c.star_center) return false;
            return c.star_all_sizes || popcount(a) == c.k;
    }
    return false;
}

inline SetFamily build(const ConstructionSpec& c, int n) {
    check_ground_size(n);
    validate_spec(c, n);
    if (c.kind == ConstructionKind::Threshold) {
        // weight sums over a common denominator; int64 suffices for any sane
        // vector and avoids a rational addition per mask
        Bigint denom = 1;
        for (const Rat& a : c.threshold.alpha) denom = boost::multiprecision::lcm(denom, denominator(a));
        Bigint worst = 0;
        for (const Rat& a : c.threshold.alpha) worst += numerator(a) * (denom / denominator(a));
        if (worst < Bigint(1) << 60) {
            std::vector<std::int64_t> w(c.threshold.alpha.size());
            for (std::size_t i = 0; i < w.size(); ++i)
                w[i] = static_cast<std::int64_t>(numerator(c.threshold.alpha[i]) *
                                                 (denom / denominator(c.threshold.alpha[i])));
            std::int64_t d = static_cast<std::int64_t>(denom);
            return SetFamily::from_predicate(n, [&](Mask a) {
                std::int64_t sum = 0;
                for (Mask rest = a; rest; rest &= rest - 1) sum += w[static_cast<std::size_t>(std::countr_zero(rest))];
                return sum >= d;
            });
        }
    }
    return SetFamily::from_predicate(n, [&](Mask a) { return spec_membership(c, a, n); });
}

namespace gallery_detail {

// |{F : |F| + |F cap [l-1]| >= m+1}| on [n], summed over a = |F cap [l-1]|.
inline Bigint weighted_prefix_count(long n, int m, int l) {
    Bigint total = 0;
    long outside = n - (l - 1);
    for (int a = 0; a <= l - 1; ++a) {
        long blo = std::max(0, m + 1 - 2 * a);
        total += binomial(l - 1, a) * binomial_sum(outside, blo, outside);
    }
    return total;
}

inline Bigint threshold_count(const ThresholdVector& v, long n);

}  // namespace gallery_detail

// Exact cardinality without materializing; no ground-size cap.
inline Bigint size_of(const ConstructionSpec& c, long n) {
    validate_spec(c, n);
    switch (c.kind) {
        case ConstructionKind::P:
            return gallery_detail::weighted_prefix_count(n, c.m, c.l);
        case ConstructionKind::B: {
            auto [m, l] = gallery_detail::b_params(c.q, c.s);
            return gallery_detail::weighted_prefix_count(n, m, l);
        }
        case ConstructionKind::A: {
            long pref = static_cast<long>(c.s + 1) * c.i - 1;
            Bigint total = 0;
            for (long t = c.i; t <= std::min<long>(c.k, pref); ++t)
                total += binomial(pref, t) * binomial(n - pref, c.k - t);
            return total;
        }
        case ConstructionKind::H:
            return binomial(n, c.k) - binomial(n - c.s, c.k) + 1 - binomial(n - c.s - c.k, c.k - 1);
        case ConstructionKind::W: {
            long pref = static_cast<long>(c.s) * c.m - 1;
            return binomial_sum(pref, c.m, pref) * pow2(n - pref);
        }
        case ConstructionKind::Threshold:
            return gallery_detail::threshold_count(c.threshold, n);
        case ConstructionKind::Star: {
            int csz = popcount(c.star_center);
            return c.star_all_sizes ? pow2(n - csz) : binomial(n - csz, c.k - csz);
        }
    }
    throw std::logic_error("size_of: unhandled kind");
}

namespace gallery_detail {

// Counts |F(alpha)| by grouping equal weights: sum over per-group pick
// counts of the product of binomials, restricted to weight >= 1. Groups of
// weight zero only multiply by a power of two.
inline Bigint threshold_count(const ThresholdVector& v, long n) {
    struct Group {
        Rat w;
        long cnt;
    };
    std::vector<Group> groups;
    for (const Rat& a : v.alpha) {
        if (!groups.empty() && groups.back().w == a)
            ++groups.back().cnt;
        else
            groups.push_back({a, 1});
    }
    Bigint zero_mult = 1;
    while (!groups.empty() && groups.back().w == 0) {
        zero_mult *= pow2(groups.back().cnt);
        groups.pop_back();
    }
    double combos = 1;
    for (const Group& g : groups) combos *= static_cast<double>(g.cnt + 1);
    if (combos > 2e7) {
        if (n <= kMaxGroundSize) {
            // fall back to direct enumeration at buildable sizes
            Bigint cnt = 0;
            ConstructionSpec spec = ConstructionSpec::Threshold(v);
            Mask top = full_mask(static_cast<int>(n));
            for (Mask a = 0;; ++a) {
                if (spec_membership(spec, a, static_cast<int>(n))) ++cnt;
                if (a == top) break;
            }
            return cnt;
        }
        throw std::invalid_argument("threshold size_of: too many distinct weight levels for exact counting");
    }
    Bigint total = 0;
    std::vector<long> pick(groups.size(), 0);
    auto rec = [&](auto&& self, std::size_t g, const Rat& w, const Bigint& ways) -> void {
        if (w >= 1) {
            // every remaining choice keeps the sum >= 1
            Bigint rest = 1;
            for (std::size_t h = g; h < groups.size(); ++h) rest *= pow2(groups[h].cnt);
            total += ways * rest;
            return;
        }
        if (g == groups.size()) return;
        for (long a = 0; a <= groups[g].cnt; ++a)
            self(self, g + 1, w + groups[g].w * a, ways * binomial(groups[g].cnt, a));
    };
    rec(rec, 0, Rat(0), Bigint(1));
    return total * zero_mult;
}

}  // namespace gallery_detail

// --- the paper's threshold representations --------------------------------

// P(s,m,l) = F(alpha_p), alpha_p = (2,...,2,1,...,1)/(m+1) with l-1 twos,
// on n = sm+s-l.
inline ThresholdVector alpha_p(int s, int m, int l) {
    int n = s * m + s - l;
    ThresholdVector v;
    v.alpha.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v.alpha.push_back(Rat(i < l - 1 ? 2 : 1, m + 1));
    v.validate();
    return v;
}

// W(m,s) = F(alpha_w), alpha_w = (1,...,1,0,...,0)/m with sm-1 ones.
inline ThresholdVector alpha_w(int m, int s, int n) {
    if (n < s * m - 1) throw std::invalid_argument("alpha_w requires n >= sm-1");
    ThresholdVector v;
    v.alpha.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v.alpha.push_back(i < s * m - 1 ? Rat(1, m) : Rat(0));
    v.validate();
    return v;
}

// H^(k)(n,sigma) = F(alpha_h) cap ([n] choose k), alpha_h =
// (1,...,1, 1-1/k, 1/k,...,1/k, 0,...,0) with sigma-1 leading ones and k
// entries of 1/k.
inline ThresholdVector alpha_h(int k, int n, int sigma) {
    if (n < sigma + k) throw std::invalid_argument("alpha_h requires n >= sigma+k");
    ThresholdVector v;
    v.alpha.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < sigma - 1; ++i) v.alpha.push_back(Rat(1));
    v.alpha.push_back(Rat(k - 1, k));
    for (int i = 0; i < k; ++i) v.alpha.push_back(Rat(1, k));
    while (static_cast<int>(v.alpha.size()) < n) v.alpha.push_back(Rat(0));
    v.validate();
    return v;
}

// --- verification of advertised invariants --------------------------------

struct ConstructionCheck {
    std::string what;
    bool ok;
    std::string detail;
};

struct ConstructionReport {
    std::vector<ConstructionCheck> checks;
    bool all_ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

// Asserts the advertised matching / covering numbers of a materialized
// construction. Failures are report entries, never exceptions.
inline ConstructionReport verify_construction(const ConstructionSpec& c, int n) {
    ConstructionReport rep;
    SetFamily f = build(c, n);
    auto add = [&](const std::string& what, bool ok, const std::string& detail) {
        rep.checks.push_back({what, ok, detail});
    };
    add("build/size agreement", Bigint(f.size()) == size_of(c, n),
        "|build| = " + std::to_string(f.size()) + ", size_of = " + to_string(size_of(c, n)));

    switch (c.kind) {
        case ConstructionKind::P: {
            int nu = matching_number(f).nu;
            add("nu(P) < s", nu < c.s, "nu = " + std::to_string(nu) + ", s = " + std::to_string(c.s));
            break;
        }
        case ConstructionKind::B: {
            auto d = has_D_property(f, c.s, c.q);
            add("B is D(s,q)", d.holds, d.holds ? "no violating tuple" : "violating tuple found");
            break;
        }
        case ConstructionKind::A: {
            int nu = matching_number(f).nu;
            add("nu(A_i) = s", nu == c.s, "nu = " + std::to_string(nu));
            if (n >= c.k + c.s) {
                auto cov = covering_number(f);
                if (c.i == 1)
                    add("tau(A_1) = s", cov.tau == c.s, "tau = " + std::to_string(cov.tau));
                else
                    add("tau(A_i) > s for i >= 2", cov.tau > c.s, "tau = " + std::to_string(cov.tau));
            }
            break;
        }
        case ConstructionKind::H: {
            int nu = matching_number(f).nu;
            add("nu(H) = s", nu == c.s, "nu = " + std::to_string(nu));
            if (n >= c.k + c.s) {
                auto cov = covering_number(f);
                add("tau(H) = s+1", cov.tau == c.s + 1, "tau = " + std::to_string(cov.tau));
            }
            break;
        }
        case ConstructionKind::W: {
            int nu = matching_number(f).nu;
            add("nu(W) = s-1", nu == c.s - 1, "nu = " + std::to_string(nu));
            break;
        }
        case ConstructionKind::Threshold: {
            // nu(F(alpha)) < s whenever the weight budget is below s
            Rat tot = c.threshold.total();
            if (c.s >= 2 && tot < c.s) {
                int nu = matching_number(f).nu;
                add("nu(F(alpha)) < s", nu < c.s,
                    "nu = " + std::to_string(nu) + ", sum alpha = " + to_string(tot));
            }
            break;
        }
        case ConstructionKind::Star:
            break;
    }
    add("shifted", f.is_shifted(), "nonincreasing weights give shift-invariance");
    return rep;
}

// --- CLI spec strings ------------------------------------------------------
//
//   P:s=3,m=1,l=2        B:q=3,s=2        A:i=1,k=2,s=2
//   H:k=2,s=1            W:m=2,s=3        thresh:1,1/2,1/2,1/2
//   star:c=1+2,k=3       star:c=1,all

inline Rat parse_rat(const std::string& tok) {
    auto slash = tok.find('/');
    if (slash == std::string::npos) return Rat(Bigint(tok));
    return Rat(Bigint(tok.substr(0, slash)), Bigint(tok.substr(slash + 1)));
}

inline ConstructionSpec parse_spec(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("construction spec needs '<kind>:<params>'");
    std::string kind = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);

    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> out;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            auto next = s.find(sep, pos);
            out.push_back(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        return out;
    };

    if (kind == "thresh") {
        ThresholdVector v;
        for (const std::string& tok : split(rest, ','))
            if (!tok.empty()) v.alpha.push_back(parse_rat(tok));
        v.validate();
        return ConstructionSpec::Threshold(std::move(v));
    }

    std::map<std::string, std::string> kv;
    bool star_all = false;
    for (const std::string& tok : split(rest, ',')) {
        if (tok.empty()) continue;
        if (tok == "all") {
            star_all = true;
            continue;
        }
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("expected key=value in spec, got: " + tok);
        kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    auto geti = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) throw std::invalid_argument("construction spec missing parameter '" + key + "'");
        return std::stoi(it->second);
    };

    if (kind == "P") return ConstructionSpec::P(geti("s"), geti("m"), geti("l"));
    if (kind == "B") return ConstructionSpec::B(geti("q"), geti("s"));
    if (kind == "A") return ConstructionSpec::A(geti("i"), geti("k"), geti("s"));
    if (kind == "H") return ConstructionSpec::H(geti("k"), geti("s"));
    if (kind == "W") return ConstructionSpec::W(geti("m"), geti("s"));
    if (kind == "star") {
        auto it = kv.find("c");
        if (it == kv.end()) throw std::invalid_argument("star spec needs c=<elements joined by +>");
        Mask center = 0;
        for (const std::string& tok : split(it->second, '+')) center |= 1u << (std::stoi(tok) - 1);
        if (star_all) return ConstructionSpec::Star(center, std::nullopt);
        return ConstructionSpec::Star(center, geti("k"));
    }
    throw std::invalid_argument("unknown construction kind: " + kind);
}

inline std::string spec_to_string(const ConstructionSpec& c) {
    std::ostringstream ss;
    switch (c.kind) {
        case ConstructionKind::P: ss << "P:s=" << c.s << ",m=" << c.m << ",l=" << c.l; break;
        case ConstructionKind::B: ss << "B:q=" << c.q << ",s=" << c.s; break;
        case ConstructionKind::A: ss << "A:i=" << c.i << ",k=" << c.k << ",s=" << c.s; break;
        case ConstructionKind::H: ss << "H:k=" << c.k << ",s=" << c.s; break;
        case ConstructionKind::W: ss << "W:m=" << c.m << ",s=" << c.s; break;
        case ConstructionKind::Threshold: {
            ss << "thresh:";
            for (std::size_t i = 0; i < c.threshold.alpha.size(); ++i) {
                if (i) ss << ',';
                ss << to_string(c.threshold.alpha[i]);
            }
            break;
        }
        case ConstructionKind::Star: {
            ss << "star:c=";
            auto elems = elements_of(c.star_center);
            for (std::size_t i = 0; i < elems.size(); ++i) {
                if (i) ss << '+';
                ss << elems[i];
            }
            if (c.star_all_sizes)
                ss << ",all";
            else
                ss << ",k=" << c.k;
            break;
        }
    }
    return ss.str();
}

}  // namespace matchless
