#pragma once

// Exact evaluators for the closed-form values and bounds: the Kleitman
// values e(sm-1,s), e(sm,s), Quinn's e(3m+1,3), the conjectured general
// value |P(s,m,l)|, the Hilton-Milner-type size and stability bound for the
// uniform problem, and the handful of auxiliary quantities (per-level
// Frankl bound, the n = 2s-l deficiency, the two f(n,q,s) corollary values,
// the threshold of the large-n f theorem).
//
// Everything is exact big-integer / big-rational arithmetic. Out-of-
// hypothesis parameters still evaluate, but the result is tagged
// guaranteed = false so exploratory sweeps can keep going.

#include "matchless/bigmath.hpp"
#include "matchless/gallery.hpp"

#include <stdexcept>
#include <string>

namespace matchless {

// e(sm-1,s) = sum_{m <= t <= sm-1} C(sm-1,t)
inline Bigint kleitman_e_sm1(int s, int m) {
    if (s < 2 || m < 1) throw std::invalid_argument("kleitman_e: s >= 2, m >= 1 required");
    long n = static_cast<long>(s) * m - 1;
    return binomial_sum(n, m, n);
}

// e(sm,s) = C(sm-1,m) + sum_{m+1 <= t <= sm} C(sm,t)
inline Bigint kleitman_e_sm(int s, int m) {
    if (s < 2 || m < 1) throw std::invalid_argument("kleitman_e: s >= 2, m >= 1 required");
    long n = static_cast<long>(s) * m;
    return binomial(n - 1, m) + binomial_sum(n, m + 1, n);
}

enum class KleitmanPoint { AtSmMinus1, AtSm };

inline Bigint kleitman_e(int s, int m, KleitmanPoint at) {
    return at == KleitmanPoint::AtSmMinus1 ? kleitman_e_sm1(s, m) : kleitman_e_sm(s, m);
}

// e(3m+1,3) = C(3m,m-1) + sum_{m+1 <= t <= 3m+1} C(3m+1,t)
inline Bigint quinn_e(int m) {
    if (m < 1) throw std::invalid_argument("quinn_e: m >= 1 required");
    long n = 3L * m + 1;
    return binomial(n - 1, m - 1) + binomial_sum(n, m + 1, n);
}

struct TaggedValue {
    Bigint value;
    bool guaranteed = true;  // false when parameters are outside the stated hypothesis
    std::string note;
};

// Conjectured e(sm+s-l,s) = |P(s,m,l)|. The conjecture is stated for
// l <= ceil(s/2); larger l evaluates with a warning tag (the W-type
// families overtake P there).
inline TaggedValue conjecture1_value(int s, int m, int l) {
    if (!(0 < l && l <= s)) throw std::invalid_argument("conjecture1_value: 0 < l <= s required");
    long n = static_cast<long>(s) * m + s - l;
    TaggedValue out;
    out.value = size_of(ConstructionSpec::P(s, m, l), n);
    if (l > (s + 1) / 2) {
        out.guaranteed = false;
        out.note = "l > ceil(s/2): outside the conjectured range";
    }
    return out;
}

// |H^(k)(n,s)| = C(n,k) - C(n-s,k) + 1 - C(n-s-k,k-1)
inline Bigint hm_size(int k, long n, int s) {
    if (n < static_cast<long>(s) * k) throw std::invalid_argument("hm_size: n >= sk required");
    return binomial(n, k) - binomial(n - s, k) + 1 - binomial(n - s - k, k - 1);
}

// Stability bound for nu = s, tau > s at n = (u+s-1)(k-1)+s+k:
// C(n,k) - C(n-s,k) - ((u-s-1)/u) C(n-s-k,k-1), an exact rational.
inline Rat thm2_bound(long n, int k, int s, int u) {
    if (u < s + 1) throw std::invalid_argument("thm2_bound: u >= s+1 required");
    if (n != static_cast<long>(u + s - 1) * (k - 1) + s + k)
        throw std::invalid_argument("thm2_bound: n must equal (u+s-1)(k-1)+s+k");
    Rat bound = Rat(binomial(n, k) - binomial(n - s, k));
    bound -= Rat(Bigint(u - s - 1) * binomial(n - s - k, k - 1), Bigint(u));
    return bound;
}

// e_k(n,sigma) = C(n,k) - C(n-(sigma-1),k); proven for
// n >= (2(sigma-1)+1)k - (sigma-1) (for sigma = 2 this is the
// Erdos-Ko-Rado value C(n-1,k-1), valid already for n >= 2k).
inline TaggedValue emc_value(long n, int k, int sigma) {
    if (sigma < 2 || k < 1) throw std::invalid_argument("emc_value: sigma >= 2, k >= 1 required");
    TaggedValue out;
    out.value = binomial(n, k) - binomial(n - (sigma - 1), k);
    long threshold = sigma == 2 ? 2L * k : (2L * (sigma - 1) + 1) * k - (sigma - 1);
    if (n < threshold) {
        out.guaranteed = false;
        out.note = "n below the proven range n >= " + std::to_string(threshold);
    }
    return out;
}

// Per-level bound |F_i| <= (l-1) C(n-1,i-1) for i-uniform families with no
// matching of size l.
inline Bigint frankl_level_bound(long n, int i, int l) {
    if (l < 1 || i < 1) throw std::invalid_argument("frankl_level_bound: i >= 1, l >= 1 required");
    return Bigint(l - 1) * binomial(n - 1, i - 1);
}

// Minimum deficiency |2^[n] - F| >= 2(s-l)+2 at n = 2s-l (the m = 1 case).
inline Bigint prop0_deficiency(int s, int l) {
    if (!(1 <= l && l < s)) throw std::invalid_argument("prop0_deficiency: 1 <= l < s required");
    return Bigint(2) * (s - l) + 2;
}

// f(n,sm-1,s) = sum_{i >= m} C(n,i)
inline Bigint corollary_f_sm1(long n, int s, int m) {
    if (s < 2 || m < 0) throw std::invalid_argument("corollary_f: s >= 2, m >= 0 required");
    if (n < static_cast<long>(s) * m - 1) throw std::invalid_argument("corollary_f: n >= q required");
    return binomial_sum(n, m, n);
}

// f(n,sm+s-2,s) = C(n-1,m-1) + sum_{i >= m+1} C(n,i)
inline Bigint corollary_f_sm_s2(long n, int s, int m) {
    if (s < 2 || m < 0) throw std::invalid_argument("corollary_f: s >= 2, m >= 0 required");
    if (n < static_cast<long>(s) * m + s - 2) throw std::invalid_argument("corollary_f: n >= q required");
    return binomial(n - 1, m - 1) + binomial_sum(n, m + 1, n);
}

// n-threshold of the exact large-n determination of f(n,s(m+1)-l,s):
// max{ l(m^2+m+2), s(m+1)+l+m+3 }.
inline Bigint thm5_threshold(int l, int m, int s) {
    if (!(1 <= l && l <= s)) throw std::invalid_argument("thm5_threshold: 1 <= l <= s required");
    Bigint a = Bigint(l) * (static_cast<long>(m) * m + m + 2);
    Bigint b = Bigint(s) * (m + 1) + l + m + 3;
    return a > b ? a : b;
}

// --- binomial inequality claims (exact, used by the deficiency chain) ------

struct InequalityCheck {
    bool applicable = false;
    bool holds = false;
    Rat lhs{0}, rhs{0};
};

// ( s-2 - 1/(s-2) ) C(n,m) + sum_{j=1}^m (s-1) C(n,m-j) <= C(n,m+1), at
// n = sm+s-2.
inline InequalityCheck check_eq116(int s, int m) {
    InequalityCheck c;
    if (s < 3 || m < 1) return c;
    c.applicable = true;
    long n = static_cast<long>(s) * m + s - 2;
    c.lhs = Rat(Bigint(s - 2) * (s - 2) - 1, Bigint(s - 2)) * Rat(binomial(n, m));
    for (int j = 1; j <= m; ++j) c.lhs += Rat(Bigint(s - 1) * binomial(n, m - j));
    c.rhs = Rat(binomial(n, m + 1));
    c.holds = c.lhs <= c.rhs;
    return c;
}

// (s-l)/2 C(n,m) <= C(n,m+2), at n = sm+s-l with s >= 3, s >= l >= 2.
inline InequalityCheck check_eq167(int s, int m, int l) {
    InequalityCheck c;
    if (s < 3 || !(2 <= l && l <= s) || m < 1) return c;
    c.applicable = true;
    long n = static_cast<long>(s) * m + s - l;
    c.lhs = Rat(Bigint(s - l) * binomial(n, m), Bigint(2));
    c.rhs = Rat(binomial(n, m + 2));
    c.holds = c.lhs <= c.rhs;
    return c;
}

// (s-l) C(n,m) <= C(n,m+1), at n = sm+s-l.
inline InequalityCheck check_eq177(int s, int m, int l) {
    InequalityCheck c;
    if (!(1 <= l && l <= s) || m < 1) return c;
    c.applicable = true;
    long n = static_cast<long>(s) * m + s - l;
    c.lhs = Rat(Bigint(s - l) * binomial(n, m));
    c.rhs = Rat(binomial(n, m + 1));
    c.holds = c.lhs <= c.rhs;
    return c;
}

}  // namespace matchless
