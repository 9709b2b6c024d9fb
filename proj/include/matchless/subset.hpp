#pragma once

// Subsets of [n] = {1,...,n} as n-bit masks. Element i corresponds to bit
// i-1; all I/O is 1-based to match the usual set notation.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace matchless {

using Mask = std::uint32_t;

inline constexpr int kMaxGroundSize = 24;

inline int popcount(Mask m) { return std::popcount(m); }

inline void check_ground_size(int n) {
    if (n < 1 || n > kMaxGroundSize)
        throw std::invalid_argument("ground-set size must be in [1," + std::to_string(kMaxGroundSize) +
                                    "], got " + std::to_string(n));
}

// Mask of the prefix [1,p] (p may be 0, giving the empty set).
inline Mask prefix_mask(int p) { return p <= 0 ? 0u : (p >= 32 ? ~0u : ((1u << p) - 1u)); }

inline Mask full_mask(int n) { return prefix_mask(n); }

inline bool contains(Mask m, int element) { return (m >> (element - 1)) & 1u; }

inline Mask with_element(Mask m, int element) { return m | (1u << (element - 1)); }

inline Mask without_element(Mask m, int element) { return m & ~(1u << (element - 1)); }

// Elements of a mask in increasing 1-based order.
inline std::vector<int> elements_of(Mask m) {
    std::vector<int> out;
    while (m) {
        int b = std::countr_zero(m);
        out.push_back(b + 1);
        m &= m - 1;
    }
    return out;
}

inline Mask mask_of_elements(const std::vector<int>& elems, int n) {
    Mask m = 0;
    for (int e : elems) {
        if (e < 1 || e > n) throw std::invalid_argument("element " + std::to_string(e) + " outside [1," + std::to_string(n) + "]");
        m |= 1u << (e - 1);
    }
    return m;
}

// "{}" for the empty set, otherwise comma-separated 1-based elements.
inline std::string format_subset(Mask m) {
    if (m == 0) return "{}";
    std::string out;
    for (int e : elements_of(m)) {
        if (!out.empty()) out += ',';
        out += std::to_string(e);
    }
    return out;
}

inline Mask parse_subset(const std::string& line, int n) {
    std::string s;
    for (char c : line)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty() || s == "{}") return 0;
    Mask m = 0;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (tok.empty()) throw std::invalid_argument("empty element in subset line: " + line);
        int e = std::stoi(tok);
        if (e < 1 || e > n) throw std::invalid_argument("element " + std::to_string(e) + " outside ground set [1," + std::to_string(n) + "]");
        m |= 1u << (e - 1);
        pos = next == std::string::npos ? s.size() : next + 1;
    }
    return m;
}

inline std::string format_hex(Mask m) {
    if (m == 0) return "0";
    static const char* digits = "0123456789abcdef";
    std::string out;
    while (m) {
        out.insert(out.begin(), digits[m & 0xf]);
        m >>= 4;
    }
    return out;
}

inline Mask parse_hex(const std::string& line, int n) {
    Mask m = 0;
    bool any = false;
    for (char c : line) {
        if (isspace(static_cast<unsigned char>(c))) continue;
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else throw std::invalid_argument("invalid hex mask line: " + line);
        m = (m << 4) | static_cast<Mask>(d);
        any = true;
    }
    if (!any) throw std::invalid_argument("empty hex mask line");
    if (m & ~full_mask(n)) throw std::invalid_argument("hex mask " + line + " has bits outside [1," + std::to_string(n) + "]");
    return m;
}

// Enumerates all k-subsets of the set bits of `universe` in increasing mask
// order. Gosper-style iteration restricted to a sparse universe via the
// index mapping of set bits.
template <typename Fn>
inline void for_each_subset_of_size(Mask universe, int k, Fn&& fn) {
    std::vector<int> bits;
    for (Mask u = universe; u; u &= u - 1) bits.push_back(std::countr_zero(u));
    int nn = static_cast<int>(bits.size());
    if (k < 0 || k > nn) return;
    if (k == 0) {
        fn(Mask{0});
        return;
    }
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        Mask m = 0;
        for (int i : idx) m |= 1u << bits[static_cast<std::size_t>(i)];
        fn(m);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == nn - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// Enumerates all subsets of `universe` (including 0 and universe itself).
template <typename Fn>
inline void for_each_subset(Mask universe, Fn&& fn) {
    Mask sub = universe;
    while (true) {
        fn(sub);
        if (sub == 0) break;
        sub = (sub - 1) & universe;
    }
}

}  // namespace matchless
