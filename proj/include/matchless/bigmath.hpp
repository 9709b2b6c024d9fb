#pragma once

// Exact arithmetic used throughout: arbitrary-precision integers and
// rationals (no floating point in any membership decision or assertion).

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace matchless {

using Bigint = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Bigint& v) { return v.str(); }

// Rationals render as "p" when integral, "p/q" otherwise.
inline std::string to_string(const Rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

// Binomial coefficients by Pascal recurrence, memoized in one triangular
// table. The table is built once (rows 0..max_n) on first use; callers that
// need larger n trigger a rebuild. C(n,k) = 0 outside 0 <= k <= n.
class BinomialTable {
public:
    static const Bigint& get(long n, long k) {
        static BinomialTable table;
        if (n < 0) throw std::invalid_argument("binomial: negative n");
        if (k < 0 || k > n) return table.zero_;
        table.ensure(n);
        return table.rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

private:
    BinomialTable() { ensure(64); }

    void ensure(long n) {
        if (static_cast<std::size_t>(n) < rows_.size()) return;
        std::size_t target = static_cast<std::size_t>(n) + 1;
        rows_.reserve(target);
        while (rows_.size() < target) {
            std::size_t r = rows_.size();
            std::vector<Bigint> row(r + 1);
            row[0] = 1;
            row[r] = 1;
            for (std::size_t k = 1; k < r; ++k) row[k] = rows_[r - 1][k - 1] + rows_[r - 1][k];
            rows_.push_back(std::move(row));
        }
    }

    std::vector<std::vector<Bigint>> rows_;
    Bigint zero_{0};
};

inline const Bigint& binomial(long n, long k) { return BinomialTable::get(n, k); }

inline Bigint factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Bigint r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Bigint pow2(long n) {
    if (n < 0) throw std::invalid_argument("pow2: negative exponent");
    Bigint r = 1;
    return r << static_cast<unsigned>(n);
}

// Sum of C(n,t) for lo <= t <= hi (empty when lo > hi).
inline Bigint binomial_sum(long n, long lo, long hi) {
    Bigint acc = 0;
    if (lo < 0) lo = 0;
    for (long t = lo; t <= hi; ++t) acc += binomial(n, t);
    return acc;
}

}  // namespace matchless
