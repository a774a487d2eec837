#include "gdrs/bigint.hpp"

#include <limits>

namespace gdrs {

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    // r stays integral: after step i it equals C(n-k+i, i).
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    const BigInt r = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
    return r > kMax ? kMax : static_cast<std::uint64_t>(r);
}

BigInt ipow(std::uint64_t base, std::uint32_t exp) {
    BigInt r = 1;
    BigInt b = base;
    while (exp != 0) {
        if (exp & 1U) r *= b;
        b *= b;
        exp >>= 1U;
    }
    return r;
}

std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace gdrs
