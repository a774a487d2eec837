#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gdrs {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient; zero outside 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Binomial that fits 64 bits, for budget arithmetic. Saturates at UINT64_MAX.
std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k);

BigInt ipow(std::uint64_t base, std::uint32_t exp);

/// (-1)^e for any integer e.
inline int sign_pow(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

std::string to_string(const BigInt& v);

}  // namespace gdrs
