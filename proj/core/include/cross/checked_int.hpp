#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cross {

// 128-bit helpers for the exact integer arithmetic behind multiplicities.
// Every overflow is an explicit error, never a silent wraparound.

using u128 = unsigned __int128;

inline std::uint64_t narrow_u64(u128 v, const char* ctx) {
    if (v > static_cast<u128>(UINT64_MAX))
        throw std::overflow_error(std::string(ctx) + ": value exceeds 64 bits");
    return static_cast<std::uint64_t>(v);
}

inline u128 mul_u128(u128 a, u128 b, const char* ctx) {
    if (a != 0 && b > static_cast<u128>(-1) / a)
        throw std::overflow_error(std::string(ctx) + ": 128-bit overflow");
    return a * b;
}

// C(a, b) with the convention C(a, b) = 0 for a < b and C(a, 0) = 1.
inline std::uint64_t binomial(long long a, long long b) {
    if (b < 0) throw std::invalid_argument("binomial: negative lower index");
    if (b == 0) return 1;
    if (a < b) return 0;
    if (b > a - b) b = a - b;
    u128 acc = 1;
    for (long long i = 1; i <= b; ++i) {
        acc = mul_u128(acc, static_cast<u128>(a - b + i), "binomial");
        acc /= static_cast<u128>(i); // product of i consecutive integers is divisible by i!
    }
    return narrow_u64(acc, "binomial");
}

// Exact quotient; the callers rely on divisibility guaranteed by the formulas.
inline std::uint64_t exact_div(u128 num, u128 den, const char* ctx) {
    if (den == 0 || num % den != 0)
        throw std::logic_error(std::string(ctx) + ": division is not exact");
    return narrow_u64(num / den, ctx);
}

} // namespace cross
