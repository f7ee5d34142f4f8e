#pragma once

#include <cstdint>
#include <vector>

namespace covering {

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

} // namespace detail

/// Deterministic Miller-Rabin; the first twelve prime bases are a proven
/// witness set for every n < 2^64.
inline bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    constexpr std::uint64_t bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t p : bases) {
        if (n % p == 0)
            return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : bases) {
        std::uint64_t x = detail::pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

/// Smallest prime strictly greater than n. Caller guarantees one exists
/// below 2^64.
inline std::uint64_t next_prime(std::uint64_t n)
{
    if (n < 2)
        return 2;
    if (n == 2)
        return 3;
    std::uint64_t c = n % 2 == 0 ? n + 1 : n + 2;
    while (!is_prime(c))
        c += 2;
    return c;
}

/// The first `count` primes in increasing order.
inline std::vector<std::uint64_t> first_primes(std::size_t count)
{
    std::vector<std::uint64_t> out;
    out.reserve(count);
    std::uint64_t p = 1;
    while (out.size() < count) {
        p = next_prime(p);
        out.push_back(p);
    }
    return out;
}

} // namespace covering
