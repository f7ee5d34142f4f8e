#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace covering {

using BigInt = mpz_class;

inline BigInt to_big(std::uint64_t v)
{
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return r;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

/// Parses an optionally signed decimal string. Rejects anything else,
/// including empty input and embedded whitespace.
inline std::optional<BigInt> parse_decimal(std::string_view text)
{
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
    if (digits.empty())
        return std::nullopt;
    for (char c : digits)
        if (c < '0' || c > '9')
            return std::nullopt;
    BigInt r;
    if (r.set_str(std::string(text.front() == '+' ? text.substr(1) : text), 10) != 0)
        return std::nullopt;
    return r;
}

/// Value of v as uint64 if it fits.
inline std::optional<std::uint64_t> to_u64(const BigInt& v)
{
    if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64)
        return std::nullopt;
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
    return out;
}

} // namespace covering
