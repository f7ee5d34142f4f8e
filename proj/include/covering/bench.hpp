#pragma once

#include "covering/bigint.hpp"
#include "covering/core.hpp"
#include "covering/determinant.hpp"
#include "covering/primes.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace covering {

struct BenchRow {
    std::size_t k = 0;
    BigInt value;                          // a_k from the recurrence
    double recurrence_ms = 0;              // total over all repeats
    std::optional<double> bareiss_ms;      // empty when skipped
    std::optional<bool> agree;             // empty when Bareiss was skipped
};

struct BenchConfig {
    std::size_t kmax = 12;
    std::size_t repeat = 1;
    /// Once one Bareiss case takes longer than this (single run), every
    /// larger k is skipped.
    double bareiss_timeout_ms = 250;
};

namespace detail {

template <class F>
double time_ms(std::size_t repeat, F&& f)
{
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t r = 0; r < repeat; ++r)
        f();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

} // namespace detail

/// Times a_k by the O(k) recurrence against Bareiss elimination on the
/// explicit matrix, for the first k primes, k = 1..kmax.
inline std::vector<BenchRow> run_benchmark(const BenchConfig& config)
{
    const auto primes = first_primes(config.kmax);
    const std::size_t repeat = config.repeat == 0 ? 1 : config.repeat;
    std::vector<BenchRow> rows;
    bool bareiss_capped = false;
    for (std::size_t k = 1; k <= config.kmax; ++k) {
        const auto system = validate_modulus_system(std::span(primes.data(), k));
        BenchRow row;
        row.k = k;
        row.recurrence_ms = detail::time_ms(repeat, [&] { row.value = available_det(system); });
        if (!bareiss_capped) {
            const auto matrix = build_available_matrix(system);
            BigInt det;
            std::size_t runs = 0;
            double elapsed = 0;
            // stop repeating as soon as a single case blows the budget
            while (runs < repeat) {
                elapsed += detail::time_ms(1, [&] { det = det_bareiss(matrix); });
                ++runs;
                if (elapsed / static_cast<double>(runs) > config.bareiss_timeout_ms)
                    break;
            }
            if (elapsed / static_cast<double>(runs) > config.bareiss_timeout_ms) {
                bareiss_capped = true;
            } else {
                row.bareiss_ms = elapsed;
                row.agree = det == row.value;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace covering
