#pragma once

#include "covering/bigint.hpp"
#include "covering/core.hpp"
#include "covering/counting.hpp"
#include "covering/error.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace covering {

struct SieveConfig {
    std::uint64_t chunk_size = std::uint64_t{1} << 20;
    BigInt product_limit = 1'000'000'000;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 1;
};

inline constexpr std::uint64_t exhaustive_assignment_budget = 1'000'000;

namespace detail {

inline std::uint64_t checked_sieve_product(const ModulusSystem& system, const SieveConfig& config)
{
    if (config.chunk_size == 0)
        throw Error(ErrorCode::InvalidArgument, "chunk_size must be at least 1");
    if (config.product_limit < 1)
        throw Error(ErrorCode::InvalidArgument, "product_limit must be at least 1");
    const auto product = to_u64(system.product());
    if (system.product() > config.product_limit || !product)
        throw Error(ErrorCode::ProductTooLarge, "product " + to_decimal(system.product()) +
                                                    " exceeds the sieve limit " +
                                                    to_decimal(config.product_limit));
    return *product;
}

// Adds the gamma histogram of [lo, lo + len) to `hist`. `buf` has room for len bytes.
inline void sieve_chunk(const ModulusSystem& system, const ResidueAssignment& assignment,
                        std::uint64_t lo, std::uint64_t len, std::vector<std::uint8_t>& buf,
                        std::vector<std::uint64_t>& hist)
{
    std::fill_n(buf.begin(), len, std::uint8_t{0});
    for (std::size_t i = 0; i < system.size(); ++i) {
        const std::uint64_t p = system[i];
        const std::uint64_t offset = (assignment[i] + (p - lo % p)) % p;
        for (std::uint64_t o = offset; o < len; o += p)
            ++buf[o];
    }
    for (std::uint64_t o = 0; o < len; ++o)
        ++hist[buf[o]];
}

} // namespace detail

/// Marks every integer of [1, P] covered by each chosen class and tallies
/// the coverage multiplicities. Chunks are processed independently and
/// merged by addition, so the result does not depend on chunk size or
/// thread count.
inline CoverageHistogram sieve_histogram(const ModulusSystem& system, const ResidueAssignment& assignment,
                                         const SieveConfig& config = {})
{
    if (assignment.size() != system.size())
        throw Error(ErrorCode::LengthMismatch, "assignment does not match system");
    const std::uint64_t product = detail::checked_sieve_product(system, config);
    // per-integer counters are bytes
    if (system.size() > std::numeric_limits<std::uint8_t>::max())
        throw Error(ErrorCode::KTooLarge, "sieve supports at most 255 moduli");

    const std::uint64_t chunk = std::min(config.chunk_size, product);
    const std::uint64_t n_chunks = product / chunk + (product % chunk != 0);
    unsigned workers = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.threads;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, n_chunks));

    const std::size_t k = system.size();
    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(k + 1, 0));
    std::atomic<std::uint64_t> next{0};
    auto work = [&](unsigned id) {
        std::vector<std::uint8_t> buf(chunk);
        for (std::uint64_t c = next++; c < n_chunks; c = next++) {
            const std::uint64_t lo = 1 + c * chunk;
            const std::uint64_t len = std::min(chunk, product - (lo - 1));
            detail::sieve_chunk(system, assignment, lo, len, buf, partial[id]);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned id = 0; id < workers; ++id)
            pool.emplace_back(work, id);
    }

    CoverageHistogram out{std::vector<BigInt>(k + 1, 0)};
    for (const auto& h : partial)
        for (std::size_t j = 0; j <= k; ++j)
            out.counts[j] += to_big(h[j]);
    return out;
}

inline CoverageCounts oracle_counts(const ModulusSystem& system, const ResidueAssignment& assignment,
                                    const SieveConfig& config = {})
{
    return sieve_histogram(system, assignment, config).to_counts(system.product());
}

/// Uniform residue in [0, p) by rejection, independent of the standard
/// library's distribution implementation.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t p)
{
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % p + 1) % p;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw > limit);
    return draw % p;
}

inline ResidueAssignment random_assignment(const ModulusSystem& system, std::mt19937_64& rng)
{
    std::vector<std::uint64_t> residues(system.size());
    for (std::size_t i = 0; i < system.size(); ++i)
        residues[i] = uniform_below(rng, system[i]);
    return ResidueAssignment::from_unsigned(system, residues);
}

struct IndependenceMismatch {
    ResidueAssignment assignment;
    CoverageCounts observed;
};

struct IndependenceReport {
    CoverageCounts expected;          // recurrence prediction
    std::uint64_t tested = 0;         // assignments sieved
    std::uint64_t agreed = 0;         // of those, matching `expected`
    bool exhaustive = false;
    std::optional<IndependenceMismatch> first_mismatch;

    bool all_agree() const { return tested > 0 && agreed == tested; }
};

/// Sieves `trials` seeded random assignments, or every assignment when
/// `exhaustive` is set, and compares each against coverage_counts.
inline IndependenceReport residue_independence_check(const ModulusSystem& system, std::uint64_t trials,
                                                     std::uint64_t seed, const SieveConfig& config = {},
                                                     bool exhaustive = false)
{
    detail::checked_sieve_product(system, config);
    IndependenceReport report{coverage_counts(system), 0, 0, exhaustive, std::nullopt};

    auto run = [&](const ResidueAssignment& a) {
        CoverageCounts observed = oracle_counts(system, a, config);
        ++report.tested;
        if (observed == report.expected)
            ++report.agreed;
        else if (!report.first_mismatch)
            report.first_mismatch = IndependenceMismatch{a, std::move(observed)};
    };

    if (exhaustive) {
        if (system.product() > exhaustive_assignment_budget)
            throw Error(ErrorCode::TooManyAssignments,
                        to_decimal(system.product()) + " assignments exceed the exhaustive budget of " +
                            std::to_string(exhaustive_assignment_budget));
        // mixed-radix odometer over all residue tuples
        std::vector<std::uint64_t> digits(system.size(), 0);
        while (true) {
            run(ResidueAssignment::from_unsigned(system, digits));
            std::size_t i = 0;
            while (i < digits.size() && ++digits[i] == system[i])
                digits[i++] = 0;
            if (i == digits.size())
                break;
        }
    } else {
        if (trials == 0)
            throw Error(ErrorCode::InvalidArgument, "trials must be positive");
        std::mt19937_64 rng(seed);
        for (std::uint64_t t = 0; t < trials; ++t)
            run(random_assignment(system, rng));
    }
    return report;
}

} // namespace covering
