#pragma once

#include "covering/bigint.hpp"
#include "covering/core.hpp"
#include "covering/determinant.hpp"
#include "covering/error.hpp"
#include "covering/primes.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace covering {

/// counts[j] = #{ n in [1, P] : gamma(n) = j }, j = 0..k.
struct CoverageHistogram {
    std::vector<BigInt> counts;

    BigInt total() const
    {
        BigInt s = 0;
        for (const auto& c : counts)
            s += c;
        return s;
    }

    CoverageCounts to_counts(const BigInt& product) const
    {
        CoverageCounts out{0, 0, 0, product};
        for (std::size_t j = 0; j < counts.size(); ++j) {
            if (j == 0)
                out.free = counts[j];
            if (j <= 1)
                out.available += counts[j];
            else
                out.occupied += counts[j];
        }
        return out;
    }

    friend bool operator==(const CoverageHistogram&, const CoverageHistogram&) = default;
};

/// sum_i P / p_i: the total number of (n, i) incidences in the window.
inline BigInt incidence_total(const ModulusSystem& system)
{
    BigInt s = 0;
    for (auto p : system.moduli())
        s += system.product() / to_big(p);
    return s;
}

/// Counts are a function of the moduli alone; no residue assignment needed.
inline CoverageCounts coverage_counts(const ModulusSystem& system)
{
    auto [available, free] = determinant_pair(system);
    BigInt occupied = system.product() - available;
    return {std::move(available), std::move(free), std::move(occupied), system.product()};
}

/// occ(k) via occ(t) = P_{t-1} + (p_t - 1) occ(t-1) - free(t-1), occ(1) = 0.
inline BigInt occ_recurrence(const ModulusSystem& system)
{
    BigInt occ = 0;
    BigInt free = to_big(system[0] - 1);
    BigInt prefix = to_big(system[0]);
    for (std::size_t t = 1; t < system.size(); ++t) {
        const BigInt pm1 = to_big(system[t] - 1);
        occ = prefix + pm1 * occ - free;
        free *= pm1;
        prefix *= to_big(system[t]);
    }
    return occ;
}

inline constexpr std::size_t histogram_max_moduli = 25;

/// Coefficients of prod_i ((p_i - 1) + x): the x^j coefficient counts the
/// integers lying in exactly j of the chosen classes.
inline CoverageHistogram exact_coverage_histogram(const ModulusSystem& system)
{
    const std::size_t k = system.size();
    if (k > histogram_max_moduli)
        throw Error(ErrorCode::KTooLarge, "histogram supports at most " +
                                              std::to_string(histogram_max_moduli) + " moduli, got " +
                                              std::to_string(k));
    std::vector<BigInt> poly{1};
    poly.reserve(k + 1);
    for (auto p : system.moduli()) {
        const BigInt pm1 = to_big(p - 1);
        poly.emplace_back(0);
        for (std::size_t j = poly.size() - 1; j > 0; --j)
            poly[j] = poly[j] * pm1 + poly[j - 1];
        poly[0] *= pm1;
    }
    return {std::move(poly)};
}

struct SequenceTable {
    std::string name;
    std::vector<std::pair<std::size_t, BigInt>> terms;
};

inline constexpr std::string_view a067549_name = "A067549";
inline constexpr std::string_view a005867_name = "A005867";

namespace detail {

template <class Pick>
SequenceTable prime_sequence(std::string_view name, std::size_t n_terms, Pick pick)
{
    if (n_terms == 0)
        throw Error(ErrorCode::InvalidArgument, "at least one term is required");
    SequenceTable table{std::string(name), {}};
    table.terms.reserve(n_terms);
    std::uint64_t p = next_prime(1);
    DeterminantPair d = DeterminantPair::base(p);
    table.terms.emplace_back(1, pick(d));
    for (std::size_t t = 2; t <= n_terms; ++t) {
        p = next_prime(p);
        d.extend(p);
        table.terms.emplace_back(t, pick(d));
    }
    return table;
}

} // namespace detail

/// a_t over the first t primes, t = 1..n_terms.
inline SequenceTable oeis_a067549(std::size_t n_terms)
{
    return detail::prime_sequence(a067549_name, n_terms,
                                  [](const DeterminantPair& d) { return d.available; });
}

/// f_t = prod_{i <= t} (p_i - 1), t = 1..n_terms.
inline SequenceTable oeis_a005867(std::size_t n_terms)
{
    return detail::prime_sequence(a005867_name, n_terms, [](const DeterminantPair& d) { return d.free; });
}

} // namespace covering
