#pragma once

#include "covering/bigint.hpp"
#include "covering/error.hpp"
#include "covering/primes.hpp"

#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

static_assert(sizeof(unsigned long) == 8, "GMP ui routines must accept 64-bit moduli");

namespace covering {

/// An ordered list of pairwise-distinct moduli (primes, or pairwise-coprime
/// integers in coprime mode) together with their exact product. Only
/// obtainable through validate_modulus_system, so every instance holds the
/// invariants.
class ModulusSystem {
public:
    const std::vector<std::uint64_t>& moduli() const noexcept { return moduli_; }
    const BigInt& product() const noexcept { return product_; }
    bool coprime_mode() const noexcept { return coprime_mode_; }
    std::size_t size() const noexcept { return moduli_.size(); }
    std::uint64_t operator[](std::size_t i) const { return moduli_[i]; }

    friend bool operator==(const ModulusSystem& a, const ModulusSystem& b)
    {
        return a.moduli_ == b.moduli_ && a.coprime_mode_ == b.coprime_mode_;
    }

private:
    ModulusSystem(std::vector<std::uint64_t> moduli, BigInt product, bool coprime_mode)
        : moduli_(std::move(moduli)), product_(std::move(product)), coprime_mode_(coprime_mode)
    {
    }

    friend ModulusSystem validate_modulus_system(std::span<const std::uint64_t>, bool);

    std::vector<std::uint64_t> moduli_;
    BigInt product_;
    bool coprime_mode_ = false;
};

inline ModulusSystem validate_modulus_system(std::span<const std::uint64_t> moduli,
                                             bool coprime_mode = false)
{
    if (moduli.empty())
        throw Error(ErrorCode::Empty, "modulus list is empty");
    BigInt product = 1;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        const std::uint64_t m = moduli[i];
        if (m < 2)
            throw Error(ErrorCode::TooSmall, "modulus " + std::to_string(m) + " is below 2");
        if (!coprime_mode && !is_prime(m))
            throw Error(ErrorCode::NotPrime, "modulus " + std::to_string(m) + " is not prime");
        for (std::size_t j = 0; j < i; ++j) {
            if (moduli[j] == m)
                throw Error(ErrorCode::Duplicate, "modulus " + std::to_string(m) + " is repeated");
            if (coprime_mode && std::gcd(moduli[j], m) != 1)
                throw Error(ErrorCode::NotCoprime, "moduli " + std::to_string(moduli[j]) + " and " +
                                                       std::to_string(m) + " share a factor");
        }
        product *= to_big(m);
    }
    return ModulusSystem({moduli.begin(), moduli.end()}, std::move(product), coprime_mode);
}

inline ModulusSystem validate_modulus_system(std::initializer_list<std::uint64_t> moduli,
                                             bool coprime_mode = false)
{
    return validate_modulus_system(std::span<const std::uint64_t>(moduli.begin(), moduli.size()),
                                   coprime_mode);
}

/// One residue per modulus, each reduced into [0, p_i).
class ResidueAssignment {
public:
    /// Residues may be negative or exceed their modulus; they are reduced.
    ResidueAssignment(const ModulusSystem& system, std::span<const std::int64_t> residues)
    {
        check_length(system, residues.size());
        residues_.reserve(residues.size());
        for (std::size_t i = 0; i < residues.size(); ++i) {
            const std::uint64_t p = system[i];
            const std::int64_t r = residues[i];
            std::uint64_t reduced;
            if (r >= 0) {
                reduced = static_cast<std::uint64_t>(r) % p;
            } else {
                // |r| as unsigned without overflowing on INT64_MIN
                const std::uint64_t mag = ~static_cast<std::uint64_t>(r) + 1;
                const std::uint64_t m = mag % p;
                reduced = m == 0 ? 0 : p - m;
            }
            residues_.push_back(reduced);
        }
    }

    ResidueAssignment(const ModulusSystem& system, std::initializer_list<std::int64_t> residues)
        : ResidueAssignment(system, std::span<const std::int64_t>(residues.begin(), residues.size()))
    {
    }

    /// Unsigned residues, reduced modulo their moduli.
    static ResidueAssignment from_unsigned(const ModulusSystem& system,
                                           std::span<const std::uint64_t> residues)
    {
        check_length(system, residues.size());
        std::vector<std::uint64_t> reduced(residues.size());
        for (std::size_t i = 0; i < residues.size(); ++i)
            reduced[i] = residues[i] % system[i];
        return ResidueAssignment(std::move(reduced));
    }

    /// All-zero assignment (every progression is the multiples of its modulus).
    static ResidueAssignment zeros(const ModulusSystem& system)
    {
        return ResidueAssignment(std::vector<std::uint64_t>(system.size(), 0));
    }

    const std::vector<std::uint64_t>& residues() const noexcept { return residues_; }
    std::size_t size() const noexcept { return residues_.size(); }
    std::uint64_t operator[](std::size_t i) const { return residues_[i]; }

    friend bool operator==(const ResidueAssignment&, const ResidueAssignment&) = default;

private:
    explicit ResidueAssignment(std::vector<std::uint64_t> reduced) : residues_(std::move(reduced)) {}

    static void check_length(const ModulusSystem& system, std::size_t n)
    {
        if (n != system.size())
            throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(system.size()) +
                                                       " residues, got " + std::to_string(n));
    }

    std::vector<std::uint64_t> residues_;
};

/// Exact counts over the window [1, product].
struct CoverageCounts {
    BigInt available;
    BigInt free;
    BigInt occupied;
    BigInt product;

    bool consistent() const
    {
        return available + occupied == product && free <= available && available <= product &&
               sgn(free) >= 0 && sgn(occupied) >= 0;
    }

    friend bool operator==(const CoverageCounts& a, const CoverageCounts& b)
    {
        return a.available == b.available && a.free == b.free && a.occupied == b.occupied &&
               a.product == b.product;
    }
};

/// Number of chosen residue classes containing n, for n in [1, product].
inline std::size_t gamma(const ModulusSystem& system, const ResidueAssignment& assignment,
                         const BigInt& n)
{
    if (assignment.size() != system.size())
        throw Error(ErrorCode::LengthMismatch, "assignment does not match system");
    if (n < 1 || n > system.product())
        throw Error(ErrorCode::OutOfRange,
                    "n = " + to_decimal(n) + " lies outside [1, " + to_decimal(system.product()) + "]");
    std::size_t hits = 0;
    for (std::size_t i = 0; i < system.size(); ++i) {
        if (mpz_fdiv_ui(n.get_mpz_t(), system[i]) == assignment[i])
            ++hits;
    }
    return hits;
}

inline std::size_t gamma(const ModulusSystem& system, const ResidueAssignment& assignment,
                         std::uint64_t n)
{
    return gamma(system, assignment, to_big(n));
}

} // namespace covering
