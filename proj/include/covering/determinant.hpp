#pragma once

#include "covering/bigint.hpp"
#include "covering/core.hpp"
#include "covering/error.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace covering {

/// Dense square matrix of exact integers, row-major.
class IntegerMatrix {
public:
    explicit IntegerMatrix(std::size_t dimension, const BigInt& fill = 0)
        : dim_(dimension), entries_(dimension * dimension, fill)
    {
        if (dimension == 0)
            throw Error(ErrorCode::InvalidArgument, "matrix dimension must be positive");
    }

    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) : dim_(rows.size())
    {
        if (dim_ == 0)
            throw Error(ErrorCode::InvalidArgument, "matrix dimension must be positive");
        entries_.reserve(dim_ * dim_);
        for (const auto& row : rows) {
            if (row.size() != dim_)
                throw Error(ErrorCode::NotSquare, "row of length " + std::to_string(row.size()) +
                                                      " in a " + std::to_string(dim_) + "-row matrix");
            for (long v : row)
                entries_.emplace_back(v);
        }
    }

    std::size_t dimension() const noexcept { return dim_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

    const std::vector<BigInt>& entries() const noexcept { return entries_; }

    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b)
    {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

private:
    std::size_t dim_;
    std::vector<BigInt> entries_;
};

/// k x k matrix with the moduli on the diagonal and ones elsewhere.
inline IntegerMatrix build_available_matrix(const ModulusSystem& system)
{
    const std::size_t k = system.size();
    IntegerMatrix m(k, 1);
    for (std::size_t i = 0; i < k; ++i)
        m(i, i) = to_big(system[i]);
    return m;
}

/// (k+1) x (k+1) bordered matrix: a row of ones on top, then row i carries
/// the i-th modulus in column i-1 and ones elsewhere.
inline IntegerMatrix build_free_matrix(const ModulusSystem& system)
{
    const std::size_t k = system.size();
    IntegerMatrix m(k + 1, 1);
    for (std::size_t i = 1; i <= k; ++i)
        m(i, i - 1) = to_big(system[i - 1]);
    return m;
}

/// Fraction-free Gaussian elimination. Every division is exact, so the
/// result is the exact determinant. A zero pivot is replaced by the first
/// row below it with a nonzero entry in that column.
inline BigInt det_bareiss(IntegerMatrix m)
{
    const std::size_t n = m.dimension();
    BigInt prev = 1;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && sgn(m(swap_row, k)) == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            for (std::size_t c = k; c < n; ++c)
                swap(m(k, c), m(swap_row, c));
            negate = !negate;
        }
        const BigInt& pivot = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt& target = m(i, j);
                target = target * pivot - m(i, k) * m(k, j);
                mpz_divexact(target.get_mpz_t(), target.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = pivot;
    }
    BigInt det = m(n - 1, n - 1);
    return negate ? BigInt(-det) : det;
}

inline constexpr std::size_t laplace_max_dimension = 8;

namespace detail {

// Expands along the last active row; `cols` lists the columns still in play.
inline BigInt laplace_expand(const IntegerMatrix& m, std::size_t rows, std::vector<std::size_t>& cols)
{
    if (rows == 1)
        return m(0, cols[0]);
    const std::size_t row = rows - 1;
    BigInt total = 0;
    for (std::size_t pos = 0; pos < cols.size(); ++pos) {
        const BigInt& entry = m(row, cols[pos]);
        if (sgn(entry) == 0)
            continue;
        const std::size_t col = cols[pos];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(pos));
        BigInt minor = laplace_expand(m, rows - 1, cols);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(pos), col);
        // sign of (row, pos) within the current minor
        if ((row + pos) % 2 == 0)
            total += entry * minor;
        else
            total -= entry * minor;
    }
    return total;
}

} // namespace detail

/// Cofactor expansion along the last row. Factorial cost, so limited to
/// dimension 8.
inline BigInt det_laplace(const IntegerMatrix& m)
{
    if (m.dimension() > laplace_max_dimension)
        throw Error(ErrorCode::DimensionTooLarge,
                    "Laplace expansion is limited to dimension " + std::to_string(laplace_max_dimension) +
                        ", got " + std::to_string(m.dimension()));
    std::vector<std::size_t> cols(m.dimension());
    for (std::size_t i = 0; i < cols.size(); ++i)
        cols[i] = i;
    return detail::laplace_expand(m, m.dimension(), cols);
}

/// Both determinant families for a prefix of the moduli, advanced one
/// modulus at a time.
struct DeterminantPair {
    BigInt available; // A_t
    BigInt free;      // F_t

    /// Appends modulus p: A_t = F_{t-1} + (p-1) A_{t-1}, F_t = (p-1) F_{t-1}.
    void extend(std::uint64_t p)
    {
        const BigInt pm1 = to_big(p - 1);
        available = free + pm1 * available;
        free *= pm1;
    }

    static DeterminantPair base(std::uint64_t p) { return {to_big(p), to_big(p - 1)}; }
};

/// A_k and F_k in O(k) multiplications, folding the moduli left to right.
inline DeterminantPair determinant_pair(const ModulusSystem& system)
{
    DeterminantPair d = DeterminantPair::base(system[0]);
    for (std::size_t i = 1; i < system.size(); ++i)
        d.extend(system[i]);
    return d;
}

inline BigInt available_det(const ModulusSystem& system) { return determinant_pair(system).available; }

/// Nonnegative count F_k = prod (p_i - 1). The raw bordered determinant is
/// (-1)^k times this.
inline BigInt free_det(const ModulusSystem& system) { return determinant_pair(system).free; }

/// Sign-corrected free count from a raw bordered determinant of a k-modulus system.
inline BigInt free_from_raw(const BigInt& raw, std::size_t k) { return k % 2 == 0 ? raw : BigInt(-raw); }

} // namespace covering
