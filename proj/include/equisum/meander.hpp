#pragma once

#include <utility>
#include <vector>

#include "equisum/core.hpp"

// Closed-form constructions: Gauss pairings {i, n-i+1} and their
// generalization, the meander matrix, available whenever 2k divides n
// (n even) or n+1 (n odd).

namespace equisum {

enum class MeanderParity { even_n, odd_n };

/// rows x k grid whose columns are the containers. Rows snake through
/// consecutive integers: odd rows descend left to right, even rows ascend,
/// and each row pair forms one meander loop. For odd n the grid holds
/// {0,...,n}; the zero is kept in the matrix but stripped from containers.
struct MeanderMatrix {
    u64 rows = 0;
    u64 cols = 0;
    std::vector<u64> cells; ///< row-major, rows*cols entries
    MeanderParity parity = MeanderParity::even_n;

    u64 at(u64 row, u64 col) const { return cells[row * cols + col]; } // 0-based

    Container column(u64 col) const
    {
        Container out;
        out.reserve(rows);
        for (u64 r = 0; r < rows; ++r)
            out.push_back(at(r, col));
        return out;
    }

    friend bool operator==(const MeanderMatrix&, const MeanderMatrix&) = default;
};

/// The coarsest always-feasible split: k_g = ceil(n/2) containers of pairs.
struct GaussParams {
    u64 k_g = 0;
    u64 t_g = 0; ///< n for odd n, n+1 for even n
};

inline GaussParams gauss_params(u64 n)
{
    return n % 2 == 0 ? GaussParams{n / 2, checked_add(n, 1)} : GaussParams{(n + 1) / 2, n};
}

/// Pair i with n-i+1; odd n additionally gets the singleton {n} up front.
inline Partitioning gauss_partitioning(u64 n)
{
    const GaussParams g = gauss_params(n);
    Partitioning p;
    p.instance = make_instance(n, g.k_g, g.t_g);
    p.containers.reserve(g.k_g);
    if (n % 2 == 0) {
        for (u64 i = 1; i <= n / 2; ++i)
            p.containers.push_back({i, n - (i - 1)});
    } else {
        p.containers.push_back({n});
        for (u64 i = 2; i <= (n + 1) / 2; ++i)
            p.containers.push_back({i - 1, n - (i - 1)});
    }
    return p;
}

inline bool meander_applicable(u64 n, u64 k)
{
    if (n == 0 || k == 0)
        return false;
    const u64 two_k = checked_mul(2, k);
    if (n % 2 == 0)
        return n % two_k == 0;
    return checked_add(n, 1) % two_k == 0;
}

struct MeanderResult {
    MeanderMatrix matrix;
    Partitioning partitioning;
};

/// Build the meander grid for (n, k) and read its columns as containers.
///
/// For even n the grid rows over m = n are, per loop i = 1..m/2k,
///     odd row:  m - (2k(i-1) + (j-1))        (descending in j)
///     even row: m - 2ki + j                  (ascending in j)
/// For odd n the same construction runs on m = n+1 and every cell is
/// shifted down by one, which realizes the element set {0,...,n}; the zero
/// lands in the bottom-left cell and is dropped from the returned containers.
inline MeanderResult meander_partitioning(u64 n, u64 k)
{
    if (!meander_applicable(n, k))
        throw NotApplicableError("meander needs 2k | n (n even) or 2k | n+1 (n odd)");

    const bool odd = n % 2 != 0;
    const u64 m = odd ? checked_add(n, 1) : n;
    const u64 shift = odd ? 1 : 0;

    MeanderMatrix grid;
    grid.parity = odd ? MeanderParity::odd_n : MeanderParity::even_n;
    grid.rows = m / k;
    grid.cols = k;
    grid.cells.resize(grid.rows * grid.cols);

    const u64 loops = m / (2 * k);
    for (u64 i = 1; i <= loops; ++i)
        for (u64 j = 1; j <= k; ++j) {
            grid.cells[(2 * i - 2) * k + (j - 1)] = m - (2 * k * (i - 1) + (j - 1)) - shift;
            grid.cells[(2 * i - 1) * k + (j - 1)] = m - 2 * k * i + j - shift;
        }

    MeanderResult result;
    result.partitioning.instance = make_instance(n, k, delta(n) / k);
    result.partitioning.containers.reserve(k);
    for (u64 j = 0; j < k; ++j) {
        // columns decrease strictly downward, so reading bottom-up is already
        // ascending; the zero, when present, sits in the bottom cell
        Container column;
        column.reserve(grid.rows);
        for (u64 r = grid.rows; r-- > 0;) {
            const u64 cell = grid.at(r, j);
            if (cell != 0)
                column.push_back(cell);
        }
        result.partitioning.containers.push_back(std::move(column));
    }
    result.matrix = std::move(grid);
    return result;
}

} // namespace equisum
