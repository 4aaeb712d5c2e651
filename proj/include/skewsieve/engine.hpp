#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <stdexcept>

#include "skewsieve/crystal.hpp"
#include "skewsieve/tableaux.hpp"

// Allocation-free kernels over fixed-size cell arrays, for exhaustive sweeps
// that visit hundreds of millions of tableaux.  Semantically equivalent to
// the Tableau-based operations (enforced by tests); the public value types
// remain the source of truth for conventions.
namespace skewsieve::engine {

inline constexpr int kMaxCells = 16;
inline constexpr int kMaxRows = 16;

/// Entries by row-major cell index, zero beyond cell_count.
using Filling = std::array<std::int8_t, kMaxCells>;

/// Precomputed cell geometry of a skew shape.
struct FlatShape {
    int cell_count = 0;
    int row_count = 0;
    std::array<std::int8_t, kMaxCells> left{};   // same-row predecessor, -1 if none
    std::array<std::int8_t, kMaxCells> up{};     // cell directly above, -1 if none
    std::array<std::int8_t, kMaxCells> read{};   // cell indices in reading order
    std::array<std::int8_t, kMaxCells> row_of{};
    std::array<std::int8_t, kMaxCells> col_of{};

    static FlatShape build(const SkewShape& shape) {
        if (shape.num_cells() > kMaxCells) {
            throw std::invalid_argument("shape exceeds the flat engine cell limit");
        }
        if (shape.num_rows() > kMaxRows) {
            throw std::invalid_argument("shape exceeds the flat engine row limit");
        }
        if (!shape.outer().empty() && shape.outer().part(0) > 2 * kMaxCells) {
            throw std::invalid_argument("shape exceeds the flat engine column limit");
        }
        FlatShape flat;
        flat.cell_count = static_cast<int>(shape.num_cells());
        flat.row_count = static_cast<int>(shape.num_rows());
        flat.left.fill(-1);
        flat.up.fill(-1);
        std::array<std::array<std::int8_t, 2 * kMaxCells>, kMaxRows> index_of{};
        int k = 0;
        for (std::size_t r = 0; r < shape.num_rows(); ++r) {
            for (int c = shape.row_begin(r); c < shape.row_end(r); ++c, ++k) {
                if (k >= kMaxCells) throw std::logic_error("cell index out of range");
                flat.row_of[k] = static_cast<std::int8_t>(r);
                flat.col_of[k] = static_cast<std::int8_t>(c);
                index_of[r][c] = static_cast<std::int8_t>(k);
                if (c > shape.row_begin(r)) flat.left[k] = static_cast<std::int8_t>(k - 1);
                if (r > 0 && shape.has_cell(static_cast<int>(r) - 1, c)) {
                    flat.up[k] = index_of[r - 1][c];
                }
            }
        }
        int pos = 0;
        for (std::size_t r = shape.num_rows(); r-- > 0;) {
            for (int c = shape.row_begin(r); c < shape.row_end(r); ++c) {
                flat.read[pos++] = index_of[r][c];
            }
        }
        return flat;
    }
};

inline Filling from_tableau(const FlatShape& flat, const Tableau& t) {
    Filling f{};
    int k = 0;
    for (const auto& row : t.rows()) {
        for (int v : row) f[static_cast<std::size_t>(k++)] = static_cast<std::int8_t>(v);
    }
    if (k != flat.cell_count) throw std::invalid_argument("tableau does not match flat shape");
    return f;
}

inline Tableau to_tableau(const SkewShape& shape, const Filling& f, int n) {
    std::vector<std::vector<int>> rows(shape.num_rows());
    int k = 0;
    for (std::size_t r = 0; r < shape.num_rows(); ++r) {
        rows[r].reserve(static_cast<std::size_t>(shape.row_length(r)));
        for (int c = shape.row_begin(r); c < shape.row_end(r); ++c) {
            rows[r].push_back(f[static_cast<std::size_t>(k++)]);
        }
    }
    return Tableau::validate(shape, std::move(rows), n);
}

/// Lexicographic comparison on the row-major entries.
inline int compare(const Filling& a, const Filling& b, int cell_count) {
    return std::memcmp(a.data(), b.data(), static_cast<std::size_t>(cell_count));
}

inline void weight_of(const FlatShape& flat, const Filling& f, int n, int* w) {
    for (int j = 0; j < n; ++j) w[j] = 0;
    for (int k = 0; k < flat.cell_count; ++k) ++w[f[static_cast<std::size_t>(k)] - 1];
}

/// Bracket matching on the reading word for letters i (close) and i+1
/// (open); out-parameters receive cell indices of unmatched letters in
/// reading order.  Returns are counts.
struct MatchBuffers {
    std::array<std::int8_t, kMaxCells> low;   // unmatched i
    std::array<std::int8_t, kMaxCells> high;  // unmatched i+1
    int low_count = 0;
    int high_count = 0;
};

inline void match_letters(const FlatShape& flat, const Filling& f, int i, MatchBuffers& m) {
    m.low_count = 0;
    m.high_count = 0;
    for (int pos = 0; pos < flat.cell_count; ++pos) {
        const std::int8_t cell = flat.read[static_cast<std::size_t>(pos)];
        const int v = f[static_cast<std::size_t>(cell)];
        if (v == i + 1) {
            m.high[static_cast<std::size_t>(m.high_count++)] = cell;
        } else if (v == i) {
            if (m.high_count > 0) {
                --m.high_count;  // closes the nearest open i+1
            } else {
                m.low[static_cast<std::size_t>(m.low_count++)] = cell;
            }
        }
    }
}

/// One lowering step f_i; returns false when no i is unmatched.
inline bool lower_step(const FlatShape& flat, Filling& f, int i, MatchBuffers& m) {
    match_letters(flat, f, i, m);
    if (m.low_count == 0) return false;
    f[static_cast<std::size_t>(m.low[static_cast<std::size_t>(m.low_count - 1)])] =
        static_cast<std::int8_t>(i + 1);
    return true;
}

/// One raising step e_i; returns false when no i+1 is unmatched.
inline bool raise_step(const FlatShape& flat, Filling& f, int i, MatchBuffers& m) {
    match_letters(flat, f, i, m);
    if (m.high_count == 0) return false;
    f[static_cast<std::size_t>(m.high[0])] = static_cast<std::int8_t>(i);
    return true;
}

/// Reflection sigma_i in place.  One matching pass suffices: with k =
/// w_i - w_{i+1} = (#unmatched i) - (#unmatched i+1), f_i^k rewrites the k
/// rightmost unmatched i's, e_i^{-k} the |k| leftmost unmatched i+1's.
inline void sigma(const FlatShape& flat, Filling& f, int i, MatchBuffers& m) {
    match_letters(flat, f, i, m);
    const int k = m.low_count - m.high_count;
    if (k > 0) {
        for (int t = m.low_count - k; t < m.low_count; ++t) {
            f[static_cast<std::size_t>(m.low[static_cast<std::size_t>(t)])] =
                static_cast<std::int8_t>(i + 1);
        }
    } else if (k < 0) {
        for (int t = 0; t < -k; ++t) {
            f[static_cast<std::size_t>(m.high[static_cast<std::size_t>(t)])] =
                static_cast<std::int8_t>(i);
        }
    }
}

/// sigma_1 through sigma_{n-1}, in place.
inline void cyclic(const FlatShape& flat, Filling& f, int n, MatchBuffers& m) {
    for (int i = 1; i < n; ++i) sigma(flat, f, i, m);
}

inline constexpr long long kWalkBound = 10'000'000;

/// Size of the cyclic orbit of f when f is its orbit's lexicographically
/// least element, otherwise 0 (detected early).  Each orbit is thus counted
/// exactly once across an exhaustive scan.
inline long long rep_orbit_size(const FlatShape& flat, const Filling& f, int n,
                                MatchBuffers& m, Filling& scratch) {
    scratch = f;
    long long steps = 0;
    while (true) {
        cyclic(flat, scratch, n, m);
        ++steps;
        const int cmp = compare(scratch, f, flat.cell_count);
        if (cmp == 0) return steps;
        if (cmp < 0) return 0;
        if (steps >= kWalkBound) {
            throw NonPeriodicError("cyclic action walk exceeded the safety bound");
        }
    }
}

/// Visits every semistandard filling with entries in 1..n exactly once, in
/// row-major lexicographic order (the canonical enumeration order).
template <typename Visitor>
void enumerate_fillings(const FlatShape& flat, int n, Visitor&& visit) {
    const int m = flat.cell_count;
    Filling f{};
    if (m == 0) {
        visit(static_cast<const Filling&>(f));
        return;
    }
    auto floor_of = [&](int k) -> std::int8_t {
        int lo = 1;
        if (flat.left[static_cast<std::size_t>(k)] >= 0) {
            lo = f[static_cast<std::size_t>(flat.left[static_cast<std::size_t>(k)])];
        }
        if (flat.up[static_cast<std::size_t>(k)] >= 0) {
            const int above = f[static_cast<std::size_t>(flat.up[static_cast<std::size_t>(k)])] + 1;
            if (above > lo) lo = above;
        }
        return static_cast<std::int8_t>(lo);
    };
    int k = 0;
    f[0] = static_cast<std::int8_t>(floor_of(0) - 1);
    while (k >= 0) {
        if (f[static_cast<std::size_t>(k)] < n) {
            ++f[static_cast<std::size_t>(k)];
            if (k == m - 1) {
                visit(static_cast<const Filling&>(f));
            } else {
                ++k;
                f[static_cast<std::size_t>(k)] = static_cast<std::int8_t>(floor_of(k) - 1);
            }
        } else {
            --k;
        }
    }
}

}  // namespace skewsieve::engine
