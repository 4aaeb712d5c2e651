#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skewsieve {

/// Thrown when a shape, composition or tableau string cannot be parsed.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Integer partition: weakly decreasing positive parts, stored without
/// trailing zeros so equality is canonical.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Accepts "3,2,2"; the empty partition is "" or "0".
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// Part at 0-indexed row, 0 beyond the last part.
    int part(std::size_t row) const {
        return row < parts_.size() ? parts_[row] : 0;
    }

    /// Sum of all parts.
    long long sum() const;

    /// True if other fits inside this partition row by row.
    bool contains(const Partition& other) const;

    std::string str() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// sum_j (j-1) * parts[j] with rows counted from 1.
long long weighted_size(const Partition& p);

struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

/// Pair of nested partitions; cells are those of the outer shape not in the
/// inner one.  Row r (0-indexed) occupies columns [inner[r], outer[r]).
class SkewShape {
public:
    SkewShape() = default;
    explicit SkewShape(Partition outer) : SkewShape(std::move(outer), Partition()) {}
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    bool is_straight() const { return inner_.empty(); }

    std::size_t num_rows() const { return outer_.length(); }
    int row_begin(std::size_t row) const { return inner_.part(row); }
    int row_end(std::size_t row) const { return outer_.part(row); }
    int row_length(std::size_t row) const { return row_end(row) - row_begin(row); }

    /// Number of cells, |outer| - |inner|.
    long long num_cells() const { return outer_.sum() - inner_.sum(); }

    bool has_cell(int row, int col) const {
        return row >= 0 && static_cast<std::size_t>(row) < num_rows() &&
               col >= row_begin(row) && col < row_end(row);
    }

    /// Cells in row-major order (top row first, left to right).
    std::vector<Cell> cells() const;

    std::string str() const;

    auto operator<=>(const SkewShape&) const = default;

private:
    Partition outer_;
    Partition inner_;
};

/// Fixed-length vector of nonnegative integers.
class WeakComposition {
public:
    WeakComposition() = default;
    explicit WeakComposition(std::vector<int> entries);

    static WeakComposition parse(std::string_view text);

    const std::vector<int>& entries() const { return entries_; }
    std::size_t length() const { return entries_.size(); }
    int entry(std::size_t i) const { return entries_[i]; }

    long long sum() const;

    std::string str() const;

    auto operator<=>(const WeakComposition&) const = default;

private:
    std::vector<int> entries_;
};

/// (a_{1+r}, a_{2+r}, ..., a_{n+r}) with indices mod n; any integer r is
/// reduced, so shifting by n is the identity.
WeakComposition cyclic_shift(const WeakComposition& a, long long r);

/// True iff the n cyclic shifts of a are pairwise distinct.
bool all_shifts_distinct(const WeakComposition& a);

/// z_r = sum_{j=1..n} j * a_{j+r} for r = 1..n (indices mod n).  When
/// gcd(|a|, n) = 1 the values are pairwise distinct mod n, via the
/// recurrence z_{r+1} = z_r - |a| (mod n).
std::vector<long long> shifted_residues(const WeakComposition& a);

}  // namespace skewsieve
