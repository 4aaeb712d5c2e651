#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "skewsieve/shapes.hpp"

namespace skewsieve {

enum class TableauViolation {
    ShapeMismatch,
    RowViolation,
    ColumnViolation,
    EntryOutOfRange,
};

const char* to_string(TableauViolation v);

/// Invalid filling; names the offending cell (0-indexed row, absolute column).
class TableauError : public std::runtime_error {
public:
    TableauError(TableauViolation violation, Cell cell, const std::string& what)
        : std::runtime_error(what), violation_(violation), cell_(cell) {}
    TableauViolation violation() const { return violation_; }
    Cell cell() const { return cell_; }

private:
    TableauViolation violation_;
    Cell cell_;
};

/// Semistandard filling of a skew shape: rows weakly increase, columns
/// strictly increase, entries in 1..alphabet.  Immutable once built; the
/// only constructors are validate() and parse(), so every instance is valid.
class Tableau {
public:
    /// Checks the semistandard conditions; filling[r] holds the entries of
    /// row r left to right (absent inner cells not included).
    static Tableau validate(const SkewShape& shape, std::vector<std::vector<int>> filling,
                            int alphabet);

    /// Inverse of str(): rows separated by ";", entries by ",", absent inner
    /// cells written ".".  The shape is inferred from the field layout.
    static Tableau parse(std::string_view text, int alphabet);

    const SkewShape& shape() const { return shape_; }
    int alphabet() const { return alphabet_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    const std::vector<int>& row(std::size_t r) const { return rows_[r]; }

    /// Entry at 0-indexed row and absolute column.
    int entry(int row, int col) const {
        return rows_[static_cast<std::size_t>(row)]
                    [static_cast<std::size_t>(col - shape_.row_begin(static_cast<std::size_t>(row)))];
    }

    /// Row-major entry sequence; canonical order is lexicographic on it.
    std::vector<int> row_major() const;

    std::string str() const;

    auto operator<=>(const Tableau&) const = default;

private:
    Tableau(SkewShape shape, std::vector<std::vector<int>> rows, int alphabet)
        : shape_(std::move(shape)), rows_(std::move(rows)), alphabet_(alphabet) {}

    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
    int alphabet_;
};

/// Entry multiplicity vector (w_1, ..., w_alphabet); sums to |shape|.
WeakComposition weight(const Tableau& t);

/// Rows concatenated bottom to top, each left to right.
std::vector<int> reading_word(const Tableau& t);

/// All semistandard fillings with entries at most n, in canonical
/// (row-major lexicographic) order.
std::vector<Tableau> enumerate(const SkewShape& shape, int n);

/// All fillings with exactly a_i entries equal to i; alphabet = length of a.
std::vector<Tableau> enumerate_content(const SkewShape& shape, const WeakComposition& a);

/// |SSYT(shape, a)|, counted without materializing.
long long kostka(const SkewShape& shape, const WeakComposition& a);

/// Streaming variants: invoke visit for each tableau in canonical order.
void for_each_tableau(const SkewShape& shape, int n,
                      const std::function<void(const Tableau&)>& visit);
void for_each_tableau_content(const SkewShape& shape, const WeakComposition& a,
                              const std::function<void(const Tableau&)>& visit);

}  // namespace skewsieve
