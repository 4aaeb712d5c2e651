#include "skewsieve/tableaux.hpp"

#include <algorithm>
#include <sstream>

#include "skewsieve/detail/parse.hpp"

namespace skewsieve {

namespace {

std::string cell_str(Cell c) {
    return "(row " + std::to_string(c.row + 1) + ", column " + std::to_string(c.col + 1) + ")";
}

/// Backtracker over cells in row-major order.  At each cell the candidate
/// range starts at max(left neighbor, above neighbor + 1, 1) and ends at n;
/// with a content bound, remaining multiplicities prune further.
class Enumerator {
public:
    Enumerator(const SkewShape& shape, int n, const WeakComposition* content)
        : shape_(shape), n_(n) {
        if (content) {
            remaining_.assign(content->entries().begin(), content->entries().end());
            bounded_ = true;
        }
        cells_ = shape.cells();
    }

    void run(const std::function<void(const SkewShape&, const std::vector<std::vector<int>>&)>& emit) {
        if (bounded_) {
            long long total = 0;
            for (int r : remaining_) total += r;
            if (total != shape_.num_cells()) return;
        }
        rows_.clear();
        rows_.resize(shape_.num_rows());
        for (std::size_t r = 0; r < shape_.num_rows(); ++r) {
            rows_[r].assign(static_cast<std::size_t>(shape_.row_length(r)), 0);
        }
        emit_ = &emit;
        fill(0);
    }

private:
    void fill(std::size_t k) {
        if (k == cells_.size()) {
            (*emit_)(shape_, rows_);
            return;
        }
        const Cell cell = cells_[k];
        const std::size_t r = static_cast<std::size_t>(cell.row);
        const std::size_t j = static_cast<std::size_t>(cell.col - shape_.row_begin(r));
        int lo = 1;
        if (j > 0) lo = std::max(lo, rows_[r][j - 1]);
        if (cell.row > 0 && shape_.has_cell(cell.row - 1, cell.col)) {
            lo = std::max(lo, entry_at(cell.row - 1, cell.col) + 1);
        }
        for (int v = lo; v <= n_; ++v) {
            if (bounded_) {
                if (remaining_[static_cast<std::size_t>(v - 1)] == 0) continue;
                --remaining_[static_cast<std::size_t>(v - 1)];
            }
            rows_[r][j] = v;
            fill(k + 1);
            if (bounded_) ++remaining_[static_cast<std::size_t>(v - 1)];
        }
        rows_[r][j] = 0;
    }

    int entry_at(int row, int col) const {
        const std::size_t r = static_cast<std::size_t>(row);
        return rows_[r][static_cast<std::size_t>(col - shape_.row_begin(r))];
    }

    const SkewShape& shape_;
    int n_;
    bool bounded_ = false;
    std::vector<int> remaining_;
    std::vector<Cell> cells_;
    std::vector<std::vector<int>> rows_;
    const std::function<void(const SkewShape&, const std::vector<std::vector<int>>&)>* emit_ = nullptr;
};

}  // namespace

const char* to_string(TableauViolation v) {
    switch (v) {
        case TableauViolation::ShapeMismatch: return "shape mismatch";
        case TableauViolation::RowViolation: return "row violation";
        case TableauViolation::ColumnViolation: return "column violation";
        case TableauViolation::EntryOutOfRange: return "entry out of range";
    }
    return "unknown violation";
}

Tableau Tableau::validate(const SkewShape& shape, std::vector<std::vector<int>> filling,
                          int alphabet) {
    if (filling.size() != shape.num_rows()) {
        throw TableauError(TableauViolation::ShapeMismatch,
                           {static_cast<int>(shape.num_rows()), 0},
                           "expected " + std::to_string(shape.num_rows()) + " rows, got " +
                               std::to_string(filling.size()));
    }
    for (std::size_t r = 0; r < shape.num_rows(); ++r) {
        if (filling[r].size() != static_cast<std::size_t>(shape.row_length(r))) {
            Cell at{static_cast<int>(r), shape.row_begin(r)};
            throw TableauError(TableauViolation::ShapeMismatch, at,
                               "row " + std::to_string(r + 1) + " has " +
                                   std::to_string(filling[r].size()) + " entries, expected " +
                                   std::to_string(shape.row_length(r)));
        }
        for (std::size_t j = 0; j < filling[r].size(); ++j) {
            Cell at{static_cast<int>(r), shape.row_begin(r) + static_cast<int>(j)};
            int v = filling[r][j];
            if (v < 1 || v > alphabet) {
                throw TableauError(TableauViolation::EntryOutOfRange, at,
                                   "entry " + std::to_string(v) + " at " + cell_str(at) +
                                       " outside 1.." + std::to_string(alphabet));
            }
            if (j > 0 && filling[r][j - 1] > v) {
                throw TableauError(TableauViolation::RowViolation, at,
                                   "row decreases at " + cell_str(at));
            }
        }
    }
    // Column comparisons only where both cells exist in the skew shape.
    for (std::size_t r = 1; r < shape.num_rows(); ++r) {
        for (int c = shape.row_begin(r); c < shape.row_end(r); ++c) {
            if (!shape.has_cell(static_cast<int>(r) - 1, c)) continue;
            int above = filling[r - 1][static_cast<std::size_t>(c - shape.row_begin(r - 1))];
            int here = filling[r][static_cast<std::size_t>(c - shape.row_begin(r))];
            if (above >= here) {
                Cell at{static_cast<int>(r), c};
                throw TableauError(TableauViolation::ColumnViolation, at,
                                   "column does not increase at " + cell_str(at));
            }
        }
    }
    return Tableau(shape, std::move(filling), alphabet);
}

Tableau Tableau::parse(std::string_view text, int alphabet) {
    std::vector<int> outer_parts;
    std::vector<int> inner_parts;
    std::vector<std::vector<int>> filling;
    for (const auto& row_field : detail::split(text, ';')) {
        std::vector<int> entries;
        int dots = 0;
        bool entries_started = false;
        auto fields = detail::split(row_field.text, ',');
        if (fields.empty()) {
            throw ParseError("empty tableau row", row_field.offset);
        }
        for (const auto& f : fields) {
            std::string_view tok = detail::trim(f.text);
            if (tok == ".") {
                if (entries_started) {
                    throw ParseError("absent cell marker after an entry",
                                     row_field.offset + f.offset);
                }
                ++dots;
            } else {
                entries_started = true;
                long long v = detail::parse_integer({f.text, row_field.offset + f.offset},
                                                    "tableau entry");
                if (v < 1 || v > 1'000'000) {
                    throw ParseError("tableau entry out of range: " + std::to_string(v),
                                     row_field.offset + f.offset);
                }
                entries.push_back(static_cast<int>(v));
            }
        }
        outer_parts.push_back(static_cast<int>(fields.size()));
        inner_parts.push_back(dots);
        filling.push_back(std::move(entries));
    }
    try {
        SkewShape shape(Partition(std::move(outer_parts)), Partition(std::move(inner_parts)));
        return validate(shape, std::move(filling), alphabet);
    } catch (const std::invalid_argument& err) {
        throw ParseError(std::string("rows do not form a skew shape: ") + err.what(), 0);
    }
}

std::vector<int> Tableau::row_major() const {
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(shape_.num_cells()));
    for (const auto& row : rows_) flat.insert(flat.end(), row.begin(), row.end());
    return flat;
}

std::string Tableau::str() const {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r > 0) out << ';';
        bool first = true;
        for (int d = 0; d < shape_.row_begin(r); ++d) {
            if (!first) out << ',';
            out << '.';
            first = false;
        }
        for (int v : rows_[r]) {
            if (!first) out << ',';
            out << v;
            first = false;
        }
    }
    return out.str();
}

WeakComposition weight(const Tableau& t) {
    std::vector<int> w(static_cast<std::size_t>(t.alphabet()), 0);
    for (const auto& row : t.rows()) {
        for (int v : row) ++w[static_cast<std::size_t>(v - 1)];
    }
    return WeakComposition(std::move(w));
}

std::vector<int> reading_word(const Tableau& t) {
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(t.shape().num_cells()));
    for (std::size_t r = t.rows().size(); r-- > 0;) {
        word.insert(word.end(), t.rows()[r].begin(), t.rows()[r].end());
    }
    return word;
}

void for_each_tableau(const SkewShape& shape, int n,
                      const std::function<void(const Tableau&)>& visit) {
    Enumerator e(shape, n, nullptr);
    e.run([&](const SkewShape& s, const std::vector<std::vector<int>>& rows) {
        visit(Tableau::validate(s, rows, n));
    });
}

void for_each_tableau_content(const SkewShape& shape, const WeakComposition& a,
                              const std::function<void(const Tableau&)>& visit) {
    Enumerator e(shape, static_cast<int>(a.length()), &a);
    e.run([&](const SkewShape& s, const std::vector<std::vector<int>>& rows) {
        visit(Tableau::validate(s, rows, static_cast<int>(a.length())));
    });
}

std::vector<Tableau> enumerate(const SkewShape& shape, int n) {
    std::vector<Tableau> out;
    for_each_tableau(shape, n, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

std::vector<Tableau> enumerate_content(const SkewShape& shape, const WeakComposition& a) {
    std::vector<Tableau> out;
    for_each_tableau_content(shape, a, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

long long kostka(const SkewShape& shape, const WeakComposition& a) {
    long long count = 0;
    Enumerator e(shape, static_cast<int>(a.length()), &a);
    e.run([&](const SkewShape&, const std::vector<std::vector<int>>&) { ++count; });
    return count;
}

}  // namespace skewsieve
