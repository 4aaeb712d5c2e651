#include "skewsieve/crystal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace skewsieve {

namespace {

struct WordPosition {
    std::size_t row;
    std::size_t col;  // index within the row's entry vector
};

/// Cells in reading order: bottom row to top row, left to right.
std::vector<WordPosition> reading_positions(const Tableau& t) {
    std::vector<WordPosition> pos;
    pos.reserve(static_cast<std::size_t>(t.shape().num_cells()));
    for (std::size_t r = t.rows().size(); r-- > 0;) {
        for (std::size_t j = 0; j < t.rows()[r].size(); ++j) pos.push_back({r, j});
    }
    return pos;
}

struct Matching {
    std::vector<WordPosition> unmatched_low;   // letters i, left to right
    std::vector<WordPosition> unmatched_high;  // letters i+1, left to right
};

Matching match_brackets(const Tableau& t, int i) {
    Matching m;
    for (const WordPosition& p : reading_positions(t)) {
        int letter = t.rows()[p.row][p.col];
        if (letter == i + 1) {
            m.unmatched_high.push_back(p);
        } else if (letter == i) {
            if (!m.unmatched_high.empty()) {
                m.unmatched_high.pop_back();  // pairs with the nearest open i+1
            } else {
                m.unmatched_low.push_back(p);
            }
        }
    }
    return m;
}

void check_index(const Tableau& t, int i, const char* op) {
    if (i < 1 || i >= t.alphabet()) {
        throw std::out_of_range(std::string(op) + " index " + std::to_string(i) +
                                " outside 1.." + std::to_string(t.alphabet() - 1));
    }
}

Tableau with_entry(const Tableau& t, WordPosition p, int value, const char* op) {
    std::vector<std::vector<int>> rows = t.rows();
    rows[p.row][p.col] = value;
    try {
        return Tableau::validate(t.shape(), std::move(rows), t.alphabet());
    } catch (const TableauError& err) {
        throw CrystalTheoryViolation(std::string(op) + " produced an invalid tableau on " +
                                     t.str() + ": " + err.what());
    }
}

}  // namespace

std::optional<Tableau> lower(const Tableau& t, int i) {
    check_index(t, i, "lower");
    Matching m = match_brackets(t, i);
    if (m.unmatched_low.empty()) return std::nullopt;
    return with_entry(t, m.unmatched_low.back(), i + 1, "lower");
}

std::optional<Tableau> raise(const Tableau& t, int i) {
    check_index(t, i, "raise");
    Matching m = match_brackets(t, i);
    if (m.unmatched_high.empty()) return std::nullopt;
    return with_entry(t, m.unmatched_high.front(), i, "raise");
}

Tableau reflect(const Tableau& t, int i) {
    check_index(t, i, "reflect");
    WeakComposition w = weight(t);
    long long k = static_cast<long long>(w.entry(static_cast<std::size_t>(i - 1))) -
                  w.entry(static_cast<std::size_t>(i));
    Tableau current = t;
    for (long long step = 0; step < (k > 0 ? k : -k); ++step) {
        std::optional<Tableau> next = k > 0 ? lower(current, i) : raise(current, i);
        if (!next) {
            throw CrystalTheoryViolation("reflect ran out of moves on " + t.str() +
                                         " at index " + std::to_string(i));
        }
        current = *std::move(next);
    }
    return current;
}

Tableau cyclic_action(const Tableau& t) {
    Tableau current = t;
    for (int i = 1; i < t.alphabet(); ++i) current = reflect(current, i);
    return current;
}

CyclicOrbit orbit(const Tableau& t, std::size_t safety_bound) {
    std::vector<Tableau> elements{t};
    Tableau current = cyclic_action(t);
    while (!(current == t)) {
        if (elements.size() >= safety_bound) {
            throw NonPeriodicError("orbit of " + t.str() + " did not close within " +
                                   std::to_string(safety_bound) + " steps");
        }
        elements.push_back(current);
        current = cyclic_action(current);
    }
    auto least = std::min_element(elements.begin(), elements.end());
    std::rotate(elements.begin(), least, elements.end());
    return CyclicOrbit{elements.front(), std::move(elements)};
}

namespace {

long long order_of_action(const SkewShape& shape, int n, Tableau (*step)(const Tableau&)) {
    std::vector<Tableau> all = enumerate(shape, n);
    if (all.empty()) {
        throw std::invalid_argument("no tableaux of shape " + shape.str() + " with entries <= " +
                                    std::to_string(n));
    }
    std::set<Tableau> pending(all.begin(), all.end());
    long long order = 1;
    while (!pending.empty()) {
        Tableau start = *pending.begin();
        long long size = 0;
        Tableau current = start;
        do {
            pending.erase(current);
            current = step(current);
            ++size;
            if (static_cast<std::size_t>(size) > all.size()) {
                throw NonPeriodicError("action is not a bijection on SSYT(" + shape.str() +
                                       ", " + std::to_string(n) + ")");
            }
        } while (!(current == start));
        order = std::lcm(order, size);
    }
    return order;
}

}  // namespace

long long action_order(const SkewShape& shape, int n) {
    return order_of_action(shape, n, cyclic_action);
}

long long promotion_order(const SkewShape& shape, int n) {
    return order_of_action(shape, n, promotion);
}

Tableau bk_involution(const Tableau& t, int i) {
    check_index(t, i, "bk_involution");
    const SkewShape& shape = t.shape();
    std::vector<std::vector<int>> rows = t.rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const int begin = shape.row_begin(r);
        // Free entries of each row form one contiguous block i^a (i+1)^b.
        std::vector<std::size_t> free_cells;
        for (std::size_t j = 0; j < rows[r].size(); ++j) {
            int v = t.rows()[r][j];
            int c = begin + static_cast<int>(j);
            if (v == i) {
                bool bound = shape.has_cell(static_cast<int>(r) + 1, c) &&
                             t.entry(static_cast<int>(r) + 1, c) == i + 1;
                if (!bound) free_cells.push_back(j);
            } else if (v == i + 1) {
                bool bound = static_cast<int>(r) > 0 &&
                             shape.has_cell(static_cast<int>(r) - 1, c) &&
                             t.entry(static_cast<int>(r) - 1, c) == i;
                if (!bound) free_cells.push_back(j);
            }
        }
        if (free_cells.empty()) continue;
        std::size_t low_count = 0;
        for (std::size_t j : free_cells) {
            if (t.rows()[r][j] == i) ++low_count;
        }
        for (std::size_t k = 0; k < free_cells.size(); ++k) {
            bool contiguous = k == 0 || free_cells[k] == free_cells[k - 1] + 1;
            bool sorted = t.rows()[r][free_cells[k]] == (k < low_count ? i : i + 1);
            if (!contiguous || !sorted) {
                throw CrystalTheoryViolation("free entries not a contiguous i^a (i+1)^b block in " +
                                             t.str());
            }
            // i^a (i+1)^b becomes i^b (i+1)^a.
            rows[r][free_cells[k]] = k < free_cells.size() - low_count ? i : i + 1;
        }
    }
    try {
        return Tableau::validate(shape, std::move(rows), t.alphabet());
    } catch (const TableauError& err) {
        throw CrystalTheoryViolation(std::string("bk_involution produced an invalid tableau on ") +
                                     t.str() + ": " + err.what());
    }
}

Tableau promotion(const Tableau& t) {
    Tableau current = t;
    for (int i = 1; i < t.alphabet(); ++i) current = bk_involution(current, i);
    return current;
}

}  // namespace skewsieve
