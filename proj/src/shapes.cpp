#include "skewsieve/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "skewsieve/detail/parse.hpp"

namespace skewsieve {

namespace {

std::string join_ints(const std::vector<int>& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out << ',';
        out << values[i];
    }
    return out.str();
}

std::vector<int> parse_int_list(std::string_view text, const char* what) {
    std::vector<int> values;
    for (const auto& field : detail::split(text, ',')) {
        long long v = detail::parse_integer(field, what);
        if (v < 0 || v > 1'000'000'000) {
            throw ParseError(std::string(what) + " out of range: " + std::to_string(v),
                             field.offset);
        }
        values.push_back(static_cast<int>(v));
    }
    return values;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) {
            throw std::invalid_argument("partition parts must be nonnegative");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(std::string_view text) {
    std::string_view trimmed = detail::trim(text);
    if (trimmed.empty() || trimmed == "0") return Partition{};
    std::vector<int> parts = parse_int_list(trimmed, "partition part");
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& err) {
        throw ParseError(err.what(), 0);
    }
}

long long Partition::sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (std::size_t i = 0; i < other.length(); ++i) {
        if (other.parts_[i] > parts_[i]) return false;
    }
    return true;
}

std::string Partition::str() const { return join_ints(parts_); }

long long weighted_size(const Partition& p) {
    long long total = 0;
    for (std::size_t i = 0; i < p.length(); ++i) {
        total += static_cast<long long>(i) * p.parts()[i];
    }
    return total;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_)) {
        throw std::invalid_argument("inner shape " + inner_.str() +
                                    " does not fit inside " + outer_.str());
    }
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(num_cells()));
    for (std::size_t r = 0; r < num_rows(); ++r) {
        for (int c = row_begin(r); c < row_end(r); ++c) {
            out.push_back({static_cast<int>(r), c});
        }
    }
    return out;
}

std::string SkewShape::str() const {
    if (inner_.empty()) return outer_.str();
    return outer_.str() + "/" + inner_.str();
}

WeakComposition::WeakComposition(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_) {
        if (e < 0) throw std::invalid_argument("composition entries must be nonnegative");
    }
}

WeakComposition WeakComposition::parse(std::string_view text) {
    return WeakComposition(parse_int_list(detail::trim(text), "composition entry"));
}

long long WeakComposition::sum() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

std::string WeakComposition::str() const { return join_ints(entries_); }

WeakComposition cyclic_shift(const WeakComposition& a, long long r) {
    const std::size_t n = a.length();
    if (n == 0) return a;
    long long rm = ((r % static_cast<long long>(n)) + static_cast<long long>(n)) %
                   static_cast<long long>(n);
    std::vector<int> shifted(n);
    for (std::size_t i = 0; i < n; ++i) {
        shifted[i] = a.entry((i + static_cast<std::size_t>(rm)) % n);
    }
    return WeakComposition(std::move(shifted));
}

bool all_shifts_distinct(const WeakComposition& a) {
    std::set<std::vector<int>> seen;
    for (std::size_t r = 0; r < a.length(); ++r) {
        seen.insert(cyclic_shift(a, static_cast<long long>(r)).entries());
    }
    return seen.size() == a.length();
}

std::vector<long long> shifted_residues(const WeakComposition& a) {
    const std::size_t n = a.length();
    std::vector<long long> residues(n);
    for (std::size_t r = 1; r <= n; ++r) {
        long long z = 0;
        for (std::size_t j = 1; j <= n; ++j) {
            // a_{j+r} with 1-based indices mod n, stored 0-based.
            z += static_cast<long long>(j) * a.entry((j + r - 1) % n);
        }
        residues[r - 1] = z;
    }
    return residues;
}

}  // namespace skewsieve
