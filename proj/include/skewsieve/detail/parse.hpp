#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "skewsieve/shapes.hpp"

namespace skewsieve::detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

/// Splits on sep; "" yields no fields.  Offsets index into the original text.
struct Field {
    std::string_view text;
    std::size_t offset;
};

inline std::vector<Field> split(std::string_view s, char sep) {
    std::vector<Field> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back({s.substr(start), start});
            return out;
        }
        out.push_back({s.substr(start, pos - start), start});
        start = pos + 1;
    }
}

inline long long parse_integer(const Field& field, const char* what) {
    std::string_view tok = trim(field.text);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(std::string("expected an integer ") + what + ", got \"" +
                             std::string(field.text) + "\"",
                         field.offset);
    }
    return value;
}

}  // namespace skewsieve::detail
