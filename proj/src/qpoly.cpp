#include "skewsieve/qpoly.hpp"

#include <sstream>
#include <stdexcept>

#include "skewsieve/detail/parse.hpp"

namespace skewsieve {

namespace {

BigInt parse_bigint(const detail::Field& field, const char* what) {
    std::string tok{detail::trim(field.text)};
    if (tok.empty()) throw ParseError(std::string("empty ") + what, field.offset);
    std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i == tok.size()) throw ParseError(std::string("expected an integer ") + what, field.offset);
    for (; i < tok.size(); ++i) {
        if (tok[i] < '0' || tok[i] > '9') {
            throw ParseError(std::string("expected an integer ") + what + ", got \"" + tok + "\"",
                             field.offset);
        }
    }
    return BigInt(tok);
}

}  // namespace

QPolynomial::QPolynomial(const BigInt& constant) { add_term(0, constant); }

QPolynomial QPolynomial::monomial(long long exponent, const BigInt& coefficient) {
    QPolynomial p;
    p.add_term(exponent, coefficient);
    return p;
}

void QPolynomial::add_term(long long exponent, const BigInt& coefficient) {
    if (exponent < 0) throw std::domain_error("negative exponent in polynomial");
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt QPolynomial::coeff(long long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::optional<long long> QPolynomial::min_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

std::optional<long long> QPolynomial::max_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
}

BigInt QPolynomial::at_one() const {
    BigInt total = 0;
    for (const auto& [e, c] : terms_) total += c;
    return total;
}

QPolynomial QPolynomial::scaled(const BigInt& factor) const {
    QPolynomial out;
    if (factor == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * factor);
    return out;
}

QPolynomial QPolynomial::shifted(long long delta) const {
    QPolynomial out;
    for (const auto& [e, c] : terms_) {
        if (e + delta < 0) {
            throw std::domain_error("shift by " + std::to_string(delta) +
                                    " would create exponent " + std::to_string(e + delta));
        }
        out.terms_.emplace(e + delta, c);
    }
    return out;
}

QPolynomial QPolynomial::operator+(const QPolynomial& other) const {
    QPolynomial out = *this;
    out += other;
    return out;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

std::string QPolynomial::str_dense() const {
    std::ostringstream out;
    long long top = terms_.empty() ? 0 : terms_.rbegin()->first;
    for (long long e = 0; e <= top; ++e) {
        if (e > 0) out << ' ';
        out << coeff(e);
    }
    return out.str();
}

std::string QPolynomial::str_sparse() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << ',';
        out << e << ':' << c;
        first = false;
    }
    return out.str();
}

QPolynomial QPolynomial::parse_dense(std::string_view text) {
    QPolynomial p;
    long long e = 0;
    for (const auto& field : detail::split(text, ' ')) {
        if (detail::trim(field.text).empty()) continue;
        p.add_term(e, parse_bigint(field, "coefficient"));
        ++e;
    }
    return p;
}

QPolynomial QPolynomial::parse_sparse(std::string_view text) {
    QPolynomial p;
    if (detail::trim(text).empty()) return p;
    for (const auto& pair_field : detail::split(text, ',')) {
        auto parts = detail::split(pair_field.text, ':');
        if (parts.size() != 2) {
            throw ParseError("expected exponent:coefficient", pair_field.offset);
        }
        long long e = detail::parse_integer({parts[0].text, pair_field.offset + parts[0].offset},
                                            "exponent");
        if (e < 0) throw ParseError("negative exponent", pair_field.offset);
        p.add_term(e, parse_bigint({parts[1].text, pair_field.offset + parts[1].offset},
                                   "coefficient"));
    }
    return p;
}

QPolynomial q_integer(int n) {
    if (n < 1) throw std::domain_error("q_integer requires n >= 1");
    QPolynomial p;
    for (int e = 0; e < n; ++e) p.add_term(e, 1);
    return p;
}

QPolynomial reduce_mod_cyclic(const QPolynomial& f, int n) {
    if (n < 1) throw std::domain_error("reduce_mod_cyclic requires n >= 1");
    QPolynomial out;
    for (const auto& [e, c] : f.terms()) out.add_term(e % n, c);
    return out;
}

std::optional<BigInt> multiple_of_q_integer(const QPolynomial& f, int n) {
    QPolynomial reduced = reduce_mod_cyclic(f, n);
    BigInt c = reduced.coeff(0);
    if (c < 0) return std::nullopt;
    for (long long e = 0; e < n; ++e) {
        if (reduced.coeff(e) != c) return std::nullopt;
    }
    return c;
}

const char* to_string(StatisticConvention c) {
    return c == StatisticConvention::ZeroBased ? "zero-based" : "one-based";
}

StatisticConvention parse_convention(std::string_view text) {
    if (text == "zero-based") return StatisticConvention::ZeroBased;
    if (text == "one-based") return StatisticConvention::OneBased;
    throw ParseError("unknown statistic convention \"" + std::string(text) +
                         "\" (expected zero-based or one-based)",
                     0);
}

long long statistic(const WeakComposition& w, StatisticConvention convention) {
    long long total = 0;
    for (std::size_t j = 0; j < w.length(); ++j) {
        long long factor = static_cast<long long>(j) +
                           (convention == StatisticConvention::OneBased ? 1 : 0);
        total += factor * w.entry(j);
    }
    return total;
}

QPolynomial statistic_gf(const std::vector<Tableau>& ts, StatisticConvention convention) {
    QPolynomial p;
    for (const Tableau& t : ts) p.add_term(statistic(weight(t), convention), 1);
    return p;
}

QPolynomial principal_specialization(const SkewShape& shape, int n,
                                     StatisticConvention convention) {
    QPolynomial p;
    for_each_tableau(shape, n, [&](const Tableau& t) {
        p.add_term(statistic(weight(t), convention), 1);
    });
    return p;
}

}  // namespace skewsieve
