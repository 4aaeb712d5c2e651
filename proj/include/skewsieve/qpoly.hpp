#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewsieve/tableaux.hpp"

namespace skewsieve {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse polynomial in q with exact integer coefficients and nonnegative
/// exponents.  Zero coefficients are never stored, so equality is
/// coefficient-wise.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(const BigInt& constant);

    static QPolynomial monomial(long long exponent, const BigInt& coefficient);

    /// Dense form "c0 c1 c2 ..." (ascending exponents, space separated).
    static QPolynomial parse_dense(std::string_view text);
    /// Sparse form "e:c,e:c,..."; the empty string is the zero polynomial.
    static QPolynomial parse_sparse(std::string_view text);

    void add_term(long long exponent, const BigInt& coefficient);

    const std::map<long long, BigInt>& terms() const { return terms_; }
    BigInt coeff(long long exponent) const;
    bool is_zero() const { return terms_.empty(); }
    std::optional<long long> min_exponent() const;
    std::optional<long long> max_exponent() const;

    /// Sum of coefficients.
    BigInt at_one() const;

    QPolynomial scaled(const BigInt& factor) const;

    /// Multiplies by q^delta; delta may be negative only if every exponent
    /// stays nonnegative.
    QPolynomial shifted(long long delta) const;

    QPolynomial operator+(const QPolynomial& other) const;
    QPolynomial& operator+=(const QPolynomial& other);
    bool operator==(const QPolynomial& other) const { return terms_ == other.terms_; }

    std::string str_dense() const;
    std::string str_sparse() const;

private:
    std::map<long long, BigInt> terms_;
};

/// 1 + q + ... + q^{n-1}.
QPolynomial q_integer(int n);

/// Canonical representative modulo q^n - 1: every exponent replaced by its
/// residue mod n, coefficients summed; degree < n.
QPolynomial reduce_mod_cyclic(const QPolynomial& f, int n);

/// The multiplier c >= 0 with reduce_mod_cyclic(f, n) = c * [n]_q, if any.
std::optional<BigInt> multiple_of_q_integer(const QPolynomial& f, int n);

/// Exponent convention for tableau statistics: entry j contributes j - 1
/// (zero-based, specializing x_j = q^{j-1}) or j (one-based, x_j = q^j).
enum class StatisticConvention { ZeroBased, OneBased };

const char* to_string(StatisticConvention c);
StatisticConvention parse_convention(std::string_view text);

/// Weighted entry count of a weight vector under the given convention.
long long statistic(const WeakComposition& w, StatisticConvention convention);

/// Sum of q^{statistic(weight(t))} over the given tableaux.
QPolynomial statistic_gf(const std::vector<Tableau>& ts, StatisticConvention convention);

/// statistic_gf over all of SSYT(shape, n), computed without materializing:
/// s_shape(1, q, ..., q^{n-1}) for zero-based, s_shape(q, ..., q^n) for
/// one-based.
QPolynomial principal_specialization(const SkewShape& shape, int n,
                                     StatisticConvention convention);

}  // namespace skewsieve
