#include <doctest.h>

#include "skewsieve/qpoly.hpp"
#include "skewsieve/tableaux.hpp"

using namespace skewsieve;

TEST_CASE("polynomial construction and serialization") {
    QPolynomial p = QPolynomial::parse_dense("0 1 2 2 2 1");
    CHECK(p.coeff(0) == 0);
    CHECK(p.coeff(1) == 1);
    CHECK(p.coeff(4) == 2);
    CHECK(p.coeff(99) == 0);
    CHECK(p.str_dense() == "0 1 2 2 2 1");
    CHECK(p.str_sparse() == "1:1,2:2,3:2,4:2,5:1");
    CHECK(QPolynomial::parse_sparse("1:1,2:2,3:2,4:2,5:1") == p);
    CHECK(p.min_exponent() == 1);
    CHECK(p.max_exponent() == 5);
    CHECK(p.at_one() == 8);

    QPolynomial zero;
    CHECK(zero.is_zero());
    CHECK(zero.str_dense() == "0");
    CHECK(zero.str_sparse() == "");
    CHECK(!zero.min_exponent().has_value());
    CHECK(QPolynomial::parse_sparse("") == zero);
    CHECK(QPolynomial::parse_dense("0 0 0") == zero);

    CHECK(QPolynomial::monomial(3, 2).str_sparse() == "3:2");
    CHECK(QPolynomial(BigInt(5)).str_dense() == "5");
}

TEST_CASE("term arithmetic keeps the support canonical") {
    QPolynomial p;
    p.add_term(2, 3);
    p.add_term(2, -3);  // cancels; term disappears
    CHECK(p.is_zero());
    CHECK_THROWS_AS(p.add_term(-1, 1), std::domain_error);

    QPolynomial a = QPolynomial::parse_dense("1 1");
    QPolynomial b = QPolynomial::parse_dense("0 2 1");
    CHECK((a + b).str_dense() == "1 3 1");
    a += b;
    CHECK(a.str_dense() == "1 3 1");

    CHECK(a.scaled(2).str_dense() == "2 6 2");
    CHECK(a.scaled(0).is_zero());
    CHECK(b.shifted(2).str_sparse() == "3:2,4:1");
    CHECK(b.shifted(-1).str_dense() == "2 1");
    CHECK_THROWS_AS(QPolynomial::parse_dense("1").shifted(-1), std::domain_error);
}

TEST_CASE("q-integers and cyclic reduction") {
    CHECK(q_integer(1).str_dense() == "1");
    CHECK(q_integer(4).str_dense() == "1 1 1 1");

    // q^5 + q = 2q mod q^4 - 1
    QPolynomial f = QPolynomial::parse_sparse("1:1,5:1");
    CHECK(reduce_mod_cyclic(f, 4).str_sparse() == "1:2");
    CHECK(reduce_mod_cyclic(QPolynomial(), 3).is_zero());
    CHECK(reduce_mod_cyclic(q_integer(6), 3).str_dense() == "2 2 2");
    CHECK_THROWS_AS(reduce_mod_cyclic(f, 0), std::domain_error);
}

TEST_CASE("recognizing multiples of the q-integer") {
    CHECK(multiple_of_q_integer(QPolynomial::parse_dense("2 2 2"), 3) == BigInt(2));
    CHECK(multiple_of_q_integer(QPolynomial(), 3) == BigInt(0));
    CHECK(multiple_of_q_integer(q_integer(5), 5) == BigInt(1));
    CHECK(!multiple_of_q_integer(QPolynomial::parse_dense("1 2"), 2).has_value());
    // Congruent to 2*[3]_q only after reduction.
    CHECK(multiple_of_q_integer(QPolynomial::parse_sparse("0:2,1:2,2:1,5:1"), 3) == BigInt(2));
}

TEST_CASE("statistic conventions") {
    CHECK(parse_convention("zero-based") == StatisticConvention::ZeroBased);
    CHECK(parse_convention("one-based") == StatisticConvention::OneBased);
    CHECK_THROWS_AS(parse_convention("two-based"), ParseError);
    CHECK(std::string(to_string(StatisticConvention::ZeroBased)) == "zero-based");

    WeakComposition w = WeakComposition::parse("2,1,2,1");
    CHECK(statistic(w, StatisticConvention::ZeroBased) == 8);
    CHECK(statistic(w, StatisticConvention::OneBased) == 14);  // shifted by the size
}

TEST_CASE("principal specialization matches the tableau statistic") {
    SkewShape shape(Partition::parse("2,1"));
    QPolynomial zero_based = principal_specialization(shape, 3, StatisticConvention::ZeroBased);
    CHECK(zero_based == QPolynomial::parse_dense("0 1 2 2 2 1"));
    CHECK(zero_based == statistic_gf(enumerate(shape, 3), StatisticConvention::ZeroBased));

    QPolynomial one_based = principal_specialization(shape, 3, StatisticConvention::OneBased);
    CHECK(one_based == zero_based.shifted(3));  // x_i = q^i vs x_i = q^{i-1}
    CHECK(one_based == statistic_gf(enumerate(shape, 3), StatisticConvention::OneBased));

    CHECK(zero_based.at_one() == 8);
    CHECK(zero_based.min_exponent() == weighted_size(shape.outer()));
}

TEST_CASE("specialization equals the content-weighted monomial sum") {
    SkewShape shape(Partition::parse("3,2"), Partition::parse("1"));
    const int n = 3;
    QPolynomial direct = principal_specialization(shape, n, StatisticConvention::ZeroBased);
    QPolynomial by_content;
    for (int a1 = 0; a1 <= 4; ++a1) {
        for (int a2 = 0; a1 + a2 <= 4; ++a2) {
            WeakComposition a({a1, a2, 4 - a1 - a2});
            by_content.add_term(statistic(a, StatisticConvention::ZeroBased),
                                kostka(shape, a));
        }
    }
    CHECK(direct == by_content);
}
