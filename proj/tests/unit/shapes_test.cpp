#include <doctest.h>

#include <numeric>
#include <random>

#include "skewsieve/shapes.hpp"

using namespace skewsieve;

TEST_CASE("partition parsing and normalization") {
    CHECK(Partition::parse("3,2,2").parts() == std::vector<int>{3, 2, 2});
    CHECK(Partition::parse("").empty());
    CHECK(Partition::parse("0").empty());
    CHECK(Partition::parse("3,2,0,0").parts() == std::vector<int>{3, 2});
    CHECK(Partition::parse("5").sum() == 5);
    CHECK(Partition::parse("3, 2, 1").parts() == std::vector<int>{3, 2, 1});

    CHECK_THROWS_AS(Partition::parse("2,3"), ParseError);
    CHECK_THROWS_AS(Partition::parse("3,-1"), ParseError);
    CHECK_THROWS_AS(Partition::parse("a,b"), ParseError);
    CHECK_THROWS_AS(Partition::parse("3,,2"), ParseError);
    CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), std::invalid_argument);
}

TEST_CASE("parse errors carry the offending position") {
    try {
        Partition::parse("3,x");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("partition accessors") {
    Partition p = Partition::parse("3,2,2");
    CHECK(p.length() == 3);
    CHECK(p.part(0) == 3);
    CHECK(p.part(5) == 0);  // zero beyond the last part
    CHECK(p.sum() == 7);
    CHECK(p.str() == "3,2,2");
    CHECK(p.contains(Partition::parse("2,2,1")));
    CHECK(!p.contains(Partition::parse("4")));
    CHECK(!Partition::parse("2").contains(Partition::parse("1,1")));
}

TEST_CASE("weighted size counts rows from one") {
    CHECK(weighted_size(Partition::parse("3,2,2")) == 6);
    CHECK(weighted_size(Partition::parse("5")) == 0);
    CHECK(weighted_size(Partition()) == 0);
    CHECK(weighted_size(Partition::parse("1,1,1,1")) == 6);
}

TEST_CASE("skew shape geometry") {
    SkewShape s(Partition::parse("3,2,2"), Partition::parse("1"));
    CHECK(s.num_rows() == 3);
    CHECK(s.num_cells() == 6);
    CHECK(s.row_begin(0) == 1);
    CHECK(s.row_end(0) == 3);
    CHECK(s.row_length(0) == 2);
    CHECK(s.row_begin(1) == 0);
    CHECK(!s.is_straight());
    CHECK(s.str() == "3,2,2/1");
    CHECK(s.has_cell(0, 1));
    CHECK(!s.has_cell(0, 0));
    CHECK(!s.has_cell(3, 0));

    std::vector<Cell> cells = s.cells();
    REQUIRE(cells.size() == 6);
    CHECK(cells.front() == Cell{0, 1});
    CHECK(cells.back() == Cell{2, 1});

    SkewShape straight(Partition::parse("2,1"));
    CHECK(straight.is_straight());
    CHECK(straight.str() == "2,1");

    CHECK_THROWS_AS(SkewShape(Partition::parse("2"), Partition::parse("3")),
                    std::invalid_argument);
    CHECK_THROWS_AS(SkewShape(Partition::parse("2"), Partition::parse("1,1")),
                    std::invalid_argument);
}

TEST_CASE("weak composition parsing and shifting") {
    WeakComposition a = WeakComposition::parse("2,1,2,1");
    CHECK(a.length() == 4);
    CHECK(a.sum() == 6);
    CHECK(a.entry(2) == 2);
    CHECK(a.str() == "2,1,2,1");
    CHECK(WeakComposition::parse("0,0").entries() == std::vector<int>{0, 0});
    CHECK_THROWS_AS(WeakComposition::parse("1,-1"), ParseError);

    CHECK(cyclic_shift(a, 1).str() == "1,2,1,2");
    CHECK(cyclic_shift(a, 4).str() == a.str());
    CHECK(cyclic_shift(a, -1).str() == "1,2,1,2");  // negative shifts wrap
    CHECK(cyclic_shift(cyclic_shift(a, 3), 1).str() == a.str());
}

TEST_CASE("shift distinctness detects small periods") {
    CHECK(!all_shifts_distinct(WeakComposition::parse("1,0,1,0")));
    CHECK(!all_shifts_distinct(WeakComposition::parse("2,1,2,1")));
    CHECK(all_shifts_distinct(WeakComposition::parse("2,1,2,1,0")));
    CHECK(all_shifts_distinct(WeakComposition::parse("3")));
}

TEST_CASE("shifted residues match the direct sum") {
    CHECK(shifted_residues(WeakComposition::parse("2,1,2")) ==
          std::vector<long long>{11, 9, 10});
    CHECK(shifted_residues(WeakComposition::parse("1,0,1,0")) ==
          std::vector<long long>{6, 4, 6, 4});
}

TEST_CASE("shifted residues satisfy the minus-m recurrence") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        std::vector<int> entries(static_cast<std::size_t>(n));
        long long m = 0;
        for (int& e : entries) {
            e = static_cast<int>(rng() % 5);
            m += e;
        }
        WeakComposition a{entries};
        std::vector<long long> z = shifted_residues(a);
        for (int r = 0; r + 1 < n; ++r) {
            CHECK(((z[r + 1] - z[r] + m) % n + n) % n == 0);
        }
        if (m > 0 && std::gcd(m, static_cast<long long>(n)) == 1) {
            CHECK(all_shifts_distinct(a));
            std::vector<int> seen(static_cast<std::size_t>(n), 0);
            for (long long zr : z) ++seen[static_cast<std::size_t>(((zr % n) + n) % n)];
            for (int count : seen) CHECK(count == 1);
        }
    }
}
