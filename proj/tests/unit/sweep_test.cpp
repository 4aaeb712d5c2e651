#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "skewsieve/engine.hpp"
#include "skewsieve/sweep.hpp"

using namespace skewsieve;

TEST_CASE("reduced shape families") {
    const std::size_t expected[] = {1, 3, 9, 28, 87};
    for (int m = 1; m <= 5; ++m) {
        std::vector<SkewShape> family = reduced_skew_shapes(m);
        CHECK(family.size() == expected[m - 1]);
        CHECK(std::is_sorted(family.begin(), family.end()));
        CHECK(std::adjacent_find(family.begin(), family.end()) == family.end());
        for (const SkewShape& s : family) {
            CHECK(s.num_cells() == m);
            REQUIRE(s.num_rows() >= 1);
            CHECK(s.row_begin(s.num_rows() - 1) == 0);
            for (std::size_t r = 0; r < s.num_rows(); ++r) {
                CHECK(s.row_length(r) >= 1);  // no empty row
                if (r + 1 < s.num_rows()) {
                    CHECK(s.row_begin(r) <= s.row_end(r + 1));  // no empty column
                }
            }
        }
    }

    // The straight members are exactly the partitions of m.
    const std::size_t partitions[] = {1, 2, 3, 5, 7};
    for (int m = 1; m <= 5; ++m) {
        std::vector<SkewShape> straight = reduced_skew_shapes(m, false);
        CHECK(straight.size() == partitions[m - 1]);
        for (const SkewShape& s : straight) CHECK(s.is_straight());
    }

    CHECK_THROWS_AS(reduced_skew_shapes(0), std::domain_error);
}

TEST_CASE("weak composition generation") {
    std::vector<WeakComposition> w32 = weak_compositions(3, 2);
    REQUIRE(w32.size() == 4);
    CHECK(w32[0].str() == "0,3");
    CHECK(w32[3].str() == "3,0");
    CHECK(weak_compositions(0, 3).size() == 1);
    CHECK(weak_compositions(4, 1).size() == 1);
    CHECK(weak_compositions(6, 4).size() == 84);  // C(9,3)
    CHECK(weak_compositions(0, 0).size() == 1);
    CHECK(weak_compositions(2, 0).empty());
}

TEST_CASE("shift class representative is shift invariant") {
    WeakComposition a = WeakComposition::parse("1,0,1,0");
    CHECK(shift_class_representative(a).str() == "0,1,0,1");
    for (int r = 0; r < 4; ++r) {
        CHECK(shift_class_representative(cyclic_shift(a, r)) ==
              shift_class_representative(a));
    }
    CHECK(shift_class_representative(WeakComposition::parse("2,1,2,1,0")).str() ==
          "0,2,1,2,1");
}

TEST_CASE("flat kernels match the tableau operations everywhere small") {
    for (int m = 1; m <= 4; ++m) {
        for (const SkewShape& shape : reduced_skew_shapes(m)) {
            engine::FlatShape flat = engine::FlatShape::build(shape);
            for (int n = 1; n <= 4; ++n) {
                std::vector<Tableau> all = enumerate(shape, n);

                // Identical iteration order.
                std::size_t index = 0;
                engine::enumerate_fillings(flat, n, [&](const engine::Filling& f) {
                    REQUIRE(index < all.size());
                    CHECK(engine::to_tableau(shape, f, n) == all[index]);
                    ++index;
                });
                CHECK(index == all.size());

                engine::MatchBuffers mb;
                for (const Tableau& t : all) {
                    engine::Filling f = engine::from_tableau(flat, t);
                    for (int i = 1; i < n; ++i) {
                        engine::Filling g = f;
                        engine::sigma(flat, g, i, mb);
                        CHECK(engine::to_tableau(shape, g, n) == reflect(t, i));

                        engine::Filling l = f;
                        bool lowered = engine::lower_step(flat, l, i, mb);
                        auto expected = lower(t, i);
                        CHECK(lowered == expected.has_value());
                        if (lowered) CHECK(engine::to_tableau(shape, l, n) == *expected);

                        engine::Filling r = f;
                        bool raised = engine::raise_step(flat, r, i, mb);
                        auto expected_up = raise(t, i);
                        CHECK(raised == expected_up.has_value());
                        if (raised) CHECK(engine::to_tableau(shape, r, n) == *expected_up);
                    }
                    engine::Filling c = f;
                    engine::cyclic(flat, c, n, mb);
                    CHECK(engine::to_tableau(shape, c, n) == cyclic_action(t));
                }
            }
        }
    }
}

TEST_CASE("scan aggregates match the tableau level computations") {
    SweepOptions opt;
    for (int m = 1; m <= 4; ++m) {
        for (const SkewShape& shape : reduced_skew_shapes(m)) {
            for (int n : {3, 4}) {
                InstanceOutcome o = scan_instance(shape, n, opt);
                std::vector<Tableau> all = enumerate(shape, n);
                CHECK(o.total == static_cast<long long>(all.size()));
                CHECK(o.coprime == (std::gcd(m, n) == 1));

                QPolynomial gf0 = statistic_gf(all, StatisticConvention::ZeroBased);
                for (std::size_t e = 0; e < o.gf_zero.size(); ++e) {
                    CHECK(gf0.coeff(static_cast<long long>(e)) == o.gf_zero[e]);
                }
                QPolynomial gf1 = statistic_gf(all, StatisticConvention::OneBased);
                for (std::size_t e = 0; e < o.gf_one.size(); ++e) {
                    CHECK(gf1.coeff(static_cast<long long>(e)) == o.gf_one[e]);
                }

                // Orbit census from explicit walks.
                std::map<long long, long long> sizes;
                std::set<Tableau> seen;
                for (const Tableau& t : all) {
                    if (seen.count(t)) continue;
                    CyclicOrbit orb = orbit(t);
                    seen.insert(orb.elements.begin(), orb.elements.end());
                    ++sizes[static_cast<long long>(orb.size())];
                }
                CHECK(o.orbit_sizes == sizes);

                long long class_total = 0;
                for (const ClassOutcome& cls : o.classes) {
                    CHECK(cls.kostka_value == kostka(shape, cls.content));
                    class_total += cls.size;
                }
                CHECK(class_total == o.total);
            }
        }
    }
}

TEST_CASE("frozen instance totals") {
    // Row m, column n: counts confirmed by an out-of-repo determinant
    // computation and by the filter-everything oracle at small sizes.
    const long long totals[4][6] = {{1, 2, 3, 4, 5, 6},
                                    {2, 8, 18, 32, 50, 72},
                                    {4, 32, 108, 256, 500, 864},
                                    {8, 129, 654, 2068, 5050, 10473}};
    SweepOptions opt;
    for (int m = 1; m <= 4; ++m) {
        for (int n = 1; n <= 6; ++n) {
            long long total = 0;
            for (const SkewShape& shape : reduced_skew_shapes(m)) {
                total += scan_instance(shape, n, opt).total;
            }
            CHECK(total == totals[m - 1][n - 1]);
        }
    }
}

TEST_CASE("full scan of one coprime instance") {
    SweepOptions opt;
    opt.crystal_checks = true;
    opt.cross_checks = true;
    SkewShape shape(Partition::parse("3,2,2"), Partition::parse("1"));
    InstanceOutcome o = scan_instance(shape, 5, opt);
    CHECK(o.total == 330);
    CHECK(o.coprime);
    CHECK(o.orbits_divide_n);
    CHECK(o.orbit_sizes == std::map<long long, long long>{{5, 66}});
    CHECK(o.full_congruence_holds);
    CHECK(o.shift_identity_ok);
    CHECK(o.content_symmetry_ok);
    CHECK(o.crystal_checked == 330);
    CHECK(o.crystal_failures == 0);
    CHECK(o.cross_checked);
    CHECK(o.cross_check_ok);
    for (const ClassOutcome& cls : o.classes) {
        CHECK(cls.congruence_holds);
        CHECK(cls.sizes_all_n);
        CHECK(cls.multiplier_matches_kostka);
    }
    // 210 compositions of 6 into 5 parts, 42 shift classes of size 5.
    CHECK(o.classes.size() == 42);

    CspReport full = full_report(o, StatisticConvention::ZeroBased);
    CHECK(full.holds());
    CHECK(full.candidate.at_one() == 330);
    const ClassOutcome* cls = nullptr;
    for (const ClassOutcome& c : o.classes) {
        if (c.content.str() == "0,2,1,2,1") cls = &c;
    }
    REQUIRE(cls != nullptr);
    CspReport refined = class_report(o, *cls);
    CHECK(refined.holds());
    CHECK(refined.scope == Scope::RefinedUnion);
    CHECK(refined.orbit_sizes == std::vector<long long>(5, 5));
}

TEST_CASE("non-coprime scan stays consistent without sieving") {
    SweepOptions opt;
    SkewShape shape(Partition::parse("3,2,2"), Partition::parse("1"));
    InstanceOutcome o = scan_instance(shape, 4, opt);
    CHECK(o.total == 74);
    CHECK(!o.coprime);
    CHECK(o.orbits_divide_n);
    CHECK(o.orbit_sizes == std::map<long long, long long>{{2, 5}, {4, 16}});
    CHECK(!o.full_congruence_holds);
    CHECK(o.shift_identity_ok);
    CHECK(o.content_symmetry_ok);
}

TEST_CASE("sweep visits instances in a fixed order") {
    SweepOptions opt;
    opt.max_size = 4;
    opt.max_n = 4;
    std::vector<std::string> order;
    run_sweep(opt, [&](const InstanceOutcome& o) {
        order.push_back(o.shape.str() + "|" + std::to_string(o.n));
    });
    CHECK(order.size() == 93);  // coprime (shape, n) pairs with m, n <= 4
    CHECK(order.front() == "1|1");
    CHECK(std::set<std::string>(order.begin(), order.end()).size() == order.size());

    opt.threads = 3;
    std::vector<std::string> parallel;
    run_sweep(opt, [&](const InstanceOutcome& o) {
        parallel.push_back(o.shape.str() + "|" + std::to_string(o.n));
    });
    CHECK(parallel == order);

    opt.threads = 1;
    opt.coprime_only = false;
    std::vector<std::string> everything;
    run_sweep(opt, [&](const InstanceOutcome& o) {
        everything.push_back(o.shape.str() + "|" + std::to_string(o.n));
    });
    CHECK(everything.size() == 164);  // 41 shapes, four alphabets each
}

TEST_CASE("promotion contrast search") {
    auto contrast = find_promotion_contrast(3, 3);
    REQUIRE(contrast.has_value());
    CHECK(contrast->shape.str() == "2,1");
    CHECK(contrast->n == 3);
    CHECK(contrast->cyclic_order == 3);
    CHECK(contrast->promotion_order == 6);
}
