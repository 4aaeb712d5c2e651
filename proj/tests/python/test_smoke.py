"""End-to-end smoke of the Python module against independently known values."""
import json

import pytest
import skewsieve as sk


def test_shapes_round_trip():
    outer = sk.Partition.parse("3,2,2")
    inner = sk.Partition.parse("1")
    shape = sk.SkewShape(outer, inner)
    assert str(shape) == "3,2,2/1"
    assert shape.num_cells() == 6
    assert not shape.is_straight
    assert sk.SkewShape(sk.Partition([2, 1])).is_straight
    assert sk.weighted_size(sk.Partition.parse("3,2,2")) == 6
    with pytest.raises(sk.ParseError):
        sk.Partition.parse("3,x")


def test_composition_shift_facts():
    a = sk.WeakComposition.parse("2,1,2,1")
    assert str(sk.cyclic_shift(a, 1)) == "1,2,1,2"
    assert not sk.all_shifts_distinct(sk.WeakComposition.parse("1,0,1,0"))
    assert sk.all_shifts_distinct(sk.WeakComposition.parse("2,1,2,1,0"))
    assert sk.shifted_residues(sk.WeakComposition.parse("2,1,2")) == [11, 9, 10]


def test_enumeration_and_kostka():
    shape = sk.SkewShape(sk.Partition.parse("2,1"))
    ts = sk.enumerate(shape, 3)
    assert len(ts) == 8
    assert str(ts[0]) == "1,1;2"
    assert sk.kostka(shape, sk.WeakComposition.parse("1,1,1")) == 2
    t = sk.Tableau.parse(".,1,3;1,3;2,4", 4)
    assert sk.weight(t).entries == [2, 1, 2, 1]
    assert sk.reading_word(t) == [2, 4, 1, 3, 1, 3]
    with pytest.raises(sk.TableauError):
        sk.Tableau.parse("2,1", 2)


def test_crystal_operators():
    t = sk.Tableau.parse("1,1", 2)
    assert str(sk.lower(t, 1)) == "1,2"
    assert sk.raise_(t, 1) is None
    assert str(sk.reflect(t, 1)) == "2,2"
    orb = sk.orbit(sk.Tableau.parse(".,1,3;1,3;2,4", 4))
    assert len(orb) == 2
    assert {str(u) for u in orb.elements} == {".,1,3;1,3;2,4", ".,2,4;1,3;2,4"}
    assert len(sk.orbit(sk.Tableau.parse(".,1,4;1,3;2,4", 4))) == 4
    u = sk.Tableau.parse("1,2;2", 3)
    assert sk.weight(sk.cyclic_action(u)).entries == [
        sk.weight(u).entries[1], sk.weight(u).entries[2], sk.weight(u).entries[0]]


def test_promotion_contrast():
    shape = sk.SkewShape(sk.Partition.parse("2,1"))
    assert sk.action_order(shape, 3) == 3
    assert sk.promotion_order(shape, 3) == 6
    found = sk.find_promotion_contrast(6, 6)
    assert (str(found.shape), found.n) == ("2,1", 3)


def test_qpolynomials():
    f = sk.principal_specialization(
        sk.SkewShape(sk.Partition.parse("2,1")), 3, sk.StatisticConvention.ZeroBased)
    assert f.dense() == [0, 1, 2, 2, 2, 1]
    assert f.at_one() == 8
    assert sk.q_integer(3).dense() == [1, 1, 1]
    assert sk.reduce_mod_cyclic(f, 3).dense() == [2, 3, 3]
    assert sk.multiple_of_q_integer(sk.q_integer(5), 5) == 1
    assert sk.multiple_of_q_integer(sk.QPolynomial.parse_dense("1 2"), 2) is None


def test_csp_reports():
    shape = sk.SkewShape(sk.Partition.parse("3,2,2"), sk.Partition.parse("1"))
    report = sk.verify_refined_csp(shape, sk.WeakComposition.parse("2,1,2,1,0"), 5)
    assert report.holds()
    assert report.orbit_sizes == [5, 5, 5, 5, 5]
    assert report.fixed_points(5) == 25
    assert report.fixed_points(1) == 0
    assert json.loads(report.to_json())["verdict"] == "holds"
    assert report.to_tsv_row().split("\t") == [
        "3,2,2", "1", "5", "2,1,2,1,0", "refined-union", "5^5", "holds"]

    full = sk.verify_full_csp(shape, 5)
    assert full.holds() and full.candidate.at_one() == 330

    with pytest.raises(sk.GcdError):
        sk.verify_refined_csp(shape, sk.WeakComposition.parse("2,1,2,1"), 4)

    assert sk.orbit_sum_multiplier(
        sk.SkewShape(sk.Partition.parse("2,1")), sk.WeakComposition.parse("1,1,1,0"), 4) == 2


def test_sweep_engine():
    assert len(sk.reduced_skew_shapes(3)) == 9
    assert len(sk.weak_compositions(3, 2)) == 4
    assert str(sk.shift_class_representative(sk.WeakComposition.parse("1,0,1,0"))) == "0,1,0,1"

    opt = sk.SweepOptions()
    opt.crystal_checks = True
    opt.cross_checks = True
    outcome = sk.scan_instance(sk.SkewShape(sk.Partition.parse("2,1")), 4, opt)
    assert outcome.total == 20
    assert outcome.coprime and outcome.full_congruence_holds
    assert outcome.crystal_checked == 20 and outcome.crystal_failures == 0
    assert outcome.cross_checked and outcome.cross_check_ok
    assert sum(cls.kostka_value for cls in outcome.classes) < 20  # reps only

    seen = []
    opt2 = sk.SweepOptions()
    opt2.max_size = 2
    opt2.max_n = 3
    sk.run_sweep(opt2, lambda o: seen.append((str(o.shape), o.n)))
    assert seen[0] == ("1", 1)
    assert seen == sorted(seen)  # deterministic order
    assert sk.full_report(outcome, sk.StatisticConvention.ZeroBased).holds()
