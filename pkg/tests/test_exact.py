import itertools
from fractions import Fraction

import pytest

import zonocount.exact as exact
from zonocount import (
    CoeffTable,
    EnumerationBudgetError,
    MemoryBudgetError,
    MomentPair,
    brute_force_count,
    build_table,
    diameter_moment,
    diameter_numerators,
    occurrence_moments,
    occurrence_numerators,
    zon_coefficient,
    zon_cumulative,
)

Z2_DIAG = [1, 3, 10, 34, 109, 331, 965]
Z3_DIAG = [1, 11, 170, 2458]


def test_coefficient_examples():
    assert zon_coefficient(2, (1, 1)) == 3
    assert zon_coefficient(2, (2, 2)) == 10
    for k in range(6):
        assert zon_coefficient(1, (k,)) == 1


def test_diagonal_values():
    table2 = build_table(2, (6, 6))
    assert [table2.coefficient((n, n)) for n in range(7)] == Z2_DIAG
    table3 = build_table(3, (3, 3, 3))
    assert [table3.coefficient((n, n, n)) for n in range(4)] == Z3_DIAG


def test_table_holds_all_subboxes():
    # one DP at the outer bound yields every smaller coefficient
    table = build_table(2, (5, 5))
    for box in ((1, 1), (2, 2), (3, 1), (4, 5), (0, 3)):
        assert table.coefficient(box) == zon_coefficient(2, box)


def test_symmetry_under_coordinate_permutation():
    assert zon_coefficient(2, (2, 5)) == zon_coefficient(2, (5, 2))
    vals = {zon_coefficient(3, p) for p in itertools.permutations((1, 2, 3))}
    assert len(vals) == 1


def test_factor_order_independence():
    for dim, bound in ((2, (4, 4)), (3, (2, 2, 2))):
        assert build_table(dim, bound).cells == build_table(dim, bound, reverse=True).cells


def test_cumulative():
    assert zon_cumulative(2, 0) == 1
    assert zon_cumulative(2, 1) == 6
    assert zon_cumulative(1, 5) == 6
    values = [zon_cumulative(2, n) for n in range(7)]
    assert all(a <= b for a, b in zip(values, values[1:]))


def test_validation_errors():
    with pytest.raises(ValueError):
        zon_coefficient(2, (1,))
    with pytest.raises(ValueError):
        zon_coefficient(2, (-1, 1))
    with pytest.raises(ValueError):
        zon_coefficient(0, ())


def test_diameter_moment_examples():
    assert diameter_moment(2, 1) == Fraction(4, 3)
    assert diameter_moment(2, 2) == Fraction(2)
    assert diameter_moment(2, 3) == Fraction(42, 17)
    assert diameter_moment(2, 4) == Fraction(314, 109)
    assert diameter_moment(3, 1) == Fraction(19, 11)
    for k in (1, 2, 5):
        assert diameter_moment(1, k) == 1
    with pytest.raises(ValueError):
        diameter_moment(2, 0)


def test_occurrence_moment_examples():
    mean, var = occurrence_moments(2, 1, (1, 1))
    assert (mean, var) == (Fraction(1, 3), Fraction(2, 9))
    mean, var = occurrence_moments(2, 1, (1, 0))
    assert mean == Fraction(1, 3)
    mean, var = occurrence_moments(2, 2, (1, 1))
    assert (mean, var) == (Fraction(2, 5), Fraction(11, 25))
    mean, var = occurrence_moments(2, 2, (2, 1))
    assert (mean, var) == (Fraction(1, 10), Fraction(9, 100))
    mean, var = occurrence_moments(1, 3, (1,))
    assert (mean, var) == (Fraction(3), Fraction(0))


def test_occurrence_validation():
    with pytest.raises(ValueError):
        occurrence_moments(2, 2, (2, 2))  # not primitive
    with pytest.raises(ValueError):
        occurrence_moments(2, 1, (1, 2))  # exceeds bound


def test_brute_force_matches_dp_on_sample_boxes():
    for dim, box in ((2, (3, 2)), (2, (4, 4)), (2, (5, 3)), (3, (2, 2, 1))):
        res = brute_force_count(dim, box)
        assert res.count == zon_coefficient(dim, box)


def test_brute_force_companions_match_marked_dp():
    for n in (1, 2, 3):
        res = brute_force_count(2, (n, n))
        pair = diameter_numerators(2, n)
        assert res.count == pair.count
        assert res.direction_count_sum == pair.weighted
        for v0 in ((1, 1), (1, 0)):
            opair = occurrence_numerators(2, n, v0)
            got = res.occurrence[(v0, 0)]
            assert got == (opair.weighted, opair.weighted2)


def test_sign_classes_of_same_vector_are_exchangeable():
    res = brute_force_count(2, (3, 3))
    for coords in ((1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2)):
        tallies = {res.occurrence[(coords, j)] for j in (0, 1)}
        assert len(tallies) == 1, coords
    # reflected vectors have identical tallies as well
    assert res.occurrence[((1, 2), 0)] == res.occurrence[((2, 1), 0)]


def test_moment_pair_guards():
    pair = MomentPair(count=3, weighted=4)
    assert pair.mean == Fraction(4, 3)
    with pytest.raises(ValueError):
        pair.variance
    with pytest.raises(ZeroDivisionError):
        MomentPair(count=0, weighted=0).mean


def test_memory_guard(monkeypatch):
    with pytest.raises(MemoryBudgetError):
        CoeffTable(2, (10 ** 5, 10 ** 5))
    monkeypatch.setenv("ZONOCOUNT_MEMORY_BUDGET", "1000")
    with pytest.raises(MemoryBudgetError):
        CoeffTable(2, (10, 10))
    monkeypatch.setenv("ZONOCOUNT_MEMORY_BUDGET", "not-a-number")
    with pytest.raises(ValueError):
        CoeffTable(2, (2, 2))


def test_brute_force_node_budget(monkeypatch):
    monkeypatch.setattr(exact, "_BRUTE_NODE_BUDGET", 50)
    with pytest.raises(EnumerationBudgetError):
        brute_force_count(2, (3, 3))


def test_checkpoint_round_trip(tmp_path):
    table = build_table(2, (3, 4))
    path = tmp_path / "table.json"
    table.dump_json(path)
    loaded = CoeffTable.load_json(path)
    assert loaded.bound == table.bound
    assert loaded.cells == table.cells
    # wrong version is refused
    import json

    doc = json.loads(path.read_text())
    doc["format"] = 99
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    with pytest.raises(ValueError):
        CoeffTable.load_json(bad)


def test_origin_cell_stays_one():
    table = build_table(3, (2, 2, 2))
    assert table.coefficient((0, 0, 0)) == 1
    assert all(c >= 0 for c in table.cells)
