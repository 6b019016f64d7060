import pytest

import permgrid


def test_golden_generators():
    assert permgrid.parallel_sawtooth(4) == [6, 1, 5, 8, 2, 7, 10, 3, 9, 12, 4, 11]
    assert permgrid.increasing_oscillation(12) == [2, 4, 1, 6, 3, 8, 5, 10, 7, 12, 9, 11]
    assert permgrid.spiral("cw", 10, [(4, 1, 2), (8, 1, 0)])["perm"] == [2, 4, 12, 5, 8, 6, 9, 3, 7, 11, 1, 10]


def test_core_operations():
    assert permgrid.is_simple([2, 4, 1, 3])
    assert not permgrid.is_simple([1])
    assert permgrid.parse("2 4 1 3") == [2, 4, 1, 3]
    assert permgrid.format([2, 4, 1, 3]) == "2 4 1 3"
    kind, skeleton, parts = permgrid.decompose([2, 6, 5, 1, 3, 4])
    assert (kind, skeleton, parts) == ("SIMPLE", [2, 4, 1, 3], [[1], [2, 1], [1], [1, 2]])
    assert permgrid.inflate(skeleton, parts) == [2, 6, 5, 1, 3, 4]
    assert permgrid.longest_sum21([2, 1, 4, 3])[0] == 2
    assert permgrid.realize_word("21", "UR")["perm"] == [2, 4, 1, 3]
    assert permgrid.find_gridding([2, 1, 4, 3], 0, 1)["v_cuts"] == [2]
    assert permgrid.find_gridding(permgrid.sum_of_21(5), 0, 1) is None


def test_bounds_are_exact():
    assert permgrid.bound_h(2, 2, 2) == 60
    assert permgrid.bound_g(4, 2) == 7 * (32**32 * 2) + 1
    assert permgrid.bound_rect(1, 1) == 8**8


def test_errors_map_to_exceptions():
    with pytest.raises(permgrid.PermgridError, match="PARSE"):
        permgrid.parse("2 x")
    with pytest.raises(ValueError):
        permgrid.bound_f(0)


def test_criterion_scan_and_plot():
    rows = permgrid.criterion_scan("123", 6)
    assert [r[2] for r in rows] == [n // 2 for n in range(1, 7)]
    svg = permgrid.plot_svg([2, 4, 1, 3])
    assert svg == permgrid.plot_svg([2, 4, 1, 3])
    assert svg.count("<circle") == 4
