import pytest

from artifact.solver import (solve, sl2_solution, sl2_inverse, gl2_variants,
                             extended_decorate, compare, VerdictMap)
from artifact.superset import superset_classes


def test_sl2_solution_values():
    m0 = sl2_solution(0)
    assert m0(0) and m0(1) and m0(-3) and not m0(2) and not m0(-4)
    m2 = sl2_solution(2)
    assert m2(4) and m2(-4) and m2(5) and m2(7) and m2(-9)
    assert not m2(0) and not m2(2) and not m2(3) and not m2(6)
    with pytest.raises(ValueError):
        sl2_solution(-1)


def test_sl2_inverse_consistent_with_solution():
    for i in range(-12, 13):
        for s in range(8):
            assert (s in sl2_inverse(i)) == sl2_solution(s)(i)


def test_gl2_diagonal_variant():
    ev = gl2_variants(("diagonal", 3, 1), window=8)
    assert set(ev.base) == {-2, 2, -3, 3, -5, 5, -7, 7}
    assert ev.det_component == 4 and ev.modulus == 0
    ev0 = gl2_variants(("diagonal", 1, 1), window=5)
    assert set(ev0.base) == {0, 1, -1, 3, -3, 5, -5}


def test_gl2_antidiagonal_variant():
    ev = gl2_variants(("antidiagonal", 3), window=6)
    assert set(ev.base) == {-6, -4, -2, 0, 2, 4, 6}
    assert ev.det_component == 3
    with pytest.raises(ValueError):
        gl2_variants(("antidiagonal", 2))
    ev2 = gl2_variants(("antidiagonal", 3), window=6, pgl2=True)
    assert ev2.det_component == 1 and ev2.modulus == 2


def test_extended_decorate():
    vm = solve("sl2", (0,), radius=4)
    ev = extended_decorate("pgl3", vm)
    assert ev.modulus == 3 and ev.det_component == 0
    assert extended_decorate("psp4", vm).modulus == 2
    with pytest.raises(ValueError):
        extended_decorate("so5", vm)


def test_solve_partitions_window():
    vm = solve("sl3", (0, 0, 0), radius=4, p_max=3, q_max=14)
    kinds = [v for _, v, _ in vm.entries]
    assert set(kinds) <= {"NONEMPTY", "EMPTY", "EMPTY-at-budget", "UNKNOWN"}
    seen = [g for g, _, _ in vm.entries]
    assert len(seen) == len(set(seen))
    assert vm.exact == ("UNKNOWN" not in kinds)


def test_solve_downgrades_empty_when_truncated():
    vm = solve("sl3", (0, 0, 0), radius=4, p_max=1, q_max=2)
    assert vm.flag("status") == "truncated"
    assert not vm.chambers("EMPTY")
    assert vm.chambers("EMPTY-at-budget") or vm.exact


def test_compare_reports_and_window_check():
    a = superset_classes("sl3", (0, 0, 0), p_max=3, q_max=12, radius=4)
    b = superset_classes("sl3", (0, 0, 0), p_max=3, q_max=12, radius=3)
    with pytest.raises(ValueError):
        compare(a, b)
    rep = compare(a, a)
    assert rep["exact"] and not rep["only_first"] and not rep["only_second"]


def test_verdict_lookup():
    vm = solve("sl2", (2,), radius=6)
    rsix = vm.entries[0][0]
    assert vm.verdict(rsix) in ("NONEMPTY", "EMPTY", "EMPTY-at-budget")
    with pytest.raises(KeyError):
        vm.verdict(((99,), 0))
