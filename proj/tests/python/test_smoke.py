"""Smoke tests for the python bindings against the C++ core."""

from fractions import Fraction

import pytest

import hypermatch as hm


def complete_graph(n, k):
    from itertools import combinations

    return hm.KGraph(n, k, [list(e) for e in combinations(range(1, n + 1), k)])


def test_fbound():
    assert hm.f_bound(9, 3, 3) == 56
    assert hm.f_bound(100, 3, 3) == 9604
    assert hm.f_bound(9, 1, 3) == 0


def test_constructions_and_nu():
    s = hm.make_S(9, 3, 3)
    d = hm.make_D(9, 3, 3)
    assert s.edge_count() == 49
    assert d.edge_count() == 56
    assert s.is_stable() and d.is_stable()
    assert hm.nu(s) == 2
    assert hm.nu(d) == 2
    witness = hm.max_matching(d)
    assert len(witness) == 2


def test_kgraph_validation():
    with pytest.raises(ValueError):
        hm.KGraph(3, 3, [[1, 2, 4]])


def test_rainbow_pigeonhole():
    s = hm.make_S(9, 3, 3)
    fam = hm.Family([s, s, s])
    assert hm.rainbow(fam) is None

    c9 = complete_graph(9, 3)
    rich = hm.Family([c9, c9, c9])
    rm = hm.rainbow(rich)
    assert rm is not None
    used = [v for _, edge in rm for v in edge]
    assert len(used) == len(set(used)) == 9


def test_stabilize_and_saturate():
    g = hm.KGraph(4, 3, [[2, 3, 4]])
    st = hm.stabilize(g)
    assert st.edges() == [(1, 2, 3)]

    s = hm.make_S(6, 2, 3)
    fam = hm.Family([s, s])
    assert hm.saturate(fam) == fam
    assert hm.is_saturated(fam)


def test_aux_equivalence():
    s = hm.make_S(6, 2, 3)
    assert hm.aux_matching_equiv(hm.Family([s, s]))


def test_fractional():
    c5 = hm.KGraph(5, 2, [[1, 2], [2, 3], [3, 4], [4, 5], [1, 5]])
    value, weights, dual = hm.max_fractional(c5)
    assert value == Fraction(5, 2)
    assert sum(w for _, w in weights) == Fraction(5, 2)
    assert sum(dual) == Fraction(5, 2)

    fano = hm.KGraph(
        7, 3,
        [[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 5, 6]],
    )
    value, _, _ = hm.max_fractional(fano)
    assert value == Fraction(7, 3)
    assert hm.has_perfect_fractional(fano)


def test_extend_complete3():
    loads = [Fraction(1, 2)] * 5 + [0, 0, 0, 0]
    added = hm.extend_complete3(9, loads)
    per_vertex = {v: Fraction(0) for v in range(1, 10)}
    for edge, w in added:
        assert w >= 0
        for v in edge:
            per_vertex[v] += w
    for v in range(1, 10):
        assert loads[v - 1] + per_vertex[v] == 1


def test_closeness():
    s = hm.make_S(9, 3, 3)
    empty = hm.KGraph(9, 3, [])
    assert hm.closeness(s, empty) == Fraction(49, 729)
    assert hm.closeness(empty, s) == 0


def test_verify_sweeps():
    verdict = hm.verify_erdos(9, 3, 3, trials=20, seed=11)
    assert verdict["status"] == "CONFIRMED"
    verdict = hm.verify_rainbow(9, 3, 3, trials=10, seed=11)
    assert verdict["status"] == "CONFIRMED"
    assert verdict["sweep_cases"] > 0


def test_io_round_trip():
    d = hm.make_D(9, 2, 3)
    assert hm.parse_kgraph(hm.emit_kgraph(d)) == d
    fam = hm.Family([d, hm.make_S(9, 2, 3)])
    assert hm.parse_family(hm.emit_family(fam)) == fam
