import itertools
import random
from fractions import Fraction
from math import comb

import pytest

from rootmat.errors import BudgetExceededError
from rootmat.linmatroid import (
    LinearMatroid,
    all_circuits_upto,
    circuits3,
    circuits3_bruteforce,
    classical_circuits,
    is_circuit,
    is_independent,
    matroid_of,
    rank,
)
from rootmat.rootsystems import build, canonical_line, known_group_generators, parse_system_id


def _line_index(system, coords):
    vec = canonical_line(tuple(Fraction(c) for c in coords))
    return system.lines.index(vec)


def test_rank_empty():
    m = matroid_of(build("A", 3))
    assert rank(m, []) == 0


def test_rank_full_a3():
    m = matroid_of(build("A", 3))
    assert rank(m, range(6)) == 3


def test_rank_triangle_a3():
    s = build("A", 3)
    m = matroid_of(s)
    tri = [_line_index(s, (1, -1, 0, 0)),
           _line_index(s, (0, 1, -1, 0)),
           _line_index(s, (1, 0, -1, 0))]
    assert rank(m, tri) == 2
    assert is_circuit(m, tri)


def test_rank_out_of_range():
    m = matroid_of(build("A", 2))
    with pytest.raises(IndexError):
        rank(m, [99])


def test_b2_circuits():
    s = build("B", 2)
    m = matroid_of(s)
    e1 = _line_index(s, (1, 0))
    e2 = _line_index(s, (0, 1))
    plus = _line_index(s, (1, 1))
    assert is_circuit(m, [e1, e2, plus])
    assert is_independent(m, [e1, e2]) and not is_circuit(m, [e1, e2])
    assert circuits3(m) == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]


def test_a4_four_cycle_is_a_circuit():
    s = build("A", 4)
    m = matroid_of(s)
    cyc = [_line_index(s, (1, -1, 0, 0, 0)),
           _line_index(s, (0, 1, -1, 0, 0)),
           _line_index(s, (0, 0, 1, -1, 0)),
           _line_index(s, (1, 0, 0, -1, 0))]
    assert is_circuit(m, cyc)
    assert not is_circuit(m, cyc[:3])


@pytest.mark.parametrize("sid", ["A3", "A4", "B2", "B3", "D4", "F4", "H3"])
def test_circuits3_matches_bruteforce(sid):
    m = matroid_of(parse_system_id(sid))
    assert circuits3(m) == circuits3_bruteforce(m)


def test_circuits3_counts():
    for n in range(2, 7):
        assert len(circuits3(matroid_of(build("A", n)))) == comb(n + 1, 3)
    for n in range(4, 7):
        assert len(circuits3(matroid_of(build("D", n)))) == 4 * comb(n, 3)
    # marked triples contribute 4 per pair: {e_i, e_j, e_i +- e_j} and
    # {e_i or e_j, e_i+e_j, e_i-e_j}
    for n in range(2, 7):
        expected = 4 * comb(n, 3) + 4 * comb(n, 2)
        assert len(circuits3(matroid_of(build("B", n)))) == expected


def test_circuits3_uniform():
    for m_param in (5, 8):
        m = matroid_of(build("I2", m_param))
        assert len(circuits3(m)) == comb(m_param, 3)
        assert rank(m, range(m_param)) == 2


def test_all_circuits_a3():
    m = matroid_of(build("A", 3))
    circuits = all_circuits_upto(m, 4)
    assert len(circuits) == 7
    assert sum(1 for c in circuits if len(c) == 3) == 4
    assert sum(1 for c in circuits if len(c) == 4) == 3


def test_all_circuits_b2_caps_at_rank_plus_one():
    m = matroid_of(build("B", 2))
    assert all_circuits_upto(m, 3) == circuits3(m)


def test_all_circuits_budget_error():
    m = matroid_of(build("B", 4))
    with pytest.raises(BudgetExceededError):
        all_circuits_upto(m, 5, node_budget=10)


def test_every_enumerated_set_is_a_circuit():
    m = matroid_of(build("D", 4))
    for c in all_circuits_upto(m, 5):
        assert is_circuit(m, c)


@pytest.mark.parametrize("family,n", [("A", 2), ("A", 3), ("A", 4),
                                      ("B", 2), ("B", 3), ("B", 4),
                                      ("D", 4)])
def test_classical_shapes_match_bruteforce(family, n):
    s = build(family, n)
    m = matroid_of(s)
    kmax = n + 1
    assert set(classical_circuits(s, kmax)) == set(all_circuits_upto(m, kmax))


def test_classical_rejects_other_families():
    with pytest.raises(ValueError):
        classical_circuits(build("F4"), 5)


def _independence_table(m, max_size):
    table = {}
    for k in range(max_size + 1):
        for s in itertools.combinations(range(m.ground_size), k):
            table[frozenset(s)] = rank(m, s) == k
    return table


@pytest.mark.parametrize("sid", ["A3", "B3", "D4"])
def test_matroid_axioms_exhaustive(sid):
    m = matroid_of(parse_system_id(sid))
    max_size = 5
    indep = _independence_table(m, max_size)
    sets = [s for s, ok in indep.items() if ok]
    assert frozenset() in sets
    # hereditary
    for s in sets:
        for x in s:
            assert indep[s - {x}]
    # augmentation
    for a in sets:
        for b in sets:
            if len(a) > len(b):
                assert any(indep[b | {x}] for x in a - b), (sorted(a), sorted(b))


def test_representative_flip_invariance_exhaustive():
    for sid in ["A3", "B2"]:
        s = parse_system_id(sid)
        m = matroid_of(s)
        for i in range(s.num_lines):
            flipped_vectors = list(s.lines)
            flipped_vectors[i] = tuple(-c for c in flipped_vectors[i])
            fm = LinearMatroid.from_vectors(flipped_vectors)
            for k in range(s.num_lines + 1):
                for subset in itertools.combinations(range(s.num_lines), k):
                    assert rank(m, subset) == rank(fm, subset)


def test_representative_flip_invariance_randomized():
    rng = random.Random(42)
    s = build("D", 4)
    m = matroid_of(s)
    flipped_vectors = [
        tuple(-c for c in v) if rng.random() < 0.5 else v for v in s.lines
    ]
    fm = LinearMatroid.from_vectors(flipped_vectors)
    for _ in range(300):
        subset = rng.sample(range(s.num_lines), rng.randint(0, 6))
        assert rank(m, subset) == rank(fm, subset)


def test_circuits3_closed_under_known_group():
    for sid in ["A3", "B3", "D4", "F4", "H3"]:
        s = parse_system_id(sid)
        c3 = {frozenset(c) for c in circuits3(matroid_of(s))}
        for g in known_group_generators(s):
            assert {frozenset(g[i] for i in c) for c in c3} == c3


def test_quadext_rank_path():
    s = build("H3")
    m = matroid_of(s)
    assert rank(m, range(s.num_lines)) == 3
    assert len(circuits3(m)) == len(circuits3_bruteforce(m))
