import random
from fractions import Fraction

import pytest

from rootmat.permgrp import bsgs, compose, is_identity
from rootmat.rootsystems import (
    F4_DUALITY_MATRIX,
    _apply_matrix,
    build,
    canonical_line,
    direct_sum,
    extra_symmetry_perms,
    known_group_generators,
    parse_system_id,
    reflection_perm,
)
from rootmat.scalar import galois


@pytest.mark.parametrize("family,n,lines", [
    ("A", 1, 1),
    ("A", 3, 6),
    ("A", 7, 28),
    ("B", 2, 4),
    ("B", 7, 49),
    ("D", 4, 12),
    ("D", 7, 42),
    ("Dprime4", None, 12),
    ("E6", None, 36),
    ("E7", None, 63),
    ("E8", None, 120),
    ("F4", None, 24),
    ("H3", None, 15),
    ("H4", None, 60),
    ("I2", 9, 9),
])
def test_line_counts(family, n, lines):
    assert build(family, n).num_lines == lines


def test_a3_ambient_dimension():
    assert build("A", 3).ambient_dim == 4


@pytest.mark.parametrize("family,n", [("A", 0), ("B", 1), ("D", 3), ("D", 2), ("I2", 4)])
def test_parameter_range_errors(family, n):
    with pytest.raises(ValueError):
        build(family, n)


def test_unknown_family():
    with pytest.raises(ValueError):
        build("G2")


def test_no_parallel_lines():
    for sid in ["A4", "B3", "D4", "F4", "E6", "H3"]:
        s = parse_system_id(sid)
        assert len(set(s.lines)) == s.num_lines
        # canonical form is idempotent and already applied
        for v in s.lines:
            assert canonical_line(v) == v
            assert canonical_line(canonical_line(v)) == canonical_line(v)


def test_canonical_first_nonzero_positive():
    from rootmat.scalar import scalar_sign
    for sid in ["B5", "E7", "H4"]:
        for v in parse_system_id(sid).lines:
            first = next(c for c in v if c)
            assert scalar_sign(first) > 0


def test_canonical_rejects_zero():
    with pytest.raises(ValueError):
        canonical_line((Fraction(0), Fraction(0)))


def test_a2_reflection_swaps_other_lines():
    s = build("A", 2)
    # lines: e1-e2, e1-e3, e2-e3 in index order
    idx = {v: i for i, v in enumerate(s.lines)}
    e12 = canonical_line((Fraction(1), Fraction(-1), Fraction(0)))
    p = reflection_perm(s, idx[e12])
    assert p[idx[e12]] == idx[e12]
    others = [i for i in range(3) if i != idx[e12]]
    assert p[others[0]] == others[1] and p[others[1]] == others[0]


def test_b2_reflection_in_e1():
    s = build("B", 2)
    idx = {v: i for i, v in enumerate(s.lines)}
    e1 = canonical_line((Fraction(1), Fraction(0)))
    e2 = canonical_line((Fraction(0), Fraction(1)))
    plus = canonical_line((Fraction(1), Fraction(1)))
    minus = canonical_line((Fraction(1), Fraction(-1)))
    p = reflection_perm(s, idx[e1])
    assert p[idx[e1]] == idx[e1] and p[idx[e2]] == idx[e2]
    assert p[idx[plus]] == idx[minus] and p[idx[minus]] == idx[plus]


def test_reflections_are_involutions():
    for sid in ["A3", "B3", "D4", "F4", "H3"]:
        s = parse_system_id(sid)
        for i in range(s.num_lines):
            p = reflection_perm(s, i)
            assert is_identity(compose(p, p))


def test_b3_sign_flip_example():
    s = build("B", 3)
    idx = {v: i for i, v in enumerate(s.lines)}
    e1 = canonical_line((Fraction(1), Fraction(0), Fraction(0)))
    plus = canonical_line((Fraction(1), Fraction(1), Fraction(0)))
    minus = canonical_line((Fraction(1), Fraction(-1), Fraction(0)))
    (p,) = extra_symmetry_perms(s)
    assert p[idx[e1]] == idx[e1]
    assert p[idx[plus]] == idx[minus]


def test_f4_duality_matrix_permutes_lines():
    s = build("F4")
    idx = {v: i for i, v in enumerate(s.lines)}
    images = set()
    for v in s.lines:
        w = canonical_line(_apply_matrix(F4_DUALITY_MATRIX, v))
        assert w in idx  # brute-force check that M maps lines to lines
        images.add(w)
    assert len(images) == 24
    e1 = canonical_line(tuple(Fraction(c) for c in (1, 0, 0, 0)))
    e2 = canonical_line(tuple(Fraction(c) for c in (0, 1, 0, 0)))
    plus = canonical_line(tuple(Fraction(c) for c in (1, 1, 0, 0)))
    minus = canonical_line(tuple(Fraction(c) for c in (1, -1, 0, 0)))
    assert canonical_line(_apply_matrix(F4_DUALITY_MATRIX, plus)) == e1
    assert canonical_line(_apply_matrix(F4_DUALITY_MATRIX, minus)) == e2


def test_h_galois_symmetry_closes_on_lines():
    # extra_symmetry_perms verifies internally that the Galois-induced map
    # is a bijection on the line set; a failure would raise.
    for sid in ["H3", "H4"]:
        s = parse_system_id(sid)
        (p,) = extra_symmetry_perms(s)
        assert sorted(p) == list(range(s.num_lines))
        assert is_identity(compose(p, p))  # involution


def test_h3_raw_galois_mirrors_the_line_set():
    # Coordinatewise conjugation alone does NOT fix this coordinate choice
    # of the 15 lines; it lands on the mirror image (swap of two axes).
    s = build("H3")
    lines = set(s.lines)
    raw = {canonical_line(tuple(galois(c) for c in v)) for v in s.lines}
    mirrored = {canonical_line((v[0], v[2], v[1])) for v in raw}
    assert raw != lines
    assert mirrored == lines


@pytest.mark.parametrize("spec,count,dim", [
    ("A1+A1", 2, 4),
    ("A2+A2", 6, 6),
    ("A2+B2", 7, 5),
    ("A1+A1+A1", 3, 6),
])
def test_direct_sums(spec, count, dim):
    s = parse_system_id(spec)
    assert s.num_lines == count
    assert s.ambient_dim == dim


def test_direct_sum_rejects_i2_and_singletons():
    with pytest.raises(ValueError):
        parse_system_id("A2+I2_5")
    with pytest.raises(ValueError):
        direct_sum([build("A", 2)])


@pytest.mark.parametrize("sid,order", [
    ("A3", 24),
    ("B3", 24),
    ("D4", 576),
    ("F4", 1152),
    ("H3", 120),
])
def test_known_group_orders(sid, order):
    s = parse_system_id(sid)
    assert bsgs(known_group_generators(s)).order() == order


def test_known_generators_are_bijections():
    for sid in ["A4", "D5", "F4", "H3"]:
        s = parse_system_id(sid)
        for g in known_group_generators(s):
            assert sorted(g) == list(range(s.num_lines))


def test_parse_system_id_round_trip():
    for sid in ["A3", "B5", "D4", "E8", "F4", "H3", "H4", "I2_7", "A2+A2+B3"]:
        assert parse_system_id(sid).system_id == sid
    with pytest.raises(ValueError):
        parse_system_id("Z9")


def test_representative_flip_does_not_change_known_group():
    # group orders are representative-independent: negate some lines and
    # rebuild the reflection permutations from scratch
    import rootmat.rootsystems as rs

    s = build("A", 3)
    rng = random.Random(3)
    flipped = tuple(
        tuple(-c for c in v) if rng.random() < 0.5 else v for v in s.lines
    )
    # reflections computed from non-canonical representatives still induce
    # the same line permutations after canonicalization
    for i in range(s.num_lines):
        p = reflection_perm(s, i)
        q = rs.perm_from_linear_map(s, lambda w, v=flipped[i]: rs.reflect(w, v))
        assert p == q
