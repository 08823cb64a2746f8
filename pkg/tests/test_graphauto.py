import random

import pytest

from rootmat.errors import BudgetExceededError
from rootmat.graphauto import automorphism_group, initial_partition, refine
from rootmat.incidencegraph import build_incidence, graph_from_edges, restrict_to_ground
from rootmat.linmatroid import circuits3, matroid_of
from rootmat.permgrp import bsgs
from rootmat.rootsystems import build


def _cycle(n):
    return graph_from_edges(n, [0] * n, [(i, (i + 1) % n) for i in range(n)])


def test_refine_regular_graph_stays_coarse():
    g = _cycle(6)
    assert refine(g, initial_partition(g)) == [list(range(6))]


def test_refine_path_splits_by_degree():
    g = graph_from_edges(3, [0, 0, 0], [(0, 1), (1, 2)])
    assert refine(g, [[0, 1, 2]]) == [[0, 2], [1]]


def test_refine_discrete_unchanged():
    g = _cycle(4)
    discrete = [[0], [1], [2], [3]]
    assert refine(g, discrete) == discrete


def test_triangle_group():
    g = _cycle(3)
    assert bsgs(automorphism_group(g), degree=3).order() == 6


def test_square_group():
    assert bsgs(automorphism_group(_cycle(4)), degree=4).order() == 8


def test_petersen_group():
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i + 5, (i + 2) % 5 + 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    g = graph_from_edges(10, [0] * 10, edges)
    assert bsgs(automorphism_group(g), degree=10).order() == 120


def test_colors_restrict_group():
    # a 4-cycle with one vertex colored differently only keeps the mirror
    g = graph_from_edges(4, [1, 0, 0, 0], [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert bsgs(automorphism_group(g), degree=4, base_hint=[0]).order() == 2


def test_generators_are_verified_automorphisms():
    g = _cycle(5)
    for p in automorphism_group(g):
        for u in range(5):
            assert {p[w] for w in g.adjacency[u]} == g.adjacency[p[u]]


def test_a3_incidence_ground_group():
    s = build("A", 3)
    g = build_incidence(s.num_lines, circuits3(matroid_of(s)))
    gens = automorphism_group(g)
    ground = bsgs([restrict_to_ground(p, 6) for p in gens], degree=6)
    assert ground.order() == 24


def test_relabeling_equivariance():
    rng = random.Random(5)
    s = build("B", 3)
    c3 = circuits3(matroid_of(s))
    g = build_incidence(s.num_lines, c3)
    order = bsgs(automorphism_group(g), degree=g.num_vertices).order()
    for _ in range(3):
        # relabel within each color class
        ground_perm = rng.sample(range(s.num_lines), s.num_lines)
        relabeled = [
            frozenset(ground_perm[i] for i in c) for c in c3
        ]
        rng.shuffle(relabeled)
        g2 = build_incidence(s.num_lines, relabeled)
        group2 = bsgs(automorphism_group(g2), degree=g2.num_vertices)
        assert group2.order() == order
        # conjugates of ground restrictions agree as groups
        ground1 = bsgs([restrict_to_ground(p, s.num_lines)
                        for p in automorphism_group(g)], degree=s.num_lines)
        inv = [0] * s.num_lines
        for i, x in enumerate(ground_perm):
            inv[x] = i
        for p in group2.generators:
            conj = tuple(inv[restrict_to_ground(p, s.num_lines)[ground_perm[i]]]
                         for i in range(s.num_lines))
            assert ground1.contains(conj)


def test_budget_error():
    s = build("E6")
    g = build_incidence(s.num_lines, circuits3(matroid_of(s)))
    with pytest.raises(BudgetExceededError):
        automorphism_group(g, node_budget=3)


def test_asymmetric_graph_has_trivial_group():
    # path with a pendant triangle: only the identity
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (2, 4), (4, 5)]
    g = graph_from_edges(6, [0] * 6, edges)
    assert automorphism_group(g) == []
