"""The linear matroid of a root system: rank oracle and circuit enumeration.

Two kinds of matroid back a root system: the generic linear kind, whose
rank oracle runs exact Gaussian elimination over the scalar field
(fraction-free Bareiss on integers after clearing denominators in the
rational case), and the uniform rank-2 kind used for I2(m), where any two
lines are independent and any three dependent.

Circuits are emitted as sorted index tuples in lexicographic order, so all
dumps are byte-reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import BudgetExceededError
from .scalar import QuadExt


@dataclass(frozen=True)
class LinearMatroid:
    ground_size: int
    vectors: tuple  # empty for the uniform kind
    kind: str  # "linear" | "uniform"
    uniform_rank: int = 2

    @staticmethod
    def from_vectors(vectors) -> "LinearMatroid":
        return LinearMatroid(len(vectors), tuple(tuple(v) for v in vectors), "linear")

    @staticmethod
    def uniform(ground_size) -> "LinearMatroid":
        return LinearMatroid(ground_size, (), "uniform")


def matroid_of(system) -> LinearMatroid:
    """The matroid M(R) of a root system (uniform U_{2,m} for I2)."""
    if system.family == "I2":
        return LinearMatroid.uniform(system.rank_param)
    return LinearMatroid.from_vectors(system.lines)


# -- exact rank -----------------------------------------------------------


def _integer_rows(vectors):
    """Scale rational rows to primitive integer rows (rank-preserving)."""
    rows = []
    for v in vectors:
        denom = 1
        for c in v:
            denom = denom * c.denominator // gcd(denom, c.denominator)
        row = [int(c * denom) for c in v]
        rows.append(row)
    return rows


def _rank_bareiss(rows):
    """Rank via fraction-free (Bareiss) elimination on integer rows."""
    rows = [r[:] for r in rows]
    m = len(rows)
    if m == 0:
        return 0
    n = len(rows[0])
    rank = 0
    prev = 1
    for col in range(n):
        pivot_row = next((r for r in range(rank, m) if rows[r][col] != 0), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        piv = rows[rank][col]
        for r in range(rank + 1, m):
            factor = rows[r][col]
            for c in range(col, n):
                rows[r][c] = (piv * rows[r][c] - factor * rows[rank][c]) // prev
        prev = piv
        rank += 1
        if rank == m:
            break
    return rank


def _rank_field(rows):
    """Rank via plain exact elimination; works for any exact scalar."""
    rows = [list(r) for r in rows]
    m = len(rows)
    if m == 0:
        return 0
    n = len(rows[0])
    rank = 0
    for col in range(n):
        pivot_row = next((r for r in range(rank, m) if rows[r][col]), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        piv = rows[rank][col]
        for r in range(rank + 1, m):
            if rows[r][col]:
                factor = rows[r][col] / piv
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == m:
            break
    return rank


def _vector_rank(vectors):
    if not vectors:
        return 0
    if isinstance(vectors[0][0], QuadExt):
        return _rank_field(vectors)
    return _rank_bareiss(_integer_rows(vectors))


def rank(m: LinearMatroid, subset) -> int:
    subset = list(subset)
    for i in subset:
        if not 0 <= i < m.ground_size:
            raise IndexError(f"element {i} out of range")
    if m.kind == "uniform":
        return min(len(set(subset)), m.uniform_rank)
    return _vector_rank([m.vectors[i] for i in subset])


def is_independent(m: LinearMatroid, subset) -> bool:
    subset = list(subset)
    return rank(m, subset) == len(subset)


def is_circuit(m: LinearMatroid, subset) -> bool:
    subset = sorted(subset)
    k = len(subset)
    if k == 0 or rank(m, subset) != k - 1:
        return False
    return all(
        rank(m, subset[:i] + subset[i + 1:]) == k - 1 for i in range(k)
    )


# -- order-3 circuits -----------------------------------------------------


def _plane_key(u, v):
    """Canonical label (reduced row echelon form) of the plane span{u, v}."""
    if isinstance(u[0], QuadExt):
        rows = [list(u), list(v)]
    else:
        rows = [[Fraction(c) for c in u], [Fraction(c) for c in v]]
    # two-row RREF
    p0 = next(i for i, c in enumerate(rows[0]) if c)
    rows[0] = [c / rows[0][p0] for c in rows[0]]
    if rows[1][p0]:
        rows[1] = [a - rows[1][p0] * b for a, b in zip(rows[1], rows[0])]
    p1 = next(i for i, c in enumerate(rows[1]) if c)
    rows[1] = [c / rows[1][p1] for c in rows[1]]
    if rows[0][p1]:
        rows[0] = [a - rows[0][p1] * b for a, b in zip(rows[0], rows[1])]
    if p1 < p0:
        rows.reverse()
    return tuple(rows[0]), tuple(rows[1])


def circuits3(m: LinearMatroid):
    """All 3-element circuits, sorted lexicographically.

    No two ground elements are parallel in a root-system matroid, so a
    triple is a circuit exactly when it is coplanar; grouping elements by
    the plane spanned with a partner enumerates these without scanning
    every triple.
    """
    if m.kind == "uniform":
        return [tuple(t) for t in itertools.combinations(range(m.ground_size), 3)]
    planes = {}
    for i, j in itertools.combinations(range(m.ground_size), 2):
        key = _plane_key(m.vectors[i], m.vectors[j])
        bucket = planes.setdefault(key, set())
        bucket.add(i)
        bucket.add(j)
    out = set()
    for bucket in planes.values():
        if len(bucket) >= 3:
            out.update(itertools.combinations(sorted(bucket), 3))
    return sorted(out)


def circuits3_bruteforce(m: LinearMatroid):
    """Independent oracle for circuits3: plain scan over all triples."""
    return [
        t for t in itertools.combinations(range(m.ground_size), 3)
        if is_circuit(m, t)
    ]


# -- bounded circuit enumeration ------------------------------------------

DEFAULT_NODE_BUDGET = 5_000_000


class _Echelon:
    """Incremental exact row echelon over the scalar field (for the DFS)."""

    def __init__(self):
        self.rows = []  # reduced pivot rows
        self.pivots = []

    def reduce(self, vec):
        vec = list(vec)
        for row, p in zip(self.rows, self.pivots):
            if vec[p]:
                factor = vec[p] / row[p]
                vec = [a - factor * b for a, b in zip(vec, row)]
        return vec

    def push(self, reduced_vec):
        p = next(i for i, c in enumerate(reduced_vec) if c)
        self.rows.append(reduced_vec)
        self.pivots.append(p)

    def pop(self):
        self.rows.pop()
        self.pivots.pop()


def all_circuits_upto(m: LinearMatroid, kmax, node_budget=DEFAULT_NODE_BUDGET):
    """All circuits of order <= kmax, lexicographically sorted.

    Depth-first over independent sets in lexicographic order; a set is
    only extended while independent (every circuit is some independent
    prefix plus one dependent element).  Raises BudgetExceededError when
    the search frontier exceeds node_budget nodes.
    """
    if m.kind == "uniform":
        if kmax < 3:
            return []
        return [tuple(t) for t in itertools.combinations(range(m.ground_size), 3)]

    frac = [[Fraction(c) for c in v] if not isinstance(v[0], QuadExt) else list(v)
            for v in m.vectors]
    out = []
    ech = _Echelon()
    nodes = 0

    def extend(current):
        nonlocal nodes
        start = current[-1] + 1 if current else 0
        for k in range(start, m.ground_size):
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceededError("all_circuits_upto", node_budget)
            reduced = ech.reduce(frac[k])
            if any(reduced):
                if len(current) + 1 < kmax:
                    ech.push(reduced)
                    extend(current + [k])
                    ech.pop()
            else:
                cand = current + [k]
                if is_circuit(m, cand):
                    out.append(tuple(cand))

    extend([])
    return sorted(out)


# -- combinatorial circuit shapes for the classical families --------------


def classical_circuits(system, kmax, node_budget=DEFAULT_NODE_BUDGET):
    """Circuits of an A/B/D system from their graph shapes, no linear algebra.

    Encode each line as an edge or mark on the vertex set {e_1..e_N}:
    a black edge {i,j} is the line e_i - e_j, a red edge is e_i + e_j, a
    mark on i is the line e_i.  Circuits are exactly:

      A_n: cycles (black edges only);
      D_n: cycles with an even number of red edges, or two odd-red cycles
           (length 2 allowed: the red+black digon) joined by a path, which
           may be trivial when the cycles share a vertex;
      B_n: the D_n shapes, or a path whose two end vertices are marked, or
           an odd-red cycle joined by a (possibly trivial) path to a single
           marked vertex.

    The circuit order is the number of edges plus the number of marks.
    """
    fam = system.family
    if fam not in ("A", "B", "D"):
        raise ValueError("classical_circuits covers the A, B, D families only")
    n = system.rank_param
    nverts = n + 1 if fam == "A" else n
    index = _classical_line_index(system, fam, n)
    out = set()
    budget = [node_budget]

    def emit(edges, marks=()):
        lines = [index[e] for e in edges] + [index[("mark", i)] for i in marks]
        out.add(tuple(sorted(lines)))

    if fam == "A":
        for edges in _cycles(nverts, kmax, colored=False, budget=budget):
            emit(edges)
        return sorted(out)

    for edges in _cycles(nverts, kmax, colored=True, budget=budget):
        if _red_count(edges) % 2 == 0:
            emit(edges)
    for edges in _dumbbells(nverts, kmax, budget):
        emit(edges)
    if fam == "D":
        return sorted(out)

    # B_n extras: marked paths and odd-red cycles with one marked vertex.
    for edges, ends in _paths(nverts, kmax - 2, budget):
        emit(edges, marks=ends)
    for edges, mark in _cycle_with_tail(nverts, kmax - 1, budget):
        emit(edges, marks=(mark,))
    return sorted(out)


def _classical_line_index(system, fam, n):
    from .rootsystems import canonical_line  # local import avoids a cycle

    index = {}
    dim = len(system.lines[0])
    for label, vec in _classical_line_vectors(fam, n, dim):
        index[label] = system.lines.index(canonical_line(vec))
    return index


def _classical_line_vectors(fam, n, dim):
    nverts = n + 1 if fam == "A" else n
    for i in range(nverts):
        for j in range(i + 1, nverts):
            black = [Fraction(0)] * dim
            black[i], black[j] = Fraction(1), Fraction(-1)
            yield ("black", i, j), black
            if fam != "A":
                red = [Fraction(0)] * dim
                red[i], red[j] = Fraction(1), Fraction(1)
                yield ("red", i, j), red
    if fam == "B":
        for i in range(nverts):
            mark = [Fraction(0)] * dim
            mark[i] = Fraction(1)
            yield ("mark", i), mark


def _edge(color, i, j):
    return (color, i, j) if i < j else (color, j, i)


def _red_count(edges):
    return sum(1 for e in edges if e[0] == "red")


def _spend(budget):
    budget[0] -= 1
    if budget[0] < 0:
        raise BudgetExceededError("classical_circuits", budget[0])


def _cycles(nverts, max_edges, colored, budget):
    """All cycle edge sets with <= max_edges edges (length >= 3 here;
    digons only occur inside dumbbells)."""
    seen = set()
    for size in range(3, max_edges + 1):
        for verts in itertools.combinations(range(nverts), size):
            for order in _cyclic_orders(verts):
                edges_plain = [
                    (order[k], order[(k + 1) % size]) for k in range(size)
                ]
                colorings = (
                    itertools.product(("black", "red"), repeat=size)
                    if colored
                    else [("black",) * size]
                )
                for colors in colorings:
                    _spend(budget)
                    edges = frozenset(
                        _edge(c, a, b) for c, (a, b) in zip(colors, edges_plain)
                    )
                    if len(edges) == size and edges not in seen:
                        seen.add(edges)
                        yield edges


def _cyclic_orders(verts):
    """Vertex orders modulo rotation and reflection (fix the first vertex)."""
    first, rest = verts[0], verts[1:]
    for perm in itertools.permutations(rest):
        if len(perm) < 2 or perm[0] < perm[-1]:
            yield (first,) + perm


def _odd_cycles_on(verts, budget):
    """Odd-red cycle edge sets covering exactly the given vertices."""
    if len(verts) == 2:
        i, j = verts
        _spend(budget)
        yield frozenset({_edge("black", i, j), _edge("red", i, j)}), 2
        return
    size = len(verts)
    for order in _cyclic_orders(tuple(verts)):
        edges_plain = [(order[k], order[(k + 1) % size]) for k in range(size)]
        for colors in itertools.product(("black", "red"), repeat=size):
            if colors.count("red") % 2 == 0:
                continue
            _spend(budget)
            edges = frozenset(
                _edge(c, a, b) for c, (a, b) in zip(colors, edges_plain)
            )
            if len(edges) == size:
                yield edges, size


def _simple_paths(start, end, avoid, nverts, max_edges, budget):
    """Colored simple paths from start to end avoiding the given vertices."""
    def walk(v, used, edges):
        if len(edges) > max_edges:
            return
        if v == end:
            yield frozenset(edges)
            return
        for w in range(nverts):
            if w in used or (w in avoid and w != end):
                continue
            for color in ("black", "red"):
                _spend(budget)
                yield from walk(w, used | {w}, edges + [_edge(color, v, w)])

    if start == end:
        yield frozenset()
        return
    yield from walk(start, {start} | (avoid - {end}), [])


def _dumbbells(nverts, max_edges, budget):
    """Two odd-red cycles joined by a (possibly trivial) path."""
    verts = range(nverts)
    for size1 in range(2, nverts + 1):
        for vs1 in itertools.combinations(verts, size1):
            for cyc1, e1 in _odd_cycles_on(vs1, budget):
                if e1 + 2 > max_edges:
                    continue
                # second cycle shares exactly one vertex (trivial path)...
                for size2 in range(2, nverts + 1):
                    for vs2 in itertools.combinations(verts, size2):
                        common = set(vs1) & set(vs2)
                        if len(common) == 1:
                            for cyc2, e2 in _odd_cycles_on(vs2, budget):
                                if e1 + e2 <= max_edges and vs2 > vs1:
                                    pass
                                if e1 + e2 <= max_edges:
                                    yield cyc1 | cyc2
                        elif not common:
                            # ...or is disjoint, joined by a nonempty path
                            for cyc2, e2 in _odd_cycles_on(vs2, budget):
                                room = max_edges - e1 - e2
                                if room < 1:
                                    continue
                                for a in vs1:
                                    for b in vs2:
                                        avoid = (set(vs1) | set(vs2)) - {b}
                                        for path in _simple_paths(
                                            a, b, avoid, nverts, room, budget
                                        ):
                                            if path:
                                                yield cyc1 | cyc2 | path


def _paths(nverts, max_edges, budget):
    """Simple colored paths with both (distinct) endpoints marked."""
    for a in range(nverts):
        for b in range(a + 1, nverts):
            for path in _simple_paths(a, b, set(), nverts, max_edges, budget):
                if path:
                    yield path, (a, b)


def _cycle_with_tail(nverts, max_edges, budget):
    """Odd-red cycle plus a (possibly trivial) path to one marked vertex."""
    verts = range(nverts)
    for size in range(2, nverts + 1):
        for vs in itertools.combinations(verts, size):
            for cyc, e in _odd_cycles_on(vs, budget):
                if e > max_edges:
                    continue
                for mark in vs:  # trivial path: mark on the cycle
                    yield cyc, mark
                room = max_edges - e
                if room < 1:
                    continue
                for a in vs:
                    for mark in verts:
                        if mark in vs:
                            continue
                        avoid = set(vs) - {a}
                        for path in _simple_paths(
                            a, mark, avoid | set(vs) - {a, mark}, nverts, room, budget
                        ):
                            if path:
                                yield cyc | path, mark
